#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "triqent/chains.hpp"
#include "triqent/entanglement.hpp"

using namespace triqent;

namespace {

using Vals = std::vector<double>;

Vals expand(const std::vector<Level>& levels) {
  Vals out;
  for (const auto& l : levels)
    for (int i = 0; i < l.multiplicity; ++i) out.push_back(l.energy);
  std::sort(out.begin(), out.end());
  return out;
}

Vals numeric(Model m, double d) {
  const auto es = eigensystem(build_hamiltonian(make_model(m, d)));
  return Vals(es.values.data(), es.values.data() + 8);
}

double overlap(const PureState3& a, const PureState3& b) { return std::abs(a.vec().dot(b.vec())); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::BadInput;
}

const Model kModels[] = {Model::TFIM, Model::XX, Model::XXX, Model::XZX};

}  // namespace

TEST(Hamiltonian, Examples) {
  const Mat8 t = build_hamiltonian(make_model(Model::TFIM, 0.0));
  EXPECT_NEAR(std::abs(t(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(numeric(Model::TFIM, 0.0)[0], -3.0, 1e-12);
  EXPECT_NEAR(std::abs(build_hamiltonian(make_model(Model::XX, 0.0)).trace()), 0.0, 1e-15);
  const Vals want{-3, -1, -1, -1, 1, 1, 1, 3};
  const Vals got = numeric(Model::XZX, 0.0);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
}

TEST(Hamiltonian, HermitianAndDomain) {
  for (Model m : kModels) {
    const Mat8 h = build_hamiltonian(make_model(m, 0.9));
    EXPECT_LT((h - h.adjoint()).norm(), 1e-15);
  }
  EXPECT_EQ(code_of([] { make_model(Model::TFIM, -0.1); }), ErrorCode::OutOfDomain);
  EXPECT_NO_THROW(make_model(Model::XXX, -0.5));
}

TEST(Hamiltonian, PauliStringSiteOrder) {
  // Z on site 0 is the most significant bit
  const Mat8 z0 = pauli_string("ZII");
  EXPECT_EQ(z0(0, 0).real(), 1.0);
  EXPECT_EQ(z0(4, 4).real(), -1.0);
  EXPECT_EQ(z0(1, 1).real(), 1.0);
  EXPECT_TRUE(perturbation_z0(0.5).isApprox(0.5 * z0));
}

TEST(Eigensystem, DiagonalInput) {
  Mat8 h = Mat8::Zero();
  const double d[8] = {3, -1, 4, 1, -5, 9, 2, 6};
  for (int i = 0; i < 8; ++i) h(i, i) = d[i];
  const auto es = eigensystem(h);
  Vals sorted(d, d + 8);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(es.values(i), sorted[i]);
    EXPECT_NEAR(es.vectors.col(i).cwiseAbs().maxCoeff(), 1.0, 1e-15);
  }
}

TEST(Eigensystem, RejectsNonHermitian) {
  Mat8 h = Mat8::Zero();
  h(0, 1) = 1.0;
  EXPECT_THROW(eigensystem(h), Error);
}

TEST(Eigensystem, NumpyReferenceSpectra) {
  // numpy.linalg.eigvalsh at delta = 0.7
  const std::pair<Model, Vals> ref[] = {
      {Model::TFIM, {-3.4776388834631184, -3.2597297173897495, 0.077638883463118, 0.3, 0.3, 1.7,
                     1.7, 2.659729717389749}},
      {Model::XX, {-4.7, -3.3, -2.1, 1.3, 1.3, 2.1, 2.7, 2.7}},
      {Model::XXX, {-2.7, -2.7, -2.7, -2.7, 2.1, 2.1, 3.3, 3.3}},
      {Model::XZX, {-3.259729717389749, -2.659729717389747, -0.3, -0.3, 0.3, 0.3,
                    2.659729717389748, 3.2597297173897486}},
  };
  for (const auto& [m, want] : ref) {
    const Vals got = numeric(m, 0.7), closed = expand(closed_form_spectrum(m, 0.7));
    for (int i = 0; i < 8; ++i) {
      EXPECT_NEAR(got[i], want[i], 1e-12) << to_string(m);
      EXPECT_NEAR(closed[i], want[i], 1e-12) << to_string(m);
    }
  }
}

TEST(Spectrum, TfimHalf) {
  const auto lv = closed_form_spectrum(Model::TFIM, 0.5);
  ASSERT_EQ(lv.size(), 6u);
  EXPECT_EQ(lv[3].multiplicity, 2);
  EXPECT_EQ(lv[4].multiplicity, 2);
  EXPECT_EQ(merge_levels(lv).size(), 6u);
}

TEST(Spectrum, XxxAtOne) {
  const auto lv = closed_form_spectrum(Model::XXX, 1.0);
  EXPECT_NEAR(lv[0].energy, 3.0, 1e-15);
  EXPECT_EQ(lv[0].multiplicity, 2);
  EXPECT_NEAR(lv[1].energy, 3.0, 1e-15);
  EXPECT_EQ(lv[1].multiplicity, 2);
  EXPECT_NEAR(lv[2].energy, -3.0, 1e-15);
  EXPECT_EQ(lv[2].multiplicity, 4);
  const auto merged = merge_levels(lv);
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0].multiplicity, 4);
  EXPECT_EQ(merged[1].multiplicity, 4);
}

TEST(Spectrum, Coincidences) {
  auto e = closed_form_spectrum(Model::TFIM, 1.0);
  EXPECT_NEAR(e[2].energy, 0.0, 1e-15);
  EXPECT_NEAR(e[3].energy, 0.0, 1e-15);
  EXPECT_EQ(coincident_levels(Model::TFIM, 2, 1.0), std::vector<int>{3});

  const auto x = closed_form_spectrum(Model::XZX, 0.0);
  const std::pair<double, int> want[] = {{-3, 1}, {-1, 1}, {-1, 2}, {1, 2}, {1, 1}, {3, 1}};
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(x[i].energy, want[i].first, 1e-15);
    EXPECT_EQ(x[i].multiplicity, want[i].second);
  }
  const auto mx = merge_levels(x);
  ASSERT_EQ(mx.size(), 4u);
  EXPECT_EQ(mx[1].multiplicity, 3);
  EXPECT_EQ(mx[2].multiplicity, 3);

  const Vals xx{-4.5, -3.5, -1.5, 1.5, 1.5, 2.5};
  const auto l = closed_form_spectrum(Model::XX, 0.5);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(l[i].energy, xx[i], 1e-15);
  EXPECT_EQ(coincident_levels(Model::XX, 3, 0.5), std::vector<int>{4});
}

TEST(Eigenstate, Examples) {
  // f0 = sqrt3, g0 = sqrt6 at delta = 1/2
  std::array<cplx, 8> a{};
  a[0] = std::sqrt(3.0);
  a[idx(0, 1, 1)] = a[idx(1, 0, 1)] = a[idx(1, 1, 0)] = 1.0;
  EXPECT_NEAR(overlap(closed_form_eigenstate(Model::TFIM, 0, 0.5), normalize(a)), 1.0, 1e-14);
  for (double d : {0.2, 1.9}) EXPECT_NEAR(overlap(closed_form_eigenstate(Model::XX, 0, d), states::w()), 1.0, 1e-14);

  const cplx al = std::polar(0.6, 0.4);
  const auto s = closed_form_eigenstate(Model::XXX, 0, 0.2, params_ab(al, 0.8));
  EXPECT_NEAR(std::abs(s.amp[0]), 0.8, 1e-15);
  EXPECT_NEAR(std::abs(s.amp[7]), 0.6, 1e-15);
  EXPECT_NEAR(std::arg(s.amp[7] / s.amp[0]), 0.4, 1e-14);
}

TEST(Eigenstate, Errors) {
  EXPECT_EQ(code_of([] { closed_form_eigenstate(Model::TFIM, 3, 0.5); }), ErrorCode::NeedParams);
  EXPECT_EQ(code_of([] { closed_form_eigenstate(Model::TFIM, 2, 1.0); }), ErrorCode::CrossingPoint);
  EXPECT_NO_THROW(closed_form_eigenstate(Model::TFIM, 2, 1.0, std::nullopt, true));
  EXPECT_EQ(code_of([] { closed_form_eigenstate(Model::TFIM, 0, -1.0); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { closed_form_eigenstate(Model::TFIM, 3, 0.5, params_ab(1.0, 1.0)); }),
            ErrorCode::BadNormalization);
}

TEST(Eigenstate, ResidualsOnAGrid) {
  for (Model m : kModels)
    for (double d : linspace(m == Model::XXX ? -2.0 : 0.05, 3.0, 23)) {
      const Mat8 h = build_hamiltonian(make_model(m, d));
      const auto lv = closed_form_spectrum(m, d);
      for (int n = 0; n < num_levels(m); ++n) {
        std::optional<SuperpositionParams> p;
        if (lv[n].multiplicity == 2) p = degenerate_grid()[13];
        if (lv[n].multiplicity == 4) p = SuperpositionParams{{0.5, cplx(0, 0.5), -0.5, 0.5}};
        const Vec8 v = closed_form_eigenstate(m, n, d, p, true).vec();
        EXPECT_LT((h * v - lv[n].energy * v).norm(), 1e-12) << to_string(m) << " n=" << n << " d=" << d;
      }
    }
}

TEST(Tangle, ClosedFormExamples) {
  EXPECT_NEAR(closed_form_tangle(Model::TFIM, 0, 0.0, std::nullopt, true), 1.0, 1e-15);
  EXPECT_NEAR(closed_form_tangle(Model::TFIM, 0, 1e-2), 1.0, 1e-3);
  const double h = 1 / std::sqrt(2.0);
  EXPECT_NEAR(closed_form_tangle(Model::XXX, 0, 0.3, params_ab(h, h)), 1.0, 1e-15);
}

TEST(Tangle, XzxLevelOneOracleAndMisprint) {
  const double oracle = tangle(closed_form_eigenstate(Model::XZX, 1, 0.0, std::nullopt, true));
  EXPECT_NEAR(oracle, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(closed_form_tangle(Model::XZX, 1, 0.0, std::nullopt, true), oracle, 1e-14);
  // the printed 48 f0 / g0^2 is not a tangle at all here
  EXPECT_NEAR(xzx_tau1_printed(0.0), 4.0, 1e-14);
  EXPECT_GT(std::abs(xzx_tau1_printed(0.0) - oracle), 1.0);
  for (double d : {0.3, 1.1, 2.6})
    EXPECT_GT(std::abs(xzx_tau1_printed(d) - tangle(closed_form_eigenstate(Model::XZX, 1, d))), 0.1);
}

TEST(Tangle, NumpyEigenvectorReference) {
  EXPECT_NEAR(closed_form_tangle(Model::TFIM, 0, 0.7), 0.5812822293093322, 1e-12);
  EXPECT_NEAR(tfim_bloch_closed(0, 0.7), 0.48334505345680273, 1e-12);
  EXPECT_NEAR(closed_form_tangle(Model::XZX, 0, 0.7), 0.8157883892526249, 1e-12);
}

TEST(Tangle, ClosedFormsMatchHyperdeterminant) {
  for (Model m : kModels)
    for (double d : linspace(m == Model::XXX ? -2.0 : 0.0, m == Model::XXX ? 2.0 : 4.0, 41))
      for (int n = 0; n < num_levels(m); ++n) {
        const int mult = closed_form_spectrum(m, d)[n].multiplicity;
        std::vector<std::optional<SuperpositionParams>> ps;
        if (mult == 1) ps.push_back(std::nullopt);
        if (mult == 2)
          for (int j : {0, 7, 22, 39}) ps.push_back(degenerate_grid()[j]);
        if (mult == 4) ps.push_back(SuperpositionParams{{0.1, cplx(0.3, 0.4), cplx(0, -0.5), std::sqrt(0.49)}});
        for (const auto& p : ps)
          EXPECT_NEAR(closed_form_tangle(m, n, d, p, true),
                      tangle(closed_form_eigenstate(m, n, d, p, true)), 1e-12)
              << to_string(m) << " n=" << n << " d=" << d;
      }
}

TEST(Crossing, TfimMergedSubspace) {
  const Mat8 h = build_hamiltonian(make_model(Model::TFIM, 1.0));
  EXPECT_NEAR(tfim_crossing_tangle(1.0, 0.0, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(tangle(tfim_crossing_state(1.0, 0.0, 0.0)), 1.0, 1e-15);
  const double h2 = 1 / std::sqrt(2.0);
  EXPECT_LT(tangle(tfim_crossing_state(0.0, h2, cplx(0, h2))), 1e-15);
  const cplx g(0.5, 0.2), a(0.3, -0.4), b = std::sqrt(1 - std::norm(g) - std::norm(a));
  const PureState3 s = tfim_crossing_state(g, a, b);
  EXPECT_LT((h * s.vec()).norm(), 1e-14);
  EXPECT_NEAR(tangle(s), tfim_crossing_tangle(g, a, b), 1e-14);
}

TEST(Labels, Examples) {
  auto l = symmetry_labels(states::w());
  EXPECT_EQ(l.k, 0);
  EXPECT_FALSE(l.p.has_value());
  EXPECT_EQ(l.m_z, 1);
  EXPECT_EQ(symmetry_labels(states::wt1()).k, 1);
  EXPECT_EQ(symmetry_labels(states::wt2()).k, 2);
  l = symmetry_labels(states::ghz());
  EXPECT_EQ(l.k, 0);
  EXPECT_EQ(l.p, 1);
  EXPECT_FALSE(l.m_z.has_value());
  EXPECT_EQ(l.reflection, 1);
}

TEST(BlochFamily, Examples) {
  const double h = 1 / std::sqrt(2.0);
  auto b = degenerate_bloch_family(Model::TFIM, 3, params_ab(0.0, 1.0));
  for (double r : b.r) EXPECT_NEAR(r, 1.0 / 3.0, 1e-15);
  b = degenerate_bloch_family(Model::TFIM, 3, params_ab(h, h));
  EXPECT_NEAR(b.ra(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(b.rb(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(b.rc(), 1.0 / 3.0, 1e-15);
  const auto num = bloch_triple(closed_form_eigenstate(Model::TFIM, 3, 0.4, params_ab(h, h)));
  for (int q = 0; q < 3; ++q) EXPECT_NEAR(num.r[q], b.r[q], 1e-14);
  EXPECT_EQ(code_of([] { degenerate_bloch_family(Model::TFIM, 0, params_ab(1.0, 0.0)); }),
            ErrorCode::NotDegenerate);
  EXPECT_EQ(code_of([] { degenerate_bloch_family(Model::XXX, 0, params_ab(1.0, 0.0)); }),
            ErrorCode::UnsupportedType);
}

TEST(Sweep, TfimCrossingFlags) {
  SweepOptions o;
  o.threads = 2;
  std::set<double> at;
  for (const auto& r : sweep(Model::TFIM, linspace(0.0, 4.0, 401), o))
    if (r.crossing) at.insert(r.delta);
  EXPECT_EQ(at, (std::set<double>{0.0, 1.0}));
}

TEST(Sweep, XxConstantTangleAndXzxDiagonal) {
  SweepOptions o;
  for (const auto& r : sweep(Model::XX, linspace(0.1, 3.9, 39), o))
    if (r.n <= 1) EXPECT_NEAR(r.tau_numeric, 0.0, 1e-12);
  for (const auto& r : sweep(Model::XZX, linspace(0.1, 3.9, 39), o))
    if (r.multiplicity == 1 && !r.crossing) {
      EXPECT_NEAR(r.r.ra(), r.r.rb(), 1e-10);
      EXPECT_NEAR(r.r.rb(), r.r.rc(), 1e-10);
    }
}

TEST(Sweep, ThreadInvariantAndGridChecked) {
  SweepOptions a, b;
  a.policy = b.policy = ParamsPolicy::MonteCarlo;
  a.mc_samples = b.mc_samples = 5;
  a.seed = b.seed = 77;
  a.threads = 1;
  b.threads = 4;
  const auto x = sweep(Model::XXX, linspace(-2.0, 2.0, 21), a);
  const auto y = sweep(Model::XXX, linspace(-2.0, 2.0, 21), b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].tau_numeric, y[i].tau_numeric);
    EXPECT_EQ(x[i].energy_numeric, y[i].energy_numeric);
  }
  EXPECT_EQ(code_of([&] { sweep(Model::TFIM, {0.0, 0.5, 0.5}, a); }), ErrorCode::BadInput);
}

TEST(Perturbation, DegenerateOriginTangleCollapses) {
  for (Model m : {Model::XX, Model::XXX})
    for (double d : {0.3, 1.5}) {
      const Mat8 h = build_hamiltonian(make_model(m, d)) + perturbation_z0(1e-3);
      const auto es = eigensystem(h);
      for (int i = 0; i < 8; ++i) EXPECT_LT(tangle(normalize(Vec8(es.vectors.col(i)))), 1e-2);
    }
}
