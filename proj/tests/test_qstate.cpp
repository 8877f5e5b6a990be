#include <gtest/gtest.h>

#include <cmath>

#include "triqent/entanglement.hpp"
#include "triqent/polytope.hpp"
#include "triqent/qstate.hpp"

using namespace triqent;

namespace {

const double s2 = 1.0 / std::sqrt(2.0);
const double s3 = 1.0 / std::sqrt(3.0);

void expect_amp(const PureState3& s, const std::array<cplx, 8>& want, double tol = 1e-15) {
  for (int i = 0; i < 8; ++i) {
    EXPECT_NEAR(s.amp[i].real(), want[i].real(), tol) << "i=" << i;
    EXPECT_NEAR(s.amp[i].imag(), want[i].imag(), tol) << "i=" << i;
  }
}

}  // namespace

TEST(Normalize, Scaling) {
  expect_amp(normalize(std::array<cplx, 8>{2, 0, 0, 0, 0, 0, 0, 0}), {1, 0, 0, 0, 0, 0, 0, 0});
}

TEST(Normalize, GhzAndGlobalPhase) {
  expect_amp(normalize(std::array<cplx, 8>{1, 0, 0, 0, 0, 0, 0, 1}), {s2, 0, 0, 0, 0, 0, 0, s2});
  const cplx i(0, 1);
  expect_amp(normalize(std::array<cplx, 8>{i, 0, 0, 0, 0, 0, 0, i}), {s2, 0, 0, 0, 0, 0, 0, s2});
}

TEST(Normalize, ZeroVectorThrows) {
  try {
    normalize(std::array<cplx, 8>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(LocalUnitary, IdentityAndFlip) {
  expect_amp(apply_local_unitary(states::ghz(), {Mat2::Identity(), Qubit::A}), states::ghz().amp);
  Mat2 x;
  x << 0, 1, 1, 0;
  expect_amp(apply_local_unitary(states::zero(), {x, Qubit::B}), states::basis(0, 1, 0).amp);
}

TEST(LocalUnitary, NonUnitaryRejected) {
  Mat2 m;
  m << 1, 1, 0, 1;
  EXPECT_THROW(apply_local_unitary(states::w(), {m, Qubit::C}), Error);
}

TEST(LocalUnitary, ScrambledWKeepsInvariants) {
  Rng rng(7);
  const PureState3 s = apply_local_unitary(states::w(), {haar_unitary(rng), Qubit::C});
  EXPECT_NEAR(tangle(s), 0.0, 1e-14);
  for (double r : bloch_triple(s).r) EXPECT_NEAR(r, 1.0 / 3.0, 1e-14);
}

TEST(Slice, ReadOff) {
  const auto g = slice(states::ghz(), Qubit::A);
  EXPECT_NEAR(std::abs(g.t0(0, 0)), s2, 1e-15);
  EXPECT_NEAR(g.t0.cwiseAbs().sum(), s2, 1e-15);
  EXPECT_NEAR(std::abs(g.t1(1, 1)), s2, 1e-15);
  EXPECT_NEAR(g.t1.cwiseAbs().sum(), s2, 1e-15);

  const auto z = slice(states::zero(), Qubit::B);
  EXPECT_NEAR(std::abs(z.t0(0, 0)), 1.0, 1e-15);
  EXPECT_EQ(z.t1.cwiseAbs().sum(), 0.0);

  const auto w = slice(states::w(), Qubit::A);
  EXPECT_NEAR(w.t0(0, 1).real(), s3, 1e-15);
  EXPECT_NEAR(w.t0(1, 0).real(), s3, 1e-15);
  EXPECT_NEAR(std::abs(w.t0(0, 0)) + std::abs(w.t0(1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(w.t1(0, 0).real(), s3, 1e-15);
  EXPECT_NEAR(std::abs(w.t1(0, 1)) + std::abs(w.t1(1, 0)) + std::abs(w.t1(1, 1)), 0.0, 1e-15);
}

TEST(Slice, RoundTripEveryAxis) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PureState3 s = sample_haar(seed);
    for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) EXPECT_EQ(reassemble(slice(s, q)), s.amp);
  }
}

TEST(Haar, NormalizedAndDeterministic) {
  const PureState3 a = sample_haar(1), b = sample_haar(1);
  EXPECT_EQ(a, b);
  EXPECT_NEAR(a.vec().norm(), 1.0, 1e-12);
  EXPECT_NE(sample_haar(1), sample_haar(2));
}

TEST(Haar, PermutationSymmetry) {
  const int n = 10000;
  double ma = 0, mb = 0, va = 0;
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    const auto bt = bloch_triple(sample_haar(derive_seed(99, i)));
    d[i] = bt.ra() - bt.rb();
    ma += bt.ra() / n;
    mb += bt.rb() / n;
  }
  const double mean = ma - mb;
  for (double x : d) va += (x - mean) * (x - mean) / (n - 1);
  EXPECT_LT(std::abs(mean), 3.0 * std::sqrt(va / n));
}

TEST(Rng, DeriveSeedIsStable) {
  // splitmix64 reference outputs for state 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_NE(derive_seed(5, 0), derive_seed(5, 1));
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

TEST(Sampler, TypeTwoBOnDiagonal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto bt = bloch_triple(sample_type(Family::F2b, seed));
    EXPECT_NEAR(bt.ra(), bt.rb(), 1e-10);
    EXPECT_NEAR(bt.rb(), bt.rc(), 1e-10);
  }
}

TEST(Sampler, TypeThreeAOnFace) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState3 s = sample_type(Family::F3a, seed);
    const auto bt = bloch_triple(s);
    EXPECT_LT(tangle(s), 1e-10);
    bool on_face = false;
    for (const auto& sg : face_signs()) {
      Region r;
      r.kind = RegionKind::Face;
      r.signs = sg;
      r.tol = 1e-10;
      on_face = on_face || membership(bt, r);
    }
    EXPECT_TRUE(on_face);
  }
}

TEST(Sampler, TypeOneIsProduct) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (double r : bloch_triple(sample_type(Family::F1, seed)).r) EXPECT_NEAR(r, 1.0, 1e-10);
}

TEST(NamedState, KnownAndUnknown) {
  EXPECT_EQ(named_state("ghz"), states::ghz());
  EXPECT_EQ(named_state("w"), states::w());
  EXPECT_THROW(named_state("bell"), Error);
}
