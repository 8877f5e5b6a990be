#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "commands.hpp"
#include "triqent/canonical.hpp"
#include "triqent/chains.hpp"
#include "triqent/entanglement.hpp"
#include "triqent/parallel.hpp"
#include "triqent/polytope.hpp"
#include "triqent/qstate.hpp"

namespace triqent::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::size_t scaled(double n, const VerifyOptions& o) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(n * o.scale)));
}

// Largest value of f(i) over [0, n).
double par_max(std::size_t n, int threads, const std::function<double(std::size_t)>& f) {
  std::vector<double> v(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) { v[i] = f(i); });
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

std::array<double, 7> invariants7(const PureState3& s) {
  const auto bt = bloch_triple(s);
  const auto c = concurrences(s);
  return {bt.r[0], bt.r[1], bt.r[2], c.c_ab, c.c_ac, c.c_bc, tangle(s)};
}

double dominant_sq(const BlochTriple& bt, EntType t) {
  switch (t) {
    case EntType::T3b12: return bt.rc() * bt.rc();
    case EntType::T3b23: return bt.ra() * bt.ra();
    default: return bt.rb() * bt.rb();
  }
}

struct Draw {
  Stratum st;
  StratumDraw d;
};

Draw draw_family(Family f, std::uint64_t seed) {
  const auto options = strata_of(f);
  const Stratum st = options[splitmix64(seed ^ 0xA5A5A5A5ULL) % options.size()];
  return {st, draw_stratum(st, seed)};
}

std::vector<double> model_grid(Model m) {
  return m == Model::XXX ? linspace(-2.0, 2.0, 101) : linspace(0.0, 4.0, 101);
}

std::vector<SuperpositionParams> probe_params(int mult, std::uint64_t seed) {
  std::vector<SuperpositionParams> out;
  if (mult == 2) {
    const auto g = degenerate_grid();
    for (int j : {0, 9, 18, 27, 36, 39}) out.push_back(g[j]);
    return out;
  }
  for (int j = 0; j < 4; ++j) {
    Rng rng(derive_seed(seed, j));
    SuperpositionParams p;
    double n2 = 0.0;
    for (int i = 0; i < mult; ++i) {
      p.c.push_back(rng.cnormal());
      n2 += std::norm(p.c.back());
    }
    for (auto& x : p.c) x /= std::sqrt(n2);
    out.push_back(p);
  }
  return out;
}

CheckResult c1() {
  double e = 0.0;
  const auto ghz = states::ghz(), w = states::w();
  e = std::max(e, std::abs(tangle(ghz) - 1.0));
  e = std::max(e, std::abs(tangle(w)));
  const auto rw = bloch_triple(w), rg = bloch_triple(ghz);
  for (int q = 0; q < 3; ++q) {
    e = std::max(e, std::abs(rw.r[q] - 1.0 / 3.0));
    e = std::max(e, std::abs(rg.r[q]));
  }
  const auto cg = canonical_decompose(ghz), cw = canonical_decompose(w);
  const double h = 1.0 / std::sqrt(2.0), t = 1.0 / std::sqrt(3.0);
  const std::array<double, 5> eg{h, 0, 0, 0, h}, ew{t, 0, t, t, 0};
  for (int j = 0; j < 5; ++j) {
    e = std::max(e, std::abs(cg.lambda[j] - eg[j]));
    e = std::max(e, std::abs(cw.lambda[j] - ew[j]));
  }
  return {"1", "canonical anchors (GHZ, W)", e <= 1e-10, "max err " + num(e) + " tol 1e-10"};
}

CheckResult c2(const VerifyOptions& o) {
  const std::size_t n = scaled(1e5, o);
  const std::uint64_t base = derive_seed(o.seed, 2);
  std::vector<double> ineq(n), piv(n);
  parallel_for(n, o.threads, [&](std::size_t i) {
    const PureState3 s = sample_haar(derive_seed(base, i));
    const auto c = concurrences(s);
    const double a = c.c_ab * c.c_ab + c.c_ac * c.c_ac - c.c_a_bc * c.c_a_bc;
    const double b = c.c_ab * c.c_ab + c.c_bc * c.c_bc - c.c_b_ac * c.c_b_ac;
    const double d = c.c_ac * c.c_ac + c.c_bc * c.c_bc - c.c_c_ab * c.c_c_ab;
    ineq[i] = std::max({a, b, d});
    const double tau = tangle(s);
    double m = 0.0;
    for (Qubit q : {Qubit::A, Qubit::B, Qubit::C})
      m = std::max(m, std::abs(tangle_monogamy(s, q) - tau));
    piv[i] = m;
  });
  const double mi = *std::max_element(ineq.begin(), ineq.end());
  const double mp = *std::max_element(piv.begin(), piv.end());
  return {"2", "monogamy and pivot independence", mi <= 1e-9 && mp <= 1e-9,
          std::to_string(n) + " Haar samples, max excess " + num(mi) + ", max pivot diff " +
              num(mp) + " tol 1e-9"};
}

CheckResult c3(const VerifyOptions& o) {
  const std::size_t n = scaled(1e4, o);
  const std::uint64_t base = derive_seed(o.seed, 3);
  std::vector<double> inv(n), br(n);
  parallel_for(n, o.threads, [&](std::size_t i) {
    const PureState3 s = sample_haar(derive_seed(base, i));
    const auto a = invariants7(s);
    const auto b = invariants7(reconstruct(canonical_decompose(s)));
    double m = 0.0;
    for (int k = 0; k < 7; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    inv[i] = m;
    const double tp = tangle(reconstruct(canonical_branch(s, Branch::Plus)));
    const double tm = tangle(reconstruct(canonical_branch(s, Branch::Minus)));
    br[i] = std::abs(tp - tm);
  });
  const double mi = *std::max_element(inv.begin(), inv.end());
  const double mb = *std::max_element(br.begin(), br.end());
  return {"3", "CD round trip", mi <= 1e-9 && mb <= 1e-10,
          std::to_string(n) + " Haar samples, max invariant drift " + num(mi) +
              " (tol 1e-9), max branch tau diff " + num(mb) + " (tol 1e-10)"};
}

CheckResult c4(const VerifyOptions& o) {
  const std::size_t n = scaled(1e3, o);
  long long bad = 0, total = 0;
  std::string where;
  for (Family f : all_families()) {
    const std::uint64_t base = derive_seed(derive_seed(o.seed, 4), static_cast<std::uint64_t>(f));
    std::vector<char> ok(n, 0);
    parallel_for(n, o.threads, [&](std::size_t i) {
      const Draw d = draw_family(f, derive_seed(base, i));
      const EntLabel lab = classify(d.d.state);
      ok[i] = in_stratum(bloch_triple(d.d.state), d.st.cls, d.st.type, 1e-9) &&
              lab.cls == d.st.cls && lab.type == d.st.type;
    });
    const long long b = std::count(ok.begin(), ok.end(), 0);
    if (b) where += std::string(" ") + to_string(f) + ":" + std::to_string(b);
    bad += b;
    total += static_cast<long long>(n);
  }
  return {"4", "polytope strata membership", bad == 0,
          std::to_string(total) + " samples over 9 types, " + std::to_string(bad) +
              " outside their region" + where};
}

CheckResult c5(const VerifyOptions& o) {
  const std::size_t n = scaled(1e5, o);
  std::string detail;
  bool pass = true;
  for (Family f : {Family::F2b, Family::F3b, Family::F4b, Family::F4c, Family::F5}) {
    const std::uint64_t base = derive_seed(derive_seed(o.seed, 5), static_cast<std::uint64_t>(f));
    // ceil: tau above tau_M; low: tau below the type's lower curve (2b: |tau - tau_M|).
    std::vector<double> ceil(n), low(n);
    parallel_for(n, o.threads, [&](std::size_t i) {
      const Draw d = draw_family(f, derive_seed(base, i));
      const double R = big_r(bloch_triple(d.d.state)), tau = tangle(d.d.state);
      const double tm = *bound_curve(Curve::TauMax, R);
      ceil[i] = tau - tm;
      if (f == Family::F2b)
        low[i] = std::abs(tau - tm);
      else if (f == Family::F3b || f == Family::F4b)
        low[i] = *bound_curve(Curve::TauStar, R) - tau;
      else
        low[i] = in_two_branch_region(R, tau, 0.02) ? 0.0 : 1.0;
    });
    const double mc = *std::max_element(ceil.begin(), ceil.end());
    double ml = *std::max_element(low.begin(), low.end());
    const double low_tol = f == Family::F2b ? 1e-10 : (f == Family::F4c || f == Family::F5) ? 0.0 : 0.02;
    if (mc > 1e-9 || ml > low_tol) pass = false;
    std::string what = " below lower ";
    if (f == Family::F2b) what = " |tau-tau_M| ";
    if (f == Family::F4c || f == Family::F5) {
      what = " outside two-branch region ";
      ml = static_cast<double>(std::count(low.begin(), low.end(), 1.0));
    }
    detail += std::string(to_string(f)) + what + num(ml) + ", above tau_M " + num(mc) + "; ";
  }
  const double e1 = std::abs(*bound_curve(Curve::TauDown, r_w()));
  const double e2 = std::abs(*bound_curve(Curve::TauDown, r_star()) - 0.25);
  const double e3 = std::abs(*bound_curve(Curve::TauUp, r_star()) - 12.0 / 49.0);
  const double ee = std::max({e1, e2, e3});
  if (ee > 1e-12) pass = false;
  detail += std::to_string(n) + " per type; endpoint err " + num(ee);
  return {"5", "bound curves", pass, detail};
}

CheckResult c6(const VerifyOptions& o) {
  const std::size_t n = scaled(1e4, o);
  double worst = 0.0;
  for (Family f : {Family::F3b, Family::F4b}) {
    const std::uint64_t base = derive_seed(derive_seed(o.seed, 6), static_cast<std::uint64_t>(f));
    worst = std::max(worst, par_max(n, o.threads, [&](std::size_t i) {
      const Draw d = draw_family(f, derive_seed(base, i));
      const BlochTriple bt = bloch_triple(d.d.state);
      const double lhs = 1.0 - tangle(d.d.state);
      double rhs;
      if (f == Family::F3b)
        rhs = dominant_sq(bt, d.st.type);
      else if (d.st.type == EntType::T4bL2)
        rhs = bt.rc() * bt.rc() - bt.rb() * bt.rb() + bt.ra() * bt.ra();
      else
        rhs = bt.rb() * bt.rb() - bt.rc() * bt.rc() + bt.ra() * bt.ra();
      return std::abs(lhs - rhs);
    }));
  }
  return {"6", "type identities 3b/4b", worst <= 1e-10,
          std::to_string(n) + " samples per type, max residual " + num(worst) + " tol 1e-10"};
}

CheckResult c7(const VerifyOptions& o) {
  double spec = 0.0, res = 0.0, tau = 0.0;
  long long mult_bad = 0;
  for (Model m : {Model::TFIM, Model::XX, Model::XXX, Model::XZX}) {
    const auto grid = model_grid(m);
    std::vector<std::array<double, 4>> parts(grid.size());
    parallel_for(grid.size(), o.threads, [&](std::size_t gi) {
      const double d = grid[gi];
      const Mat8 h = build_hamiltonian(make_model(m, d));
      const Eigensystem es = eigensystem(h);
      const auto levels = closed_form_spectrum(m, d);
      std::vector<double> closed;
      for (const auto& l : levels)
        for (int r = 0; r < l.multiplicity; ++r) closed.push_back(l.energy);
      std::sort(closed.begin(), closed.end());
      double sp = 0.0;
      for (int i = 0; i < 8; ++i) sp = std::max(sp, std::abs(closed[i] - es.values(i)));
      std::vector<Level> numeric;
      for (int i = 0; i < 8; ++i) numeric.push_back({es.values(i), 1});
      const auto mc = merge_levels(levels), mn = merge_levels(numeric);
      double mb = mc.size() != mn.size() ? 1.0 : 0.0;
      for (std::size_t k = 0; mb == 0.0 && k < mc.size(); ++k)
        if (mc[k].multiplicity != mn[k].multiplicity) mb = 1.0;

      double rs = 0.0, tg = 0.0;
      for (int n = 0; n < num_levels(m); ++n) {
        std::vector<std::optional<SuperpositionParams>> ps;
        if (levels[n].multiplicity == 1)
          ps.push_back(std::nullopt);
        else
          for (auto& p : probe_params(levels[n].multiplicity, derive_seed(o.seed, gi)))
            ps.push_back(p);
        for (const auto& p : ps) {
          const PureState3 s = closed_form_eigenstate(m, n, d, p, true);
          rs = std::max(rs, (h * s.vec() - levels[n].energy * s.vec()).norm());
          if (m == Model::XZX && n == 1) continue;
          tg = std::max(tg, std::abs(closed_form_tangle(m, n, d, p, true) - tangle(s)));
        }
      }
      parts[gi] = {sp, rs, tg, mb};
    });
    for (const auto& p : parts) {
      spec = std::max(spec, p[0]);
      res = std::max(res, p[1]);
      tau = std::max(tau, p[2]);
      mult_bad += p[3] > 0.0;
    }
  }
  const double oracle0 = closed_form_tangle(Model::XZX, 1, 0.0, std::nullopt, true);
  const double printed0 = xzx_tau1_printed(0.0);
  double t14 = 0.0;
  for (double d : model_grid(Model::XZX))
    t14 = std::max(t14, std::abs(closed_form_tangle(Model::XZX, 1, d, std::nullopt, true) -
                                 closed_form_tangle(Model::XZX, 4, d, std::nullopt, true)));
  const bool pass = spec <= 1e-10 && mult_bad == 0 && res <= 1e-9 && tau <= 1e-8 &&
                    std::abs(oracle0 - 1.0 / 3.0) <= 1e-10 && t14 <= 1e-8;
  return {"7", "chain oracles", pass,
          "spectrum err " + num(spec) + " (1e-10), multiplicity mismatches " +
              std::to_string(mult_bad) + ", eigen residual " + num(res) + " (1e-9), tangle err " +
              num(tau) + " (1e-8); XZX n=1 oracle tau(0)=" + num(oracle0) + " vs printed " +
              num(printed0) + " (misprint excluded), |tau1-tau4| " + num(t14)};
}

CheckResult c8(const VerifyOptions& o) {
  SweepOptions so;
  so.threads = o.threads;
  so.seed = o.seed;
  std::set<double> flagged;
  for (const auto& r : sweep(Model::TFIM, linspace(0.0, 4.0, 401), so))
    if (r.crossing) flagged.insert(r.delta);
  const bool cross_ok = flagged == std::set<double>{0.0, 1.0};

  // Merged subspace at delta = 1.
  const Mat8 h1 = build_hamiltonian(make_model(Model::TFIM, 1.0));
  double merged = 0.0, zero_g = 0.0, merged_res = 0.0;
  for (double gm : {0.0, 0.3, 0.6, 0.8, 1.0})
    for (int pg = 0; pg < 4; ++pg)
      for (double am : {0.0, 0.4, 0.7, 1.0})
        for (int pa = 0; pa < 4; ++pa) {
          const double rest = 1.0 - gm * gm;
          const double a2 = rest * am * am, b2 = std::max(0.0, rest - a2);
          if (rest < 1e-15 && (am > 0.0 || pa > 0)) continue;
          const cplx g = std::polar(gm, pg * kPi / 2.0);
          const cplx a = std::polar(std::sqrt(a2), pa * kPi / 3.0 + 0.2);
          const cplx b = std::sqrt(b2);
          const PureState3 s = tfim_crossing_state(g, a, b);
          const double t = tangle(s), f = tfim_crossing_tangle(g, a, b);
          merged = std::max(merged, std::abs(t - f));
          merged_res = std::max(merged_res, (h1 * s.vec()).norm());
          if (gm == 0.0) zero_g = std::max(zero_g, t);
        }

  // Z_0 perturbation probe.
  const double xi = 1e-3;
  double fragile = 0.0, robust = 0.0;
  for (Model m : {Model::TFIM, Model::XX, Model::XXX, Model::XZX}) {
    std::vector<double> ds{0.3, 0.7, 1.5, 2.5};
    if (m == Model::XXX) ds.push_back(-1.3);
    for (double d : ds) {
      const Mat8 h = build_hamiltonian(make_model(m, d));
      const Eigensystem e0 = eigensystem(h), e1 = eigensystem(h + perturbation_z0(xi));
      for (int i = 0; i < 8; ++i) {
        bool deg = false;
        for (int j = 0; j < 8; ++j)
          if (j != i && std::abs(e0.values(i) - e0.values(j)) <= 1e-9) deg = true;
        const double t1 = tangle(normalize(Vec8(e1.vectors.col(i))));
        if (deg && (m == Model::XX || m == Model::XXX)) fragile = std::max(fragile, t1);
        if (!deg && (m == Model::TFIM || m == Model::XZX)) {
          const double t0 = tangle(normalize(Vec8(e0.vectors.col(i))));
          robust = std::max(robust, std::abs(t1 - t0));
        }
      }
    }
  }
  const bool pass = cross_ok && merged <= 1e-9 && merged_res <= 1e-9 && zero_g <= 1e-12 &&
                    fragile < 1e-2 && robust <= 10 * xi;
  std::string fl;
  for (double d : flagged) fl += (fl.empty() ? "" : ",") + num(d);
  return {"8", "crossings and robustness", pass,
          "TFIM crossing flags at {" + fl + "}; merged tau err " + num(merged) + ", residual " +
              num(merged_res) + ", gamma=0 max tau " + num(zero_g) + "; xi=1e-3 split tau max " +
              num(fragile) + " (<1e-2), robust shift " + num(robust) + " (<=1e-2)"};
}

CheckResult c9(const VerifyOptions& o) {
  std::vector<Family> fams(all_families().begin(), all_families().end());
  const auto n = static_cast<int>(scaled(200, o));
  auto sample_hash = [&](int threads) {
    return fnv1a64(render_csv(sample_table(fams, n, o.seed, threads)));
  };
  SweepOptions g;
  g.seed = o.seed;
  SweepOptions mc = g;
  mc.policy = ParamsPolicy::MonteCarlo;
  mc.mc_samples = 8;
  auto sweep_hash = [&](Model m, SweepOptions so, int threads) {
    so.threads = threads;
    const auto grid = m == Model::XXX ? linspace(-2.0, 2.0, 101) : linspace(0.0, 4.0, 401);
    return fnv1a64(render_csv(sweep_table(m, grid, so)));
  };
  bool pass = true;
  std::string detail;
  auto both = [&](const std::string& name, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    pass = pass && a == b && b == c;
    detail += name + " " + hex64(a) + (a == b && b == c ? "" : "(unstable)") + "; ";
  };
  both("sample", sample_hash(1), sample_hash(4), sample_hash(1));
  for (Model m : {Model::TFIM, Model::XX, Model::XXX, Model::XZX})
    both(std::string("sweep-") + to_string(m), sweep_hash(m, g, 1), sweep_hash(m, g, 4),
         sweep_hash(m, g, 1));
  both("sweep-xxx-mc", sweep_hash(Model::XXX, mc, 1), sweep_hash(Model::XXX, mc, 3),
       sweep_hash(Model::XXX, mc, 1));
  return {"9", "figure-data regeneration", pass, detail + "repeat and thread-count invariant"};
}

}  // namespace

std::vector<CheckResult> run_acceptance(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  auto guard = [&](const std::string& id, const std::function<CheckResult()>& f) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({id, "exception", false, e.what()});
    }
  };
  guard("1", [] { return c1(); });
  guard("2", [&] { return c2(o); });
  guard("3", [&] { return c3(o); });
  guard("4", [&] { return c4(o); });
  guard("5", [&] { return c5(o); });
  guard("6", [&] { return c6(o); });
  guard("7", [&] { return c7(o); });
  guard("8", [&] { return c8(o); });
  guard("9", [&] { return c9(o); });
  return out;
}

std::vector<CheckResult> run_properties(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const std::size_t n = scaled(1e3, o);
  auto add = [&](const std::string& id, const std::string& name, double worst, double tol) {
    out.push_back({id, name, worst <= tol, "max err " + num(worst) + " tol " + num(tol)});
  };
  auto guard = [&](const std::string& id, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      out.push_back({id, "exception", false, e.what()});
    }
  };

  guard("lu-invariance", [&] {
    const std::uint64_t base = derive_seed(o.seed, 101);
    add("lu-invariance", "LU invariance of tau, r, C", par_max(n, o.threads, [&](std::size_t i) {
          Rng rng(derive_seed(base, i));
          const PureState3 s = sample_haar(rng.next());
          const Qubit q = static_cast<Qubit>(rng.next() % 3);
          const PureState3 t = apply_local_unitary(s, {haar_unitary(rng), q});
          const auto a = invariants7(s), b = invariants7(t);
          double m = 0.0;
          for (int k = 0; k < 7; ++k) m = std::max(m, std::abs(a[k] - b[k]));
          return m;
        }), 1e-10);
  });
  guard("slice-roundtrip", [&] {
    const std::uint64_t base = derive_seed(o.seed, 102);
    add("slice-roundtrip", "slice/reassemble bit-exact", par_max(n, o.threads, [&](std::size_t i) {
          const PureState3 s = sample_haar(derive_seed(base, i));
          double m = 0.0;
          for (Qubit q : {Qubit::A, Qubit::B, Qubit::C})
            if (reassemble(slice(s, q)) != s.amp) m = 1.0;
          return m;
        }), 0.0);
  });
  guard("entropy", [&] {
    const std::uint64_t base = derive_seed(o.seed, 103);
    add("entropy", "entropy from Bloch norm vs spectrum", par_max(n, o.threads, [&](std::size_t i) {
          const PureState3 s = sample_haar(derive_seed(base, i));
          double m = 0.0;
          for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
            const auto d = reduce_one(s, q);
            m = std::max(m, std::abs(entropy_from_norm(std::min(1.0, d.norm())) - entropy_of(d)));
          }
          return m;
        }), 1e-10);
  });
  guard("bloch-reconstruct", [&] {
    const std::uint64_t base = derive_seed(o.seed, 104);
    add("bloch-reconstruct", "rho = (I + r.sigma)/2", par_max(n, o.threads, [&](std::size_t i) {
          const PureState3 s = sample_haar(derive_seed(base, i));
          double m = 0.0;
          for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
            const auto d = reduce_one(s, q);
            Mat2 r;
            r << 1.0 + d.bloch.z(), cplx(d.bloch.x(), -d.bloch.y()),
                cplx(d.bloch.x(), d.bloch.y()), 1.0 - d.bloch.z();
            m = std::max(m, (0.5 * r - d.rho).cwiseAbs().maxCoeff());
          }
          return m;
        }), 1e-12);
  });
  guard("r-from-cd", [&] {
    const std::uint64_t base = derive_seed(o.seed, 105);
    add("r-from-cd", "R from CD polynomial vs Bloch norms", par_max(n, o.threads, [&](std::size_t i) {
          const PureState3 s = sample_haar(derive_seed(base, i));
          return std::abs(big_r_from_cf(canonical_decompose(s)) - big_r(bloch_triple(s)));
        }), 1e-9);
  });
  guard("bipyramid", [&] {
    const std::uint64_t base = derive_seed(o.seed, 106);
    add("bipyramid", "Haar Bloch triples inside bipyramid", par_max(10 * n, o.threads, [&](std::size_t i) {
          Region r;
          return membership(bloch_triple(sample_haar(derive_seed(base, i))), r) ? 0.0 : 1.0;
        }), 0.0);
  });
  guard("haar-symmetry", [&] {
    const std::uint64_t base = derive_seed(o.seed, 107);
    const std::size_t m = 10 * n;
    std::vector<double> da(m);
    parallel_for(m, o.threads, [&](std::size_t i) {
      const auto bt = bloch_triple(sample_haar(derive_seed(base, i)));
      da[i] = bt.r[0] - bt.r[1];
    });
    double mean = 0.0, var = 0.0;
    for (double x : da) mean += x / m;
    for (double x : da) var += (x - mean) * (x - mean) / (m - 1);
    const double z = std::abs(mean) / std::sqrt(var / m);
    out.push_back({"haar-symmetry", "mean r_A vs mean r_B", z <= 3.0, "z = " + num(z) + " (<= 3)"});
  });
  guard("sampler", [&] {
    long long bad = 0;
    for (Family f : all_families()) {
      const std::uint64_t base = derive_seed(derive_seed(o.seed, 108), static_cast<std::uint64_t>(f));
      bad += static_cast<long long>(par_max(n, o.threads, [&](std::size_t i) {
        const Draw d = draw_family(f, derive_seed(base, i));
        const EntLabel lab = classify(d.d.state);
        return (lab.cls == d.st.cls && lab.type == d.st.type) ? 0.0 : 1.0;
      }));
    }
    out.push_back({"sampler", "samplers classify back to their type", bad == 0,
                   std::to_string(bad) + " families with misclassified samples"});
  });
  guard("eigensystem", [&] {
    double worst = 0.0;
    for (Model m : {Model::TFIM, Model::XX, Model::XXX, Model::XZX})
      for (double d : model_grid(m)) {
        const Mat8 h = build_hamiltonian(make_model(m, d));
        const Eigensystem es = eigensystem(h);
        for (int i = 0; i < 8; ++i)
          worst = std::max(worst, (h * es.vectors.col(i) - es.values(i) * es.vectors.col(i)).norm());
        worst = std::max(worst, (es.vectors.adjoint() * es.vectors - Mat8::Identity()).norm());
      }
    add("eigensystem", "Jacobi residual and unitarity", worst, 1e-10);
  });
  guard("tfim-bloch", [&] {
    double worst = 0.0;
    for (double d : model_grid(Model::TFIM))
      for (int k : {0, 1, 2, 5}) {
        const auto bt = bloch_triple(closed_form_eigenstate(Model::TFIM, k, d, std::nullopt, true));
        const double r = tfim_bloch_closed(k, d);
        for (int q = 0; q < 3; ++q) worst = std::max(worst, std::abs(bt.r[q] - r));
      }
    add("tfim-bloch", "TFIM non-degenerate Bloch norms", worst, 1e-10);
  });
  guard("xx-constancy", [&] {
    double worst = 0.0;
    for (double d : model_grid(Model::XX)) {
      const Eigensystem es = eigensystem(build_hamiltonian(make_model(Model::XX, d)));
      for (int k = 0; k < 4; ++k) {
        const auto s = closed_form_eigenstate(Model::XX, k, d, std::nullopt, true);
        const double want = k < 2 ? 1.0 / 3.0 : 1.0;
        const auto bt = bloch_triple(s);
        for (int q = 0; q < 3; ++q) worst = std::max(worst, std::abs(bt.r[q] - want));
        worst = std::max(worst, tangle(s));
      }
      (void)es;
    }
    add("xx-constancy", "XX non-degenerate tau and Bloch triples", worst, 1e-12);
  });
  guard("xzx-diagonal", [&] {
    double worst = 0.0;
    for (double d : model_grid(Model::XZX))
      for (int k : {0, 1, 4, 5})
        worst = std::max(worst, dist_to_diagonal(bloch_triple(
                                    closed_form_eigenstate(Model::XZX, k, d, std::nullopt, true))));
    add("xzx-diagonal", "XZX non-degenerate triples on the diagonal", worst, 1e-10);
  });
  guard("bloch-family", [&] {
    double worst = 0.0;
    const std::pair<Model, int> lv[] = {{Model::TFIM, 3}, {Model::TFIM, 4}, {Model::XX, 4},
                                        {Model::XX, 5},   {Model::XZX, 2},  {Model::XZX, 3}};
    for (const auto& [m, k] : lv)
      for (const auto& p : degenerate_grid()) {
        const auto bt = bloch_triple(closed_form_eigenstate(m, k, 0.3, p));
        const auto fb = degenerate_bloch_family(m, k, p);
        for (int q = 0; q < 3; ++q) worst = std::max(worst, std::abs(bt.r[q] - fb.r[q]));
      }
    add("bloch-family", "degenerate Bloch family closed form", worst, 1e-10);
  });
  guard("consistency", [&] {
    const double rm = consistency_min_r(Sheet::Minus);
    out.push_back({"consistency", "tau surface consistency selects minus sheet",
                   consistent_sheet() == Sheet::Minus && std::abs(rm - 1.0) <= 1e-6,
                   "minus sheet min R " + num(rm) + ", plus sheet min R " +
                       num(consistency_min_r(Sheet::Plus))});
  });
  return out;
}

std::string format_line(const CheckResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + r.id + "] " + r.name + ": " + r.detail;
}

}  // namespace triqent::cli
