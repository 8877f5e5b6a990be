#include "commands.hpp"

#include <cmath>

#include "triqent/canonical.hpp"
#include "triqent/entanglement.hpp"
#include "triqent/parallel.hpp"
#include "triqent/polytope.hpp"

namespace triqent::cli {

namespace {

Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Cell opt_cell(const std::optional<int>& v) {
  if (v) return static_cast<long long>(*v);
  return std::monostate{};
}

}  // namespace

Table analyze_table(const PureState3& s, double tol, const std::string& id, bool bits) {
  const Observables o = analyze(s);
  const EntLabel lab = classify(s, tol);
  const double k = bits ? 1.0 / std::log(2.0) : 1.0;
  Table t;
  t.header = {"state", "r_a",   "r_b",   "r_c",    "big_r",  "dist",   "s_a",   "s_b",   "s_c",   "c_ab",
              "c_ac",  "c_bc",  "c_a_bc", "c_b_ac", "c_c_ab", "tau",   "class", "type"};
  t.rows.push_back({id, o.r.r[0], o.r.r[1], o.r.r[2], o.big_r, dist_to_diagonal(o.r),
                    k * o.entropy[0], k * o.entropy[1], k * o.entropy[2], o.conc.c_ab, o.conc.c_ac, o.conc.c_bc,
                    o.conc.c_a_bc, o.conc.c_b_ac, o.conc.c_c_ab, o.tau,
                    std::string(to_string(lab.cls)), std::string(to_string(lab.type))});
  return t;
}

Table classify_table(const PureState3& s, double tol) {
  const EntLabel lab = classify(s, tol);
  Table t;
  t.header = {"class", "type", "tol"};
  t.rows.push_back({std::string(to_string(lab.cls)), std::string(to_string(lab.type)), lab.tol});
  return t;
}

Table cd_table(const PureState3& s, double tol) {
  const CanonicalForm cf = canonical_decompose(s, tol);
  Table t;
  t.header = {"lambda0", "lambda1", "lambda2", "lambda3",  "lambda4",
              "phi",     "branch",  "degenerate", "residual", "class", "type"};
  const EntLabel lab = classify(s, 1e-9, tol);
  t.rows.push_back({cf.lambda[0], cf.lambda[1], cf.lambda[2], cf.lambda[3], cf.lambda[4], cf.phi,
                    std::string(to_string(cf.branch)), cf.degenerate, cf.residual,
                    std::string(to_string(lab.cls)), std::string(to_string(lab.type))});
  return t;
}

Table bounds_table(int points, double crossover) {
  if (points < 2) throw Error(ErrorCode::BadInput, "bounds needs at least 2 points");
  Table t;
  t.header = {"big_r", "tau_max", "tau_star", "tau_up", "tau_down"};
  for (double r : linspace(0.0, std::sqrt(3.0), points)) {
    t.rows.push_back({r, opt_cell(bound_curve(Curve::TauMax, r, crossover)),
                      opt_cell(bound_curve(Curve::TauStar, r, crossover)),
                      opt_cell(bound_curve(Curve::TauUp, r, crossover)),
                      opt_cell(bound_curve(Curve::TauDown, r, crossover))});
  }
  return t;
}

Table sample_table(const std::vector<Family>& families, int count, std::uint64_t seed,
                   int threads) {
  if (count < 1) throw Error(ErrorCode::BadInput, "count must be positive");
  Table t;
  t.header = {"family", "stratum", "index", "r_a",  "r_b",   "r_c",   "big_r", "dist",
              "tau",    "tau_max", "lambda0", "lambda1", "lambda2", "lambda3", "lambda4", "phi",
              "class",  "type"};
  for (std::size_t f = 0; f < families.size(); ++f) {
    const Family fam = families[f];
    const auto options = strata_of(fam);
    std::vector<std::vector<Cell>> rows(count);
    parallel_for(count, threads, [&](std::size_t i) {
      const std::uint64_t s = derive_seed(derive_seed(seed, static_cast<std::uint64_t>(fam)), i);
      const Stratum& st = options[splitmix64(s ^ 0xA5A5A5A5ULL) % options.size()];
      const StratumDraw d = draw_stratum(st, s);
      const BlochTriple bt = bloch_triple(d.state);
      const double R = big_r(bt);
      const EntLabel lab = classify(d.state);
      rows[i] = {std::string(to_string(fam)),
                 std::string(to_string(st.cls)) + "/" + to_string(st.type),
                 static_cast<long long>(i),
                 bt.r[0], bt.r[1], bt.r[2], R, dist_to_diagonal(bt), tangle(d.state),
                 1.0 - R * R / 3.0,
                 d.lambda[0], d.lambda[1], d.lambda[2], d.lambda[3], d.lambda[4], d.phi,
                 std::string(to_string(lab.cls)), std::string(to_string(lab.type))};
    });
    for (auto& r : rows) t.rows.push_back(std::move(r));
  }
  return t;
}

Table sweep_table(Model m, const std::vector<double>& grid, const SweepOptions& opt) {
  Table t;
  t.header = {"delta",       "n",     "energy_numeric", "energy_closed", "multiplicity",
              "k",           "p",     "m_z",            "tau_numeric",   "tau_closed",
              "r_a",         "r_b",   "r_c",            "crossing_flag", "reflection",
              "sample",      "energy_mismatch"};
  for (const auto& r : sweep(m, grid, opt)) {
    t.rows.push_back({r.delta, static_cast<long long>(r.n), r.energy_numeric, r.energy_closed,
                      static_cast<long long>(r.multiplicity), opt_cell(r.labels.k),
                      opt_cell(r.labels.p), opt_cell(r.labels.m_z), r.tau_numeric,
                      opt_cell(r.tau_closed), r.r.r[0], r.r.r[1], r.r.r[2], r.crossing,
                      opt_cell(r.labels.reflection), static_cast<long long>(r.sample),
                      r.energy_mismatch});
  }
  return t;
}

}  // namespace triqent::cli
