#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "io.hpp"
#include "verify.hpp"

using namespace triqent;
using namespace triqent::cli;

namespace {

struct StateOpts {
  std::vector<std::string> tokens;
  std::string file;
  double tol = 1e-9;

  void attach(CLI::App* app) {
    app->add_option("--state", tokens, "name (ghz, w, wt1, wt2, zero) or 16 reals");
    app->add_option("--state-file", file, "JSON file of 8 [re, im] pairs");
    app->add_option("--tol", tol, "zero tolerance")->check(CLI::PositiveNumber);
  }

  PureState3 load() const {
    if (!file.empty() && !tokens.empty())
      throw Error(ErrorCode::BadInput, "give --state or --state-file, not both");
    if (!file.empty()) return read_state_file(file);
    if (tokens.empty()) throw Error(ErrorCode::BadInput, "no state given");
    return parse_state_tokens(tokens);
  }

  std::string id() const {
    if (!file.empty()) return file;
    return tokens.size() == 1 ? tokens[0] : "custom";
  }
};

int fail(const Error& e) {
  std::fprintf(stderr, "error:%s: %s\n", to_string(e.code()), e.what());
  return is_numerical(e.code()) ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-qubit entanglement toolkit"};
  app.require_subcommand(1);

  std::string format = "csv", out;
  std::uint64_t seed = 0;
  int threads = 1;
  try {
    seed = default_seed(0);
  } catch (const Error& e) {
    return fail(e);
  }

  StateOpts st_an, st_cl, st_cd;
  bool bits = false;
  auto* an = app.add_subcommand("analyze", "observables of a state");
  st_an.attach(an);
  an->add_flag("--bits", bits, "entropies in bits");
  auto* cl = app.add_subcommand("classify", "entanglement class and type");
  st_cl.attach(cl);
  auto* cd = app.add_subcommand("cd", "canonical decomposition");
  st_cd.attach(cd);
  for (auto* s : {an, cl, cd}) {
    s->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
    s->add_option("--out", out, "output path");
  }

  int points = 101;
  double crossover = 0.56;
  auto* bd = app.add_subcommand("bounds", "bound curves on a uniform R grid");
  bd->add_option("--points", points)->check(CLI::Range(2, 10000000));
  bd->add_option("--crossover", crossover);

  std::vector<std::string> types;
  int count = 1000;
  auto* sp = app.add_subcommand("sample", "per-type scatter data");
  sp->add_option("--type", types, "1 2a 2b 3a 3b 4a 4b 4c 5 (default all)");
  sp->add_option("--count", count)->check(CLI::PositiveNumber);

  std::string model = "tfim", policy = "grid";
  double dmin = 0.0, dmax = 4.0, perturb = 0.0;
  int samples = 40, sweep_points = 401;
  auto* sw = app.add_subcommand("sweep", "chain dataset over a delta grid");
  sw->add_option("--model", model)->check(CLI::IsMember({"tfim", "xx", "xxx", "xzx"}));
  sw->add_option("--delta-min", dmin);
  sw->add_option("--delta-max", dmax);
  sw->add_option("--points", sweep_points)->check(CLI::Range(1, 10000000));
  sw->add_option("--perturb", perturb, "xi for the Z on site 0");
  sw->add_option("--policy", policy)->check(CLI::IsMember({"grid", "mc"}));
  sw->add_option("--samples", samples, "draws per degenerate level (mc)")->check(CLI::PositiveNumber);

  double scale = 1.0;
  bool acceptance_only = false;
  auto* vf = app.add_subcommand("verify", "acceptance criteria and module properties");
  vf->add_option("--scale", scale, "multiplier on sample counts")->check(CLI::PositiveNumber);
  vf->add_flag("--acceptance-only", acceptance_only);

  for (auto* s : {bd, sp, sw}) {
    s->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
    s->add_option("--out", out);
  }
  for (auto* s : {sp, sw, vf}) {
    s->add_option("--seed", seed, "default from TRIQENT_SEED");
    s->add_option("--threads", threads, "0 = all cores");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Table t;
    if (*an) {
      t = analyze_table(st_an.load(), st_an.tol, st_an.id(), bits);
    } else if (*cl) {
      if (cl->count("--format") == 0) format = "text";
      t = classify_table(st_cl.load(), st_cl.tol);
    } else if (*cd) {
      if (cd->count("--format") == 0) format = "text";
      t = cd_table(st_cd.load(), st_cd.tol);
    } else if (*bd) {
      t = bounds_table(points, crossover);
    } else if (*sp) {
      std::vector<Family> fams;
      if (types.empty())
        fams.assign(all_families().begin(), all_families().end());
      for (const auto& s : types) fams.push_back(parse_family(s));
      t = sample_table(fams, count, seed, threads);
    } else if (*sw) {
      SweepOptions so;
      so.policy = policy == "mc" ? ParamsPolicy::MonteCarlo : ParamsPolicy::Grid;
      so.mc_samples = samples;
      so.seed = seed;
      so.perturb = perturb;
      so.threads = threads;
      t = sweep_table(parse_model(model), linspace(dmin, dmax, sweep_points), so);
    } else if (*vf) {
      VerifyOptions vo{seed, threads, scale};
      auto results = run_acceptance(vo);
      if (!acceptance_only) {
        auto props = run_properties(vo);
        results.insert(results.end(), props.begin(), props.end());
      }
      int passed = 0;
      for (const auto& r : results) {
        std::cout << format_line(r) << "\n";
        passed += r.pass;
      }
      const int failed = static_cast<int>(results.size()) - passed;
      std::cout << passed << " passed, " << failed << " failed, seed " << seed << ", scale "
                << scale << "\n";
      return failed ? 3 : 0;
    }
    write_output(render(t, parse_format(format)), out);
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error:BadInput: %s\n", e.what());
    return 2;
  }
  return 0;
}
