// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "verify.hpp"

int main(int argc, char** argv) {
  triqent::cli::VerifyOptions opt;
  opt.seed = 20240611;
  opt.threads = 0;
  if (argc > 1) opt.scale = std::atof(argv[1]);
  int failed = 0;
  for (const auto& r : triqent::cli::run_acceptance(opt)) {
    std::printf("%s\n", triqent::cli::format_line(r).c_str());
    failed += !r.pass;
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
