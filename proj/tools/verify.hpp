#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace triqent::cli {

struct CheckResult {
  std::string id;    // "1".."9" for acceptance criteria, names for properties
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int threads = 0;
  double scale = 1.0;  // multiplies every Monte Carlo count
};

std::vector<CheckResult> run_acceptance(const VerifyOptions& opt);
std::vector<CheckResult> run_properties(const VerifyOptions& opt);

std::string format_line(const CheckResult& r);

}  // namespace triqent::cli
