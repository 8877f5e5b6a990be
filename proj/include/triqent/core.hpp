#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace triqent {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<cplx, 8, 8>;
using Vec8 = Eigen::Matrix<cplx, 8, 1>;

inline constexpr double kPi = 3.14159265358979323846;

enum class ErrorCode {
  ZeroVector,
  NonUnitary,
  OutOfRange,
  BadNormalization,
  UnknownType,
  UnknownRegion,
  OutOfDomain,
  UnsupportedType,
  ComplexTau,
  NegativeRadicand,
  NeedParams,
  NotDegenerate,
  CrossingPoint,
  ConvergenceFailure,
  BadInput,
};

const char* to_string(ErrorCode code);

// Validation errors map to CLI exit 2, numerical ones to exit 3.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Qubit { A = 0, B = 1, C = 2 };
enum class Pair { AB, AC, BC };

const char* to_string(Qubit q);
const char* to_string(Pair p);
Qubit parse_qubit(const std::string& s);

}  // namespace triqent
