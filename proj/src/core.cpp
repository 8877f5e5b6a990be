#include "triqent/core.hpp"

namespace triqent {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadNormalization: return "BadNormalization";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::UnknownRegion: return "UnknownRegion";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::ComplexTau: return "ComplexTau";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::NeedParams: return "NeedParams";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::CrossingPoint: return "CrossingPoint";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::NegativeRadicand:
    case ErrorCode::ComplexTau:
      return true;
    default:
      return false;
  }
}

const char* to_string(Qubit q) {
  switch (q) {
    case Qubit::A: return "A";
    case Qubit::B: return "B";
    case Qubit::C: return "C";
  }
  return "?";
}

const char* to_string(Pair p) {
  switch (p) {
    case Pair::AB: return "AB";
    case Pair::AC: return "AC";
    case Pair::BC: return "BC";
  }
  return "?";
}

Qubit parse_qubit(const std::string& s) {
  if (s == "A" || s == "a") return Qubit::A;
  if (s == "B" || s == "b") return Qubit::B;
  if (s == "C" || s == "c") return Qubit::C;
  throw Error(ErrorCode::BadInput, "unknown qubit '" + s + "'");
}

}  // namespace triqent
