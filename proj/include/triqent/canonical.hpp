#pragma once

#include <array>

#include "triqent/core.hpp"
#include "triqent/qstate.hpp"
#include "triqent/taxonomy.hpp"

namespace triqent {

enum class Branch { Plus, Minus };
const char* to_string(Branch b);

struct ZW {
  cplx z;
  cplx w;
};

// roots[0] is the "+" branch. When the pencil det(z T0 + w T1) vanishes
// identically, degenerate is set and both roots are (1, 0).
struct DetZeroSolutions {
  std::array<ZW, 2> roots;
  bool degenerate = false;
};

DetZeroSolutions det_zero_solutions(const SliceTensors& st);

struct CanonicalForm {
  std::array<double, 5> lambda{};
  double phi = 0.0;
  Branch branch = Branch::Plus;
  bool degenerate = false;  // pencil vanished; rho_A eigenbasis used
  ZW zw{1.0, 0.0};
  double residual = 0.0;    // weight left on t001, t010, t011
};

inline constexpr double kCdZeroTol = 1e-9;

CanonicalForm canonical_branch(const PureState3& s, Branch b, double tol = kCdZeroTol);
CanonicalForm canonical_decompose(const PureState3& s, double tol = kCdZeroTol);
PureState3 reconstruct(const CanonicalForm& cf);

struct EntLabel {
  EntClass cls = EntClass::GHZ;
  EntType type = EntType::T5;
  double tol = 1e-9;
};

EntLabel classify(const PureState3& s, double tol = 1e-9, double cd_tol = kCdZeroTol);

// Type from a CD zero pattern alone, assuming the class is already known to
// be W or GHZ.
EntType type_from_pattern(const CanonicalForm& cf, EntClass cls, double cd_tol);

}  // namespace triqent
