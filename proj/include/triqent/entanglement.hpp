#pragma once

#include <array>

#include "triqent/core.hpp"
#include "triqent/qstate.hpp"

namespace triqent {

struct Qubit1Density {
  Mat2 rho;
  Eigen::Vector3d bloch;
  double norm() const { return bloch.norm(); }
};

struct BlochTriple {
  std::array<double, 3> r{};

  double ra() const { return r[0]; }
  double rb() const { return r[1]; }
  double rc() const { return r[2]; }
  double operator[](int i) const { return r[i]; }
};

struct ConcurrenceSet {
  double c_ab = 0, c_ac = 0, c_bc = 0;
  double c_a_bc = 0, c_b_ac = 0, c_c_ab = 0;
};

Qubit1Density reduce_one(const PureState3& s, Qubit q);

// Two-qubit marginal in the (row, column) order of the kept qubits.
Mat4 reduce_pair(const PureState3& s, Pair p);

BlochTriple bloch_triple(const PureState3& s);

// Natural log.
double entropy_from_norm(double r);
double entropy_of(const Qubit1Density& d);

double concurrence_one_vs_rest(const PureState3& s, Qubit q);
double concurrence_pair(const PureState3& s, Pair p);
ConcurrenceSet concurrences(const PureState3& s);

cplx hyperdeterminant(const PureState3& s);
double tangle(const PureState3& s);

// C^2_{I(JK)} - C^2_IJ - C^2_IK.
double tangle_monogamy(const PureState3& s, Qubit pivot);

struct Observables {
  BlochTriple r;
  double big_r = 0;
  std::array<double, 3> entropy{};
  ConcurrenceSet conc;
  double tau = 0;
};

Observables analyze(const PureState3& s);

}  // namespace triqent
