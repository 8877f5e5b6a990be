#include "triqent/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace triqent {

namespace {

// Columns are the kept-pair vectors, one per value of the traced qubit.
Eigen::Matrix<cplx, 4, 2> pair_columns(const PureState3& s, Pair p) {
  Eigen::Matrix<cplx, 4, 2> phi;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        switch (p) {
          case Pair::AB: phi(2 * i + j, k) = s(i, j, k); break;
          case Pair::AC: phi(2 * i + k, j) = s(i, j, k); break;
          case Pair::BC: phi(2 * j + k, i) = s(i, j, k); break;
        }
      }
  return phi;
}

Pair pair_of(Qubit a, Qubit b) {
  const int m = (1 << static_cast<int>(a)) | (1 << static_cast<int>(b));
  if (m == 3) return Pair::AB;
  if (m == 5) return Pair::AC;
  return Pair::BC;
}

}  // namespace

Qubit1Density reduce_one(const PureState3& s, Qubit q) {
  Eigen::Matrix<cplx, 2, 4> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        switch (q) {
          case Qubit::A: m(i, 2 * j + k) = s(i, j, k); break;
          case Qubit::B: m(j, 2 * i + k) = s(i, j, k); break;
          case Qubit::C: m(k, 2 * i + j) = s(i, j, k); break;
        }
      }
  Qubit1Density d;
  d.rho = m * m.adjoint();
  const cplx r01 = d.rho(0, 1);
  d.bloch = Eigen::Vector3d(2.0 * r01.real(), -2.0 * r01.imag(),
                            (d.rho(0, 0) - d.rho(1, 1)).real());
  return d;
}

Mat4 reduce_pair(const PureState3& s, Pair p) {
  const auto phi = pair_columns(s, p);
  return phi * phi.adjoint();
}

BlochTriple bloch_triple(const PureState3& s) {
  BlochTriple bt;
  for (int q = 0; q < 3; ++q) bt.r[q] = reduce_one(s, static_cast<Qubit>(q)).norm();
  return bt;
}

double entropy_from_norm(double r) {
  if (!(r >= -1e-12 && r <= 1.0 + 1e-12))
    throw Error(ErrorCode::OutOfRange, "Bloch norm outside [0,1]");
  r = std::clamp(r, 0.0, 1.0);
  const double p = 0.5 * (1.0 + r), q = 0.5 * (1.0 - r);
  double s = -p * std::log(p);
  if (q > 0.0) s -= q * std::log(q);
  return s;
}

double entropy_of(const Qubit1Density& d) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(d.rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double mu = es.eigenvalues()(i);
    if (mu > 0.0) s -= mu * std::log(mu);
  }
  return s;
}

double concurrence_one_vs_rest(const PureState3& s, Qubit q) {
  const double r = reduce_one(s, q).norm();
  return std::sqrt(std::max(0.0, 1.0 - r * r));
}

// rho = Phi Phi^dagger has rank <= 2, so the two nonzero eigenvalues of
// rho rho~ are the squared singular values of Omega = Phi^T Y Phi and
// C = s1 - s2. Taking the difference directly keeps C accurate near 0.
double concurrence_pair(const PureState3& s, Pair p) {
  const auto phi = pair_columns(s, p);
  Mat4 y = Mat4::Zero();
  y(0, 3) = y(3, 0) = -1.0;
  y(1, 2) = y(2, 1) = 1.0;
  const Mat2 omega = phi.transpose() * y * phi;
  const Eigen::Vector2d sv = Eigen::JacobiSVD<Mat2>(omega).singularValues();
  return std::max(0.0, sv(0) - sv(1));
}

ConcurrenceSet concurrences(const PureState3& s) {
  ConcurrenceSet c;
  c.c_ab = concurrence_pair(s, Pair::AB);
  c.c_ac = concurrence_pair(s, Pair::AC);
  c.c_bc = concurrence_pair(s, Pair::BC);
  c.c_a_bc = concurrence_one_vs_rest(s, Qubit::A);
  c.c_b_ac = concurrence_one_vs_rest(s, Qubit::B);
  c.c_c_ab = concurrence_one_vs_rest(s, Qubit::C);
  return c;
}

cplx hyperdeterminant(const PureState3& s) {
  const auto& t = s.amp;
  const cplx t000 = t[0], t001 = t[1], t010 = t[2], t011 = t[3];
  const cplx t100 = t[4], t101 = t[5], t110 = t[6], t111 = t[7];
  cplx h = t000 * t000 * t111 * t111 + t001 * t001 * t110 * t110 +
           t010 * t010 * t101 * t101 + t100 * t100 * t011 * t011;
  h -= 2.0 * (t000 * t001 * t110 * t111 + t000 * t010 * t101 * t111 +
              t000 * t100 * t011 * t111 + t001 * t010 * t101 * t110 +
              t001 * t100 * t110 * t011 + t010 * t100 * t101 * t011);
  h += 4.0 * (t000 * t011 * t101 * t110 + t001 * t010 * t100 * t111);
  return h;
}

double tangle(const PureState3& s) { return 4.0 * std::abs(hyperdeterminant(s)); }

double tangle_monogamy(const PureState3& s, Qubit pivot) {
  const int p = static_cast<int>(pivot);
  const Qubit j = static_cast<Qubit>((p + 1) % 3), k = static_cast<Qubit>((p + 2) % 3);
  const double c1 = concurrence_one_vs_rest(s, pivot);
  const double cj = concurrence_pair(s, pair_of(pivot, j));
  const double ck = concurrence_pair(s, pair_of(pivot, k));
  return c1 * c1 - cj * cj - ck * ck;
}

Observables analyze(const PureState3& s) {
  Observables o;
  for (int q = 0; q < 3; ++q) {
    const auto d = reduce_one(s, static_cast<Qubit>(q));
    o.r.r[q] = d.norm();
    o.entropy[q] = entropy_from_norm(std::min(1.0, o.r.r[q]));
  }
  o.big_r = std::sqrt(o.r.r[0] * o.r.r[0] + o.r.r[1] * o.r.r[1] + o.r.r[2] * o.r.r[2]);
  o.conc = concurrences(s);
  o.tau = tangle(s);
  return o;
}

}  // namespace triqent
