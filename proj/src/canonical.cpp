#include "triqent/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "triqent/entanglement.hpp"

namespace triqent {

const char* to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

namespace {

ZW unit_pair(cplx z, cplx w) {
  const double n = std::sqrt(std::norm(z) + std::norm(w));
  z /= n;
  w /= n;
  cplx ph = 1.0;
  if (std::abs(z) > 1e-15)
    ph = std::conj(z) / std::abs(z);
  else if (std::abs(w) > 1e-15)
    ph = std::conj(w) / std::abs(w);
  z *= ph;
  w *= ph;
  if (std::abs(z) > 1e-15) z = std::abs(z);
  return {z, w};
}

bool plus_first(const ZW& p, const ZW& m) {
  if (std::abs(p.w.real() - m.w.real()) > 1e-12) return p.w.real() > m.w.real();
  return p.w.imag() >= m.w.imag();
}

// Top eigenvector of a 2x2 Hermitian matrix.
Eigen::Vector2cd top_eigenvector(const Mat2& rho) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(rho);
  return es.eigenvectors().col(1);
}

}  // namespace

DetZeroSolutions det_zero_solutions(const SliceTensors& st) {
  const Mat2& t0 = st.t0;
  const Mat2& t1 = st.t1;
  const cplx a = t1.determinant();
  const cplx c = t0.determinant();
  const cplx b = t0(0, 0) * t1(1, 1) + t1(0, 0) * t0(1, 1) - t0(0, 1) * t1(1, 0) -
                 t1(0, 1) * t0(1, 0);
  DetZeroSolutions out;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale < 1e-14) {
    out.degenerate = true;
    out.roots = {ZW{1.0, 0.0}, ZW{1.0, 0.0}};
    return out;
  }
  cplx disc = b * b - 4.0 * a * c;
  // Roundoff on a double root would otherwise leak into the lambdas as sqrt(eps).
  if (std::abs(disc) < 1e-13 * scale * scale) disc = 0.0;
  cplx sq = std::sqrt(disc);
  if (std::abs(b - sq) > std::abs(b + sq)) sq = -sq;
  const cplx q = -0.5 * (b + sq);
  cplx z1 = a, w1 = q, z2 = q, w2 = c;
  const double n1 = std::sqrt(std::norm(z1) + std::norm(w1));
  const double n2 = std::sqrt(std::norm(z2) + std::norm(w2));
  if (n1 < 1e-12 * scale) {
    z1 = z2;
    w1 = w2;
  } else if (n2 < 1e-12 * scale) {
    z2 = z1;
    w2 = w1;
  }
  ZW r1 = unit_pair(z1, w1), r2 = unit_pair(z2, w2);
  if (!plus_first(r1, r2)) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

CanonicalForm canonical_branch(const PureState3& s, Branch b, double tol) {
  const auto dz = det_zero_solutions(slice(s, Qubit::A));
  CanonicalForm cf;
  cf.branch = b;
  cf.degenerate = dz.degenerate;
  ZW zw = dz.roots[b == Branch::Plus ? 0 : 1];
  if (dz.degenerate) {
    const Eigen::Vector2cd e = top_eigenvector(reduce_one(s, Qubit::A).rho);
    zw = unit_pair(std::conj(e(0)), std::conj(e(1)));
  }
  cf.zw = zw;

  Mat2 u;
  u << zw.z, zw.w, -std::conj(zw.w), std::conj(zw.z);
  std::array<cplx, 8> t = apply_on(s.amp, u, Qubit::A);

  PureState3 tmp;
  tmp.amp = t;
  const SliceTensors st = slice(tmp, Qubit::A);
  Eigen::JacobiSVD<Mat2> svd(st.t0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()(0) < 1e-14)
    svd.compute(st.t1, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat2 vb = svd.matrixU().adjoint();
  const Mat2 wc = svd.matrixV().transpose();
  t = apply_on(t, vb, Qubit::B);
  t = apply_on(t, wc, Qubit::C);

  cf.lambda = {std::abs(t[idx(0, 0, 0)]), std::abs(t[idx(1, 0, 0)]),
               std::abs(t[idx(1, 0, 1)]), std::abs(t[idx(1, 1, 0)]),
               std::abs(t[idx(1, 1, 1)])};
  cf.residual = std::sqrt(std::norm(t[idx(0, 0, 1)]) + std::norm(t[idx(0, 1, 0)]) +
                          std::norm(t[idx(0, 1, 1)]));
  const bool phase_free = cf.lambda[1] < tol || cf.lambda[2] < tol ||
                          cf.lambda[3] < tol || cf.lambda[4] < tol;
  if (!phase_free) {
    const cplx inv = t[idx(1, 0, 0)] * t[idx(1, 1, 1)] * std::conj(t[idx(1, 0, 1)]) *
                     std::conj(t[idx(1, 1, 0)]);
    cf.phi = std::abs(std::arg(inv));
  }
  return cf;
}

namespace {

int zeros_among_1_to_4(const CanonicalForm& cf, double tol) {
  int n = 0;
  for (int j = 1; j < 5; ++j)
    if (cf.lambda[j] < tol) ++n;
  return n;
}

}  // namespace

CanonicalForm canonical_decompose(const PureState3& s, double tol) {
  CanonicalForm p = canonical_branch(s, Branch::Plus, tol);
  if (p.degenerate) return p;
  CanonicalForm m = canonical_branch(s, Branch::Minus, tol);
  const int zp = zeros_among_1_to_4(p, tol), zm = zeros_among_1_to_4(m, tol);
  if (zp != zm) return zp > zm ? p : m;
  if (std::abs(p.lambda[0] - m.lambda[0]) > 1e-12) return p.lambda[0] > m.lambda[0] ? p : m;
  return p;
}

PureState3 reconstruct(const CanonicalForm& cf) {
  double n2 = 0.0;
  for (double l : cf.lambda) n2 += l * l;
  if (std::abs(n2 - 1.0) > 1e-10)
    throw Error(ErrorCode::BadNormalization, "sum of lambda^2 differs from 1");
  std::array<cplx, 8> a{};
  a[idx(0, 0, 0)] = cf.lambda[0];
  a[idx(1, 0, 0)] = std::polar(cf.lambda[1], cf.phi);
  a[idx(1, 0, 1)] = cf.lambda[2];
  a[idx(1, 1, 0)] = cf.lambda[3];
  a[idx(1, 1, 1)] = cf.lambda[4];
  return normalize(a);
}

EntType type_from_pattern(const CanonicalForm& cf, EntClass cls, double cd_tol) {
  const auto& l = cf.lambda;
  const bool z1 = l[1] < cd_tol, z2 = l[2] < cd_tol, z3 = l[3] < cd_tol, z4 = l[4] < cd_tol;
  if (cls == EntClass::W) return (z1 && z4) ? EntType::T3a : EntType::T4a;
  const int nz = int(z1) + int(z2) + int(z3);
  if (nz == 3) return EntType::T2b;
  if (nz == 2) {
    if (z1 && z2) return EntType::T3b12;
    if (z2 && z3) return EntType::T3b23;
    return EntType::T3b13;
  }
  if (!z1 && (z2 != z3)) return z2 ? EntType::T4bL2 : EntType::T4bL3;
  if (z1) return EntType::T4c;
  return EntType::T5;
}

EntLabel classify(const PureState3& s, double tol, double cd_tol) {
  EntLabel lab;
  lab.tol = tol;
  const BlochTriple bt = bloch_triple(s);
  int pure = 0, which = -1;
  for (int q = 0; q < 3; ++q)
    if (bt.r[q] > 1.0 - tol) {
      ++pure;
      which = q;
    }
  if (pure >= 2) {
    lab.cls = EntClass::Product;
    lab.type = EntType::T1;
    return lab;
  }
  if (pure == 1) {
    static constexpr EntClass bip[3] = {EntClass::A_BC, EntClass::B_AC, EntClass::C_AB};
    lab.cls = bip[which];
    lab.type = EntType::T2a;
    return lab;
  }
  lab.cls = tangle(s) < tol ? EntClass::W : EntClass::GHZ;
  lab.type = type_from_pattern(canonical_decompose(s, cd_tol), lab.cls, cd_tol);
  return lab;
}

}  // namespace triqent
