#include "triqent/chains.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "triqent/parallel.hpp"

namespace triqent {

const char* to_string(Model m) {
  switch (m) {
    case Model::TFIM: return "tfim";
    case Model::XX: return "xx";
    case Model::XXX: return "xxx";
    case Model::XZX: return "xzx";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
  if (l == "tfim") return Model::TFIM;
  if (l == "xx") return Model::XX;
  if (l == "xxx") return Model::XXX;
  if (l == "xzx") return Model::XZX;
  throw Error(ErrorCode::BadInput, "unknown model '" + s + "'");
}

namespace {

void check_domain(Model m, double delta) {
  if (!std::isfinite(delta)) throw Error(ErrorCode::OutOfDomain, "delta not finite");
  if (m != Model::XXX && delta < 0.0)
    throw Error(ErrorCode::OutOfDomain, std::string("delta < 0 for ") + to_string(m));
}

std::string place(char p, int j, char q = 'I', int k = -1, char r = 'I', int l = -1) {
  std::string s = "III";
  s[j] = p;
  if (k >= 0) s[k] = q;
  if (l >= 0) s[l] = r;
  return s;
}

Mat2 pauli(char c) {
  Mat2 m;
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw Error(ErrorCode::BadInput, std::string("bad Pauli letter ") + c);
  }
  return m;
}

const double kS3 = std::sqrt(3.0);

double a_of(double d) { return std::sqrt(1.0 + d + d * d); }
double b_of(double d) { return std::sqrt(1.0 - d + d * d); }

Vec8 ket(int n) {
  Vec8 v = Vec8::Zero();
  v(n) = 1.0;
  return v;
}

Vec8 flip(const Vec8& v) {
  Vec8 o;
  for (int n = 0; n < 8; ++n) o(7 - n) = v(n);
  return o;
}

const std::vector<int>& multiplicities(Model m) {
  static const std::vector<int> tfim{1, 1, 1, 2, 2, 1}, xx{1, 1, 1, 1, 2, 2}, xxx{2, 2, 4},
      xzx{1, 1, 2, 2, 1, 1};
  switch (m) {
    case Model::TFIM: return tfim;
    case Model::XX: return xx;
    case Model::XXX: return xxx;
    case Model::XZX: return xzx;
  }
  return tfim;
}

void check_level(Model m, int n) {
  if (n < 0 || n >= num_levels(m))
    throw Error(ErrorCode::OutOfRange, "level index out of range for " + std::string(to_string(m)));
}

}  // namespace

ChainModel make_model(Model m, double delta) {
  check_domain(m, delta);
  ChainModel cm;
  cm.name = m;
  cm.delta = delta;
  for (int j = 0; j < 3; ++j) {
    const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    switch (m) {
      case Model::TFIM:
        cm.terms.push_back({false, -1.0, place('X', j, 'X', j1)});
        cm.terms.push_back({true, -1.0, place('Z', j)});
        break;
      case Model::XX:
        cm.terms.push_back({false, -1.0, place('X', j, 'X', j1)});
        cm.terms.push_back({false, -1.0, place('Y', j, 'Y', j1)});
        cm.terms.push_back({true, -1.0, place('Z', j)});
        break;
      case Model::XXX:
        cm.terms.push_back({false, 1.0, place('X', j, 'X', j1)});
        cm.terms.push_back({false, 1.0, place('Y', j, 'Y', j1)});
        cm.terms.push_back({true, 1.0, place('Z', j, 'Z', j1)});
        break;
      case Model::XZX:
        cm.terms.push_back({false, -1.0, place('X', j, 'Z', j1, 'X', j2)});
        cm.terms.push_back({true, -1.0, place('Z', j)});
        break;
    }
  }
  return cm;
}

Mat8 pauli_string(const std::string& p) {
  if (p.size() != 3) throw Error(ErrorCode::BadInput, "Pauli string must have 3 letters");
  const Mat2 a = pauli(p[0]), b = pauli(p[1]), c = pauli(p[2]);
  Mat8 m;
  for (int r = 0; r < 8; ++r)
    for (int s = 0; s < 8; ++s)
      m(r, s) = a(r >> 2, s >> 2) * b((r >> 1) & 1, (s >> 1) & 1) * c(r & 1, s & 1);
  return m;
}

Mat8 build_hamiltonian(const ChainModel& model) {
  Mat8 h = Mat8::Zero();
  for (const auto& t : model.terms)
    h += (t.sign * (t.delta_role ? model.delta : 1.0)) * pauli_string(t.paulis);
  return h;
}

Mat8 perturbation_z0(double xi) { return xi * pauli_string("ZII"); }

Eigensystem eigensystem(const Mat8& h, int max_sweeps) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw Error(ErrorCode::BadInput, "matrix is not Hermitian");
  Mat8 a = 0.5 * (h + h.adjoint());
  Mat8 v = Mat8::Identity();
  const double scale = std::max(a.norm(), 1e-300);
  auto off = [&] {
    double s = 0.0;
    for (int p = 0; p < 8; ++p)
      for (int q = 0; q < 8; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };
  Eigensystem es;
  int sweep = 0;
  while (off() > 1e-15 * scale) {
    if (sweep == max_sweeps)
      throw Error(ErrorCode::ConvergenceFailure, "Jacobi iteration cap reached");
    ++sweep;
    for (int p = 0; p < 7; ++p)
      for (int q = p + 1; q < 8; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        const cplx ph = a(p, q) / r;  // e^{i theta}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        // J = diag(1, e^{-i theta}) * [[c, s], [-s, c]] on (p, q).
        const cplx jpp = c, jpq = s, jqp = -s * std::conj(ph), jqq = c * std::conj(ph);
        for (int k = 0; k < 8; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (int k = 0; k < 8; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
  }
  es.sweeps = sweep;

  std::array<int, 8> order;
  for (int i = 0; i < 8; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });
  for (int i = 0; i < 8; ++i) {
    es.values(i) = a(order[i], order[i]).real();
    Vec8 col = v.col(order[i]);
    col /= col.norm();
    double mx = col.cwiseAbs().maxCoeff();
    int lead = 0;
    while (std::abs(col(lead)) < mx - 1e-12) ++lead;
    col *= std::conj(col(lead)) / std::abs(col(lead));
    col(lead) = std::abs(col(lead));
    es.vectors.col(i) = col;
  }
  return es;
}

int num_levels(Model m) { return static_cast<int>(multiplicities(m).size()); }

std::vector<Level> closed_form_spectrum(Model m, double d) {
  check_domain(m, d);
  const auto& mult = multiplicities(m);
  std::vector<double> e;
  switch (m) {
    case Model::TFIM: {
      const double a = a_of(d), b = b_of(d);
      e = {-d - 2 * b - 1, d - 2 * a - 1, -d + 2 * b - 1, 1 - d, d + 1, d + 2 * a - 1};
      break;
    }
    case Model::XX:
      e = {-d - 4, d - 4, -3 * d, 3 * d, 2 - d, 2 + d};
      break;
    case Model::XXX:
      e = {3 * d, 4 - d, -d - 2};
      break;
    case Model::XZX: {
      const double a = a_of(d);
      e = {d - 2 * a - 1, -d - 2 * a + 1, -1 + d, 1 - d, d + 2 * a - 1, -d + 2 * a + 1};
      break;
    }
  }
  std::vector<Level> out;
  for (std::size_t n = 0; n < e.size(); ++n) out.push_back({e[n], mult[n]});
  return out;
}

std::vector<Level> merge_levels(std::vector<Level> levels, double tol) {
  std::stable_sort(levels.begin(), levels.end(),
                   [](const Level& x, const Level& y) { return x.energy < y.energy; });
  std::vector<Level> out;
  for (const auto& l : levels) {
    if (!out.empty() && l.energy - out.back().energy <= tol)
      out.back().multiplicity += l.multiplicity;
    else
      out.push_back(l);
  }
  return out;
}

std::vector<int> coincident_levels(Model m, int n, double delta, double tol) {
  check_level(m, n);
  const auto lv = closed_form_spectrum(m, delta);
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(lv.size()); ++j)
    if (j != n && std::abs(lv[j].energy - lv[n].energy) <= tol) out.push_back(j);
  return out;
}

SuperpositionParams params_ab(cplx alpha, double beta) { return {{alpha, cplx(beta, 0.0)}}; }

FG chain_fg(Model m, int n, double d) {
  check_domain(m, d);
  FG r;
  if (m == Model::TFIM) {
    const double a = a_of(d), b = b_of(d);
    switch (n) {
      case 0: r.f = -1 + 2 * d + 2 * b; r.g = std::sqrt(r.f * r.f + 3); return r;
      case 1: r.f = 2 * d + 2 * a + 1; r.g = kS3 * std::sqrt(r.f * r.f + 3); return r;
      case 2: r.f = -2 * d + 1 + 2 * b; r.g = std::sqrt(r.f * r.f + 3); return r;
      case 5: r.f = -2 * d - 1 + 2 * a; r.g = kS3 * std::sqrt(r.f * r.f + 3); return r;
      default: break;
    }
  } else if (m == Model::XZX) {
    const double a = a_of(d);
    switch (n) {
      case 0:
      case 1: r.f = 2 * d + 2 * a + 1; r.g = kS3 * std::sqrt(r.f * r.f + 3); return r;
      case 4: r.f = -2 * d + 2 * a - 1; r.g = kS3 * std::sqrt(r.f * r.f + 3); return r;
      case 5: r.f = -2 * d + 2 * a - 1; r.g = std::sqrt(r.f * r.f + 3); return r;
      default: break;
    }
  }
  throw Error(ErrorCode::UnsupportedType, "no f/g parameters for this level");
}

std::vector<Vec8> level_basis(Model m, int n, double d) {
  check_domain(m, d);
  check_level(m, n);
  const Vec8 w = states::w().vec(), xw = flip(w);
  const Vec8 w1 = states::wt1().vec(), w2 = states::wt2().vec();
  const Vec8 k000 = ket(0), k111 = ket(7);
  switch (m) {
    case Model::TFIM:
      switch (n) {
        case 0: { const FG p = chain_fg(m, 0, d); return {(p.f * k000 + kS3 * xw) / p.g}; }
        case 1: { const FG p = chain_fg(m, 1, d); return {(p.f / p.g) * kS3 * w + (3 / p.g) * k111}; }
        case 2: { const FG p = chain_fg(m, 2, d); return {(-p.f * k000 + kS3 * xw) / p.g}; }
        case 3: return {w1, w2};
        case 4: return {flip(w1), flip(w2)};
        default: { const FG p = chain_fg(m, 5, d); return {(-p.f / p.g) * kS3 * w + (3 / p.g) * k111}; }
      }
    case Model::XX:
      switch (n) {
        case 0: return {w};
        case 1: return {xw};
        case 2: return {k000};
        case 3: return {k111};
        case 4: return {w2, w1};  // beta W~1 + alpha W~2
        default: return {flip(w2), flip(w1)};
      }
    case Model::XXX:
      switch (n) {
        case 0: return {k111, k000};  // beta |000> + alpha |111>
        case 1: return {w, xw};       // beta X W + alpha W
        default: return {w1, flip(w1), w2, flip(w2)};
      }
    case Model::XZX:
      switch (n) {
        case 0: { const FG p = chain_fg(m, 0, d); return {(3 * k111 - p.f * kS3 * w) / p.g}; }
        case 1: { const FG p = chain_fg(m, 1, d); return {(kS3 * p.f * k000 + 3 * xw) / p.g}; }
        case 2: return {flip(w1), flip(w2)};
        case 3: return {w2, w1};  // beta W~1 + alpha W~2
        case 4: { const FG p = chain_fg(m, 4, d); return {(3 * k111 + kS3 * p.f * w) / p.g}; }
        default: { const FG p = chain_fg(m, 5, d); return {(-p.f * k000 + kS3 * xw) / p.g}; }
      }
  }
  return {};
}

namespace {

void check_params(const SuperpositionParams& p, std::size_t m) {
  if (p.c.size() != m)
    throw Error(ErrorCode::BadInput, "expected " + std::to_string(m) + " coefficients");
  double n2 = 0.0;
  for (const auto& x : p.c) n2 += std::norm(x);
  if (std::abs(n2 - 1.0) > 1e-10)
    throw Error(ErrorCode::BadNormalization, "superposition coefficients not unit norm");
  if (m == 2 && (std::abs(p.c[1].imag()) > 1e-12 || p.c[1].real() < -1e-12))
    throw Error(ErrorCode::BadInput, "beta must be real and non-negative");
}

}  // namespace

PureState3 closed_form_eigenstate(Model m, int n, double d,
                                  const std::optional<SuperpositionParams>& params,
                                  bool allow_crossing) {
  const auto basis = level_basis(m, n, d);
  if (!allow_crossing && !coincident_levels(m, n, d).empty())
    throw Error(ErrorCode::CrossingPoint, "level " + std::to_string(n) + " sits on a crossing");
  if (basis.size() == 1) return normalize(basis[0]);
  if (!params) throw Error(ErrorCode::NeedParams, "degenerate level needs superposition params");
  check_params(*params, basis.size());
  Vec8 v = Vec8::Zero();
  for (std::size_t i = 0; i < basis.size(); ++i) v += params->c[i] * basis[i];
  return normalize(v);
}

double closed_form_tangle(Model m, int n, double d,
                          const std::optional<SuperpositionParams>& params,
                          bool allow_crossing) {
  check_domain(m, d);
  check_level(m, n);
  if (!allow_crossing && !coincident_levels(m, n, d).empty())
    throw Error(ErrorCode::CrossingPoint, "level " + std::to_string(n) + " sits on a crossing");
  auto fg = [&](int k) { return chain_fg(m, k, d); };
  auto p4 = [](double x) { return x * x * x * x; };
  switch (m) {
    case Model::TFIM:
      if (n == 0 || n == 2) { const FG p = fg(n); return 16 * p.f / p4(p.g); }
      if (n == 1 || n == 5) { const FG p = fg(n); return 48 * p.f * p.f * p.f / p4(p.g); }
      return 0.0;
    case Model::XX:
      return 0.0;
    case Model::XZX:
      if (n == 0) { const FG p = fg(0); return 48 * p.f * p.f * p.f / p4(p.g); }
      if (n == 4) { const FG p = fg(4); return 48 * p.f * p.f * p.f / p4(p.g); }
      if (n == 5) { const FG p = fg(5); return 16 * p.f / p4(p.g); }
      if (n == 1) return tangle(closed_form_eigenstate(m, 1, d, std::nullopt, true));
      return 0.0;
    case Model::XXX: {
      if (!params) throw Error(ErrorCode::NeedParams, "degenerate level needs superposition params");
      check_params(*params, multiplicities(m)[n]);
      const auto& c = params->c;
      if (n == 0 || n == 1) {
        const double b2 = std::norm(c[1]);
        return (n == 0 ? 4.0 : 4.0 / 3.0) * b2 * (1.0 - b2);
      }
      const cplx om = std::polar(1.0, 2.0 * kPi / 3.0);
      auto S = [](cplx x, cplx y) { return x + y; };
      auto eta = [&](cplx x, cplx y) { return x * om + y * std::conj(om); };
      const cplx al = c[0], be = c[1], ga = c[2], de = c[3];
      const cplx sab = S(al, be), sgd = S(ga, de);
      const cplx inner = sab * sgd - (eta(be, al) * eta(de, ga) - eta(al, be) * eta(ga, de));
      return 4.0 / 9.0 * std::abs(inner * inner - 4.0 * sab * sgd * eta(al, be) * eta(ga, de));
    }
  }
  return 0.0;
}

double xzx_tau1_printed(double delta) {
  const FG p = chain_fg(Model::XZX, 0, delta);
  return 48 * p.f / (p.g * p.g);
}

double tfim_bloch_closed(int n, double delta) {
  const FG p = chain_fg(Model::TFIM, n, delta);
  const double k = (n == 0 || n == 2) ? 1.0 : 9.0;
  return std::abs(p.f * p.f - k) / (p.g * p.g);
}

PureState3 tfim_crossing_state(cplx gamma, cplx alpha, cplx beta) {
  Vec8 s21 = 0.5 * (-ket(0) + ket(3) + ket(5) + ket(6));
  const Vec8 v = gamma * s21 + alpha * states::wt1().vec() + beta * states::wt2().vec();
  return normalize(v);
}

double tfim_crossing_tangle(cplx ga, cplx al, cplx be) {
  const cplx om = std::polar(1.0, 2.0 * kPi / 3.0);
  const cplx xi = al * std::conj(om) + be * om;
  const cplx eta = al * om + be * std::conj(om);
  const cplx s = al + be;
  return std::norm(ga) *
         std::abs(ga * ga - (s - (xi - eta)) * (s - (xi - eta)) / 3.0 + 4.0 * eta / 3.0 * s);
}

namespace {

template <class Op>
std::optional<cplx> eigenvalue_of(const Vec8& v, Op op, double tol) {
  const Vec8 ov = op(v);
  const cplx lam = v.dot(ov);  // conjugates v
  if ((ov - lam * v).norm() > tol) return std::nullopt;
  return lam;
}

}  // namespace

SymmetryLabels symmetry_labels(const PureState3& s, double tol) {
  const Vec8 v = s.vec() / s.vec().norm();
  SymmetryLabels lab;
  auto shift = [](const Vec8& x) {
    Vec8 o;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) o(idx(k, i, j)) = x(idx(i, j, k));
    return o;
  };
  auto refl = [](const Vec8& x) {
    Vec8 o;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) o(idx(i, k, j)) = x(idx(i, j, k));
    return o;
  };
  auto mag = [](const Vec8& x) {
    Vec8 o;
    for (int n = 0; n < 8; ++n) o(n) = double(3 - 2 * __builtin_popcount(n)) * x(n);
    return o;
  };
  if (auto l = eigenvalue_of(v, shift, tol)) {
    int k = static_cast<int>(std::lround(std::arg(*l) / (2.0 * kPi / 3.0)));
    lab.k = ((k % 3) + 3) % 3;
  }
  if (auto l = eigenvalue_of(v, flip, tol)) lab.p = l->real() > 0 ? 1 : -1;
  if (auto l = eigenvalue_of(v, mag, tol)) lab.m_z = static_cast<int>(std::lround(l->real()));
  if (auto l = eigenvalue_of(v, refl, tol)) lab.reflection = l->real() > 0 ? 1 : -1;
  return lab;
}

BlochTriple degenerate_bloch_family(Model m, int n, const SuperpositionParams& params) {
  check_level(m, n);
  bool swapped = false;
  const bool ok = (m == Model::TFIM && (n == 3 || n == 4)) ||
                  (m == Model::XX && (n == 4 || n == 5)) ||
                  (m == Model::XZX && (n == 2 || n == 3));
  if (!ok) {
    if (multiplicities(m)[n] == 1)
      throw Error(ErrorCode::NotDegenerate, "level is not degenerate");
    throw Error(ErrorCode::UnsupportedType, "no closed-form Bloch family for this level");
  }
  // XX and XZX n = 3 write beta W~1 + alpha W~2.
  swapped = m == Model::XX || (m == Model::XZX && n == 3);
  check_params(params, 2);
  const double mod = std::abs(params.c[0]), beta = params.c[1].real();
  const double th = std::arg(params.c[0]);
  const double c = std::cos(th), s = std::sin(th);
  BlochTriple bt;
  bt.r[0] = std::abs(1.0 + 2.0 * mod * beta * (c + kS3 * s)) / 3.0;
  bt.r[1] = std::abs(1.0 + 2.0 * mod * beta * (c - kS3 * s)) / 3.0;
  bt.r[2] = std::abs(1.0 - 4.0 * mod * beta * c) / 3.0;
  if (swapped) std::swap(bt.r[0], bt.r[1]);
  return bt;
}

std::vector<SuperpositionParams> degenerate_grid() {
  std::vector<SuperpositionParams> g;
  for (double mod : {0.0, 0.25, 0.5, 0.75, 1.0})
    for (int j = 0; j < 8; ++j)
      g.push_back(params_ab(std::polar(mod, j * kPi / 4.0), std::sqrt(1.0 - mod * mod)));
  return g;
}

namespace {

SuperpositionParams random_params(int m, std::uint64_t seed) {
  Rng rng(seed);
  SuperpositionParams p;
  double n2 = 0.0;
  for (int i = 0; i < m; ++i) {
    p.c.push_back(rng.cnormal());
    n2 += std::norm(p.c.back());
  }
  for (auto& x : p.c) x /= std::sqrt(n2);
  if (m == 2 && std::abs(p.c[1]) > 0.0) {
    const cplx ph = std::conj(p.c[1]) / std::abs(p.c[1]);
    for (auto& x : p.c) x *= ph;
    p.c[1] = std::abs(p.c[1]);
  }
  return p;
}

std::vector<SuperpositionParams> params_for(int mult, int n, std::size_t grid_index,
                                            const SweepOptions& opt) {
  std::vector<SuperpositionParams> out;
  if (opt.policy == ParamsPolicy::Grid) {
    if (mult == 2) return degenerate_grid();
    for (int j = 0; j < 40; ++j) out.push_back(random_params(mult, derive_seed(0, j)));
    return out;
  }
  const std::uint64_t base = derive_seed(opt.seed, grid_index);
  for (int j = 0; j < opt.mc_samples; ++j)
    out.push_back(random_params(mult, derive_seed(base, std::uint64_t(n) * 100003u + j)));
  return out;
}

void fill_state(SweepRecord& rec, const PureState3& s) {
  rec.tau_numeric = tangle(s);
  rec.r = bloch_triple(s);
  rec.labels = symmetry_labels(s);
}

}  // namespace

std::vector<SweepRecord> sweep_point(Model m, double delta, std::size_t grid_index,
                                     const SweepOptions& opt) {
  Mat8 h = build_hamiltonian(make_model(m, delta));
  if (opt.perturb != 0.0) h += perturbation_z0(opt.perturb);
  const Eigensystem es = eigensystem(h);
  const auto levels = closed_form_spectrum(m, delta);
  const int nl = static_cast<int>(levels.size());

  std::vector<int> slot;
  for (int n = 0; n < nl; ++n)
    for (int r = 0; r < levels[n].multiplicity; ++r) slot.push_back(n);
  std::stable_sort(slot.begin(), slot.end(),
                   [&](int x, int y) { return levels[x].energy < levels[y].energy; });

  std::array<int, 8> cluster{};
  for (int i = 1; i < 8; ++i)
    cluster[i] = cluster[i - 1] + (es.values(i) - es.values(i - 1) > opt.gap_tol ? 1 : 0);
  std::map<int, std::vector<int>> members;
  for (int i = 0; i < 8; ++i) members[cluster[i]].push_back(i);

  std::vector<SweepRecord> out;
  for (int n = 0; n < nl; ++n) {
    std::vector<int> mine;
    for (int i = 0; i < 8; ++i)
      if (slot[i] == n) mine.push_back(i);
    std::vector<int> span;
    bool crossing = false, degenerate = false;
    for (int i : mine) {
      for (int j : members[cluster[i]]) {
        if (std::find(span.begin(), span.end(), j) == span.end()) span.push_back(j);
        if (slot[j] != n) crossing = true;
      }
      if (members[cluster[i]].size() > 1) degenerate = true;
    }
    std::sort(span.begin(), span.end());

    SweepRecord base;
    base.delta = delta;
    base.n = n;
    base.energy_closed = levels[n].energy;
    base.crossing = crossing;

    if (!degenerate || opt.perturb != 0.0) {
      int sample = 0;
      for (int i : mine) {
        SweepRecord rec = base;
        rec.sample = sample++;
        rec.energy_numeric = es.values(i);
        rec.multiplicity = static_cast<int>(members[cluster[i]].size());
        if (levels[n].multiplicity == 1 && m != Model::XXX)
          rec.tau_closed = closed_form_tangle(m, n, delta, std::nullopt, true);
        fill_state(rec, normalize(Vec8(es.vectors.col(i))));
        rec.energy_mismatch = std::abs(rec.energy_numeric - rec.energy_closed) > 1e-9;
        out.push_back(rec);
      }
      continue;
    }

    Eigen::Matrix<cplx, 8, Eigen::Dynamic> q(8, span.size());
    for (std::size_t c = 0; c < span.size(); ++c) q.col(c) = es.vectors.col(span[c]);
    base.energy_numeric = es.values(mine.front());
    base.energy_mismatch = std::abs(base.energy_numeric - base.energy_closed) > 1e-9;
    base.multiplicity = static_cast<int>(span.size());

    std::vector<std::optional<SuperpositionParams>> samples;
    if (levels[n].multiplicity == 1)
      samples.push_back(std::nullopt);
    else
      for (auto& p : params_for(levels[n].multiplicity, n, grid_index, opt)) samples.push_back(p);

    int sample = 0;
    for (const auto& p : samples) {
      SweepRecord rec = base;
      rec.sample = sample++;
      const PureState3 cf = closed_form_eigenstate(m, n, delta, p, true);
      Vec8 proj = q * (q.adjoint() * cf.vec());
      fill_state(rec, proj.norm() > 1e-6 ? normalize(proj) : cf);
      rec.tau_closed = closed_form_tangle(m, n, delta, p, true);
      out.push_back(rec);
    }
  }
  return out;
}

std::vector<SweepRecord> sweep(Model m, const std::vector<double>& grid, const SweepOptions& opt) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw Error(ErrorCode::BadInput, "grid not strictly increasing");
  std::vector<std::vector<SweepRecord>> parts(grid.size());
  parallel_for(grid.size(), opt.threads,
               [&](std::size_t i) { parts[i] = sweep_point(m, grid[i], i, opt); });
  std::vector<SweepRecord> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<double> linspace(double a, double b, int points) {
  if (points < 1) throw Error(ErrorCode::BadInput, "need at least one grid point");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = a;
    return g;
  }
  for (int i = 0; i < points; ++i) g[i] = a + (b - a) * double(i) / double(points - 1);
  g.back() = b;
  return g;
}

}  // namespace triqent
