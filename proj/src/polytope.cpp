#include "triqent/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace triqent {

double r_w() { return 1.0 / std::sqrt(3.0); }
double r_star() { return std::sqrt(3.0 / 7.0); }

double big_r(const BlochTriple& bt) {
  return std::sqrt(bt.r[0] * bt.r[0] + bt.r[1] * bt.r[1] + bt.r[2] * bt.r[2]);
}

double big_r_from_cf(const CanonicalForm& cf) {
  const auto& l = cf.lambda;
  const double a0 = l[0] * l[0], a1 = l[1] * l[1], a2 = l[2] * l[2], a3 = l[3] * l[3],
               a4 = l[4] * l[4];
  double r2 = 3.0 * (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4);
  r2 += 16.0 * l[1] * l[2] * l[3] * l[4] * std::cos(cf.phi);
  r2 += 6.0 * (a1 * (a0 + a2 + a3) + a4 * (-a0 + a2 + a3));
  r2 -= 2.0 * (a0 * (a2 + a3) + a2 * a3 + a1 * a4);
  return std::sqrt(std::max(0.0, r2));
}

double dist_to_diagonal(const BlochTriple& bt) {
  const double a = bt.r[0], b = bt.r[1], c = bt.r[2];
  const double rad = a * a + b * b + c * c - (a * b + a * c + b * c);
  if (rad < -1e-12) throw Error(ErrorCode::NegativeRadicand, "distance radicand negative");
  // Same radicand written as a sum of squares, which keeps d ~ eps near the line.
  const double stable = 0.5 * ((a - b) * (a - b) + (b - c) * (b - c) + (a - c) * (a - c));
  return std::sqrt(2.0 / 3.0) * std::sqrt(stable);
}

const std::array<std::array<int, 3>, 4>& face_signs() {
  static const std::array<std::array<int, 3>, 4> rows = {
      {{+1, +1, +1}, {-1, -1, +1}, {-1, +1, -1}, {-1, +1, +1}}};
  return rows;
}

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

bool in_bipyramid(const BlochTriple& bt, double tol) {
  for (double x : bt.r)
    if (x < -tol || x > 1.0 + tol) return false;
  const double a = bt.r[0], b = bt.r[1], c = bt.r[2];
  return 1.0 + a - b - c >= -tol && 1.0 - a + b - c >= -tol && 1.0 - a - b + c >= -tol;
}

}  // namespace

Region parse_region(const std::string& name, double tol) {
  Region r;
  r.tol = tol;
  if (name == "bipyramid") r.kind = RegionKind::Bipyramid;
  else if (name == "upper-tetrahedron") r.kind = RegionKind::UpperTetrahedron;
  else if (name == "diagonal") r.kind = RegionKind::Diagonal;
  else if (name == "vertex") r.kind = RegionKind::Vertex;
  else if (name == "triangle-12") r.kind = RegionKind::Triangle12;
  else if (name == "triangle-23") r.kind = RegionKind::Triangle23;
  else if (name == "triangle-13") r.kind = RegionKind::Triangle13;
  else if (name == "wedge-l2" || name == "wedge-λ2") r.kind = RegionKind::WedgeL2;
  else if (name == "wedge-l3" || name == "wedge-λ3") r.kind = RegionKind::WedgeL3;
  else if (name.size() == 6 && name.rfind("edge-", 0) == 0) {
    r.kind = RegionKind::Edge;
    r.axis = parse_qubit(name.substr(5));
  } else if (name.size() == 11 && name.rfind("face(", 0) == 0 && name[10] == ')') {
    r.kind = RegionKind::Face;
    for (int i = 0; i < 3; ++i) {
      const char ch = name[5 + 2 * i];
      if (ch != '+' && ch != '-') throw Error(ErrorCode::UnknownRegion, "bad face " + name);
      r.signs[i] = ch == '+' ? 1 : -1;
    }
    if (std::find(face_signs().begin(), face_signs().end(), r.signs) == face_signs().end())
      throw Error(ErrorCode::UnknownRegion, "sign row not a face: " + name);
  } else {
    throw Error(ErrorCode::UnknownRegion, "unknown region '" + name + "'");
  }
  return r;
}

std::string to_string(const Region& r) {
  switch (r.kind) {
    case RegionKind::Bipyramid: return "bipyramid";
    case RegionKind::UpperTetrahedron: return "upper-tetrahedron";
    case RegionKind::Face:
      return std::string("face(") + sign_char(r.signs[0]) + "," + sign_char(r.signs[1]) +
             "," + sign_char(r.signs[2]) + ")";
    case RegionKind::Diagonal: return "diagonal";
    case RegionKind::Edge: return std::string("edge-") + to_string(r.axis);
    case RegionKind::Vertex: return "vertex";
    case RegionKind::Triangle12: return "triangle-12";
    case RegionKind::Triangle23: return "triangle-23";
    case RegionKind::Triangle13: return "triangle-13";
    case RegionKind::WedgeL2: return "wedge-l2";
    case RegionKind::WedgeL3: return "wedge-l3";
  }
  return "?";
}

bool membership(const BlochTriple& bt, const Region& reg) {
  const double t = reg.tol;
  const double a = bt.r[0], b = bt.r[1], c = bt.r[2];
  switch (reg.kind) {
    case RegionKind::Bipyramid:
      return in_bipyramid(bt, t);
    case RegionKind::UpperTetrahedron:
      return in_bipyramid(bt, t) && a + b + c >= 1.0 - t;
    case RegionKind::Face: {
      const auto& s = reg.signs;
      if (std::find(face_signs().begin(), face_signs().end(), s) == face_signs().end())
        throw Error(ErrorCode::UnknownRegion, "sign row not a face");
      return std::abs(s[0] * a - s[1] * b - s[2] * c + 1.0) <= t;
    }
    case RegionKind::Diagonal:
      return dist_to_diagonal(bt) <= t;
    case RegionKind::Edge: {
      const int i = static_cast<int>(reg.axis);
      return bt.r[i] >= 1.0 - t && std::abs(bt.r[(i + 1) % 3] - bt.r[(i + 2) % 3]) <= t;
    }
    case RegionKind::Vertex:
      return a >= 1.0 - t && b >= 1.0 - t && c >= 1.0 - t;
    case RegionKind::Triangle12:
      return std::abs(a - b) <= t && c > a + t;
    case RegionKind::Triangle23:
      return std::abs(b - c) <= t && a > b + t;
    case RegionKind::Triangle13:
      return std::abs(a - c) <= t && b > a + t;
    case RegionKind::WedgeL2:
      return b + t < std::min(a, c);
    case RegionKind::WedgeL3:
      return c + t < std::min(a, b);
  }
  throw Error(ErrorCode::UnknownRegion, "unknown region kind");
}

bool in_stratum(const BlochTriple& bt, EntClass cls, EntType type, double tol) {
  Region bip;
  bip.tol = tol;
  if (!membership(bt, bip)) return false;
  auto region = [&](RegionKind k) {
    Region r;
    r.kind = k;
    r.tol = tol;
    return r;
  };
  switch (type) {
    case EntType::T1:
      return membership(bt, region(RegionKind::Vertex));
    case EntType::T2a: {
      Region e = region(RegionKind::Edge);
      e.axis = cls == EntClass::A_BC ? Qubit::A : cls == EntClass::B_AC ? Qubit::B : Qubit::C;
      return membership(bt, e);
    }
    case EntType::T2b:
      return membership(bt, region(RegionKind::Diagonal));
    case EntType::T3a: {
      if (!membership(bt, region(RegionKind::UpperTetrahedron))) return false;
      Region f = region(RegionKind::Face);
      for (const auto& s : face_signs()) {
        f.signs = s;
        if (membership(bt, f)) return true;
      }
      return false;
    }
    case EntType::T3b12: return membership(bt, region(RegionKind::Triangle12));
    case EntType::T3b23: return membership(bt, region(RegionKind::Triangle23));
    case EntType::T3b13: return membership(bt, region(RegionKind::Triangle13));
    case EntType::T4a: return membership(bt, region(RegionKind::UpperTetrahedron));
    case EntType::T4bL2: return membership(bt, region(RegionKind::WedgeL2));
    case EntType::T4bL3: return membership(bt, region(RegionKind::WedgeL3));
    case EntType::T4c:
    case EntType::T5: return true;
  }
  return false;
}

const char* to_string(Curve c) {
  switch (c) {
    case Curve::TauMax: return "tau_max";
    case Curve::TauStar: return "tau_star";
    case Curve::TauUp: return "tau_up";
    case Curve::TauDown: return "tau_down";
  }
  return "?";
}

std::optional<double> bound_curve(Curve c, double R, double crossover) {
  if (!(R >= 0.0 && R <= std::sqrt(3.0) + 1e-12))
    throw Error(ErrorCode::OutOfDomain, "R outside [0, sqrt(3)]");
  const double tm = 1.0 - R * R / 3.0;
  switch (c) {
    case Curve::TauMax:
      return tm;
    case Curve::TauStar:
      if (R <= crossover) return 5.0 * tm - 4.0 * std::sqrt(tm);
      if (R <= 1.0) return 1.0 - R * R;
      return 0.0;
    case Curve::TauUp: {
      const double rs = r_star();
      if (R > rs) return std::nullopt;
      const double rad = std::max(0.0, 21.0 * (rs - R) * (rs + R));  // 9 - 21 R^2
      return (17.0 / 49.0 - 5.0 * R * R / 21.0) - (32.0 / 147.0) * std::sqrt(rad);
    }
    case Curve::TauDown: {
      const double rw = r_w(), rs = r_star();
      if (R < rw || R > rs) return std::nullopt;
      const double x = (rw + rs) * (rs - R) / (rs * rs - rw * rw);
      return 0.25 * (1.0 - std::sqrt(std::max(0.0, x)));
    }
  }
  return std::nullopt;
}

bool in_two_branch_region(double R, double tau, double slack) {
  if (R > r_star()) return true;
  const double up = *bound_curve(Curve::TauUp, R);
  if (tau >= up - slack) return true;
  if (R < r_w()) return false;
  return tau <= *bound_curve(Curve::TauDown, R) + slack;
}

double tau_surface(double R, double l2, double l3, Sheet sheet) {
  const double a2 = l2 * l2, a3 = l3 * l3;
  double rad = 3.0 * R * R + (a2 * a2 + a3 * a3) - 6.0 * (a2 + a3) + 26.0 * a2 * a3;
  if (rad < -1e-12) throw Error(ErrorCode::ComplexTau, "reality condition violated");
  rad = std::max(0.0, rad);
  const double sgn = sheet == Sheet::Minus ? -1.0 : 1.0;
  return (1.0 - R * R / 3.0) - 16.0 * a2 * a3 / 9.0 + 4.0 * (a2 * a2 + a3 * a3) / 9.0 +
         4.0 * (a2 + a3) / 9.0 * (-3.0 + sgn * std::sqrt(rad));
}

double lambda3_sat_minus(double R) {
  const double x = 9.0 - 3.0 * R * R;
  if (x < 0.0) throw Error(ErrorCode::OutOfDomain, "R beyond saturation domain");
  return std::sqrt(std::max(0.0, 3.0 - std::sqrt(x)));
}

double lambda3_star(double R, double crossover) {
  if (!(R > 0.0 && R <= 1.0)) throw Error(ErrorCode::OutOfDomain, "R outside (0, 1]");
  if (R <= crossover) return lambda3_sat_minus(R);
  return R / std::sqrt(2.0);
}

double lambda0_sq_on_sheet(double R, double l3, Sheet sheet) {
  const double a3 = l3 * l3;
  const double rad = 3.0 * R * R + a3 * a3 - 6.0 * a3;
  if (rad < -1e-12) throw Error(ErrorCode::ComplexTau, "reality condition violated");
  // The minus sheet of tau comes from the larger lambda0^2 root.
  const double sgn = sheet == Sheet::Minus ? 1.0 : -1.0;
  return 0.5 - a3 / 6.0 + sgn * std::sqrt(std::max(0.0, rad)) / 6.0;
}

namespace {

// tau on the lambda2 = 0 surface if (R, l3) is admissible, else +inf.
double admissible_tau(double R, double l3, Sheet sheet) {
  const double a3 = l3 * l3;
  if (3.0 * R * R + a3 * a3 - 6.0 * a3 < 0.0) return std::numeric_limits<double>::infinity();
  const double l0 = lambda0_sq_on_sheet(R, l3, sheet);
  const double l4 = 1.0 - l0 - a3;
  if (l0 < -1e-15 || l4 < -1e-15) return std::numeric_limits<double>::infinity();
  return tau_surface(R, 0.0, l3, sheet);
}

}  // namespace

double tau_surface_min(double R, Sheet sheet) {
  constexpr int n = 20000;
  double best = std::numeric_limits<double>::infinity();
  int arg = -1;
  for (int i = 0; i <= n; ++i) {
    const double v = admissible_tau(R, double(i) / n, sheet);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  if (arg < 0) throw Error(ErrorCode::ComplexTau, "no admissible lambda3");
  double lo = std::max(0.0, double(arg - 1) / n), hi = std::min(1.0, double(arg + 1) / n);
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (admissible_tau(R, m1, sheet) <= admissible_tau(R, m2, sheet))
      hi = m2;
    else
      lo = m1;
  }
  return std::min(best, admissible_tau(R, 0.5 * (lo + hi), sheet));
}

double consistency_min_r(Sheet sheet) {
  // tau = 4 lambda0^2 lambda4^2 vanishes where either factor does; for each
  // lambda3 solve for the R that lands there on this sheet.
  const double rmax = std::sqrt(3.0);
  auto solve = [&](double l3) {
    const double a3 = l3 * l3;
    const double rlo = std::sqrt(std::max(0.0, (6.0 * a3 - a3 * a3) / 3.0));
    double best = std::numeric_limits<double>::infinity();
    for (double target : {1.0 - a3, 0.0}) {
      auto g = [&](double R) { return lambda0_sq_on_sheet(R, l3, sheet) - target; };
      double lo = rlo, hi = rmax;
      double glo = g(lo), ghi = g(hi);
      if (std::abs(glo) < 1e-14) {
        best = std::min(best, lo);
        continue;
      }
      if (glo * ghi > 0.0) continue;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm < 0.0) == (glo < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      best = std::min(best, 0.5 * (lo + hi));
    }
    return best;
  };
  // Coarse grid, then two zooms around the best cell; the minimum can sit on
  // the edge of the admissible lambda3 range.
  constexpr int n = 4000;
  double a = 0.0, b = 1.0, best = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < 3; ++pass) {
    const double h = (b - a) / n;
    int arg = 0;
    for (int i = 0; i <= n; ++i) {
      const double r = solve(a + i * h);
      if (r < best) {
        best = r;
        arg = i;
      }
    }
    const double c = a + arg * h;
    a = std::max(0.0, c - h);
    b = std::min(1.0, c + h);
  }
  return best;
}

Sheet consistent_sheet() {
  const double m = consistency_min_r(Sheet::Minus), p = consistency_min_r(Sheet::Plus);
  return std::abs(m - 1.0) <= std::abs(p - 1.0) ? Sheet::Minus : Sheet::Plus;
}

double crossover_numeric(double gap) {
  auto f = [](double R) {
    const double tm = 1.0 - R * R / 3.0;
    return (5.0 * tm - 4.0 * std::sqrt(tm)) - (1.0 - R * R);
  };
  double lo = 0.0, hi = 1.0;
  if (f(hi) < gap) throw Error(ErrorCode::OutOfDomain, "gap never reached on (0, 1]");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < gap ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ansatz_tau(const BlochTriple& bt, double f_value) {
  const double R = big_r(bt);
  return 1.0 - R * R / 3.0 - dist_to_diagonal(bt) * f_value;
}

double f_lowest_order(EntType type, const BlochTriple& bt, FRole role) {
  const double k3b = 2.0 * std::sqrt(2.0 / 3.0), k4b = 2.0 * std::sqrt(3.0);
  const bool main = role == FRole::MainText;
  switch (type) {
    case EntType::T3b12: return k3b * bt.rc();
    case EntType::T3b23: return k3b * bt.ra();
    case EntType::T3b13: return k3b * bt.rb();
    case EntType::T4bL2: return k4b * (main ? bt.rb() : bt.rc());
    case EntType::T4bL3: return k4b * (main ? bt.rc() : bt.rb());
    default:
      throw Error(ErrorCode::UnsupportedType,
                  std::string("no F factor for type ") + to_string(type));
  }
}

}  // namespace triqent
