#pragma once

#include <array>
#include <optional>
#include <string>

#include "triqent/canonical.hpp"
#include "triqent/entanglement.hpp"
#include "triqent/taxonomy.hpp"

namespace triqent {

inline constexpr double kCrossover = 0.56;

double r_w();      // 1/sqrt(3)
double r_star();   // sqrt(3/7)

double big_r(const BlochTriple& bt);
double big_r_from_cf(const CanonicalForm& cf);
double dist_to_diagonal(const BlochTriple& bt);

enum class RegionKind {
  Bipyramid,
  UpperTetrahedron,
  Face,
  Diagonal,
  Edge,
  Vertex,
  Triangle12,
  Triangle23,
  Triangle13,
  WedgeL2,
  WedgeL3,
};

struct Region {
  RegionKind kind = RegionKind::Bipyramid;
  std::array<int, 3> signs{1, 1, 1};  // faces only
  Qubit axis = Qubit::A;              // edges only
  double tol = 1e-9;
};

// Sign rows of the upper-tetrahedron faces.
const std::array<std::array<int, 3>, 4>& face_signs();

// "bipyramid", "upper-tetrahedron", "face(-,+,+)", "diagonal", "edge-A",
// "vertex", "triangle-12", "wedge-l2", ...
Region parse_region(const std::string& name, double tol = 1e-9);
std::string to_string(const Region& r);

bool membership(const BlochTriple& bt, const Region& reg);

// Stratum check used for sampled states: the type's own region plus the
// bipyramid.
bool in_stratum(const BlochTriple& bt, EntClass cls, EntType type, double tol = 1e-9);

enum class Curve { TauMax, TauStar, TauUp, TauDown };
const char* to_string(Curve c);

std::optional<double> bound_curve(Curve c, double big_r, double crossover = kCrossover);

// Lower conditions for 4c and 5: tau >= tau_up below R_W, tau >= tau_up or
// tau <= tau_down on [R_W, R_star], nothing above.
bool in_two_branch_region(double big_r, double tau, double slack);

// Sign in front of the square root of the fibration surface.
enum class Sheet { Minus, Plus };

double tau_surface(double big_r, double l2, double l3, Sheet sheet = Sheet::Minus);

double lambda3_sat_minus(double big_r);
double lambda3_star(double big_r, double crossover = kCrossover);

// lambda0^2 on the given sheet of the lambda2 = 0 surface.
double lambda0_sq_on_sheet(double big_r, double l3, Sheet sheet);

// Minimum of tau over physically admissible lambda3 at fixed R (lambda2 = 0).
double tau_surface_min(double big_r, Sheet sheet = Sheet::Minus);

// Smallest R at which the sheet reaches tau = 0 on the admissible domain.
double consistency_min_r(Sheet sheet);
Sheet consistent_sheet();

// R at which the saturated and linear pieces of tau_star separate by gap.
double crossover_numeric(double gap);

double ansatz_tau(const BlochTriple& bt, double f_value);

enum class FRole { Appendix, MainText };
double f_lowest_order(EntType type, const BlochTriple& bt, FRole role = FRole::Appendix);

}  // namespace triqent
