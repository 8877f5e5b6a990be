#include <gtest/gtest.h>

#include <cmath>

#include "triqent/polytope.hpp"

using namespace triqent;

namespace {

BlochTriple bt(double a, double b, double c) { return BlochTriple{{a, b, c}}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::BadInput;
}

}  // namespace

TEST(BigR, Examples) {
  EXPECT_EQ(big_r(bt(0, 0, 0)), 0.0);
  EXPECT_NEAR(big_r(bt(1. / 3, 1. / 3, 1. / 3)), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(big_r(bt(1, 1, 1)), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r_w(), 1 / std::sqrt(3.0), 1e-16);
  EXPECT_NEAR(r_star(), std::sqrt(3.0 / 7.0), 1e-16);
}

TEST(BigRFromCf, Examples) {
  EXPECT_NEAR(big_r_from_cf(canonical_decompose(states::ghz())), 0.0, 1e-12);
  EXPECT_NEAR(big_r_from_cf(canonical_decompose(states::w())), 1 / std::sqrt(3.0), 1e-12);
  CanonicalForm cf;
  cf.lambda = {1, 0, 0, 0, 0};
  EXPECT_NEAR(big_r_from_cf(cf), std::sqrt(3.0), 1e-15);
}

TEST(BigRFromCf, AgreesWithBlochNorms) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    CanonicalForm cf;
    double n = 0;
    for (auto& l : cf.lambda) n += (l = rng.uniform()) * l;
    for (auto& l : cf.lambda) l /= std::sqrt(n);
    cf.phi = kPi * rng.uniform();
    EXPECT_NEAR(big_r_from_cf(cf), big_r(bloch_triple(reconstruct(cf))), 1e-10);
  }
}

TEST(Dist, Examples) {
  EXPECT_NEAR(dist_to_diagonal(bt(1, 1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(dist_to_diagonal(bt(0.37, 0.37, 0.37)), 0.0, 1e-15);
  EXPECT_NEAR(dist_to_diagonal(bt(1, 0, 0)), std::sqrt(2.0 / 3.0), 1e-15);
  // projection onto the (1,1,1) line
  const Eigen::Vector3d p(0.2, 0.5, 0.9);
  const Eigen::Vector3d u = Eigen::Vector3d::Ones().normalized();
  EXPECT_NEAR(dist_to_diagonal(bt(0.2, 0.5, 0.9)), (p - p.dot(u) * u).norm(), 1e-15);
}

TEST(Membership, Examples) {
  const auto w = bt(1. / 3, 1. / 3, 1. / 3);
  EXPECT_TRUE(membership(w, parse_region("diagonal")));
  EXPECT_TRUE(membership(w, parse_region("face(-,+,+)")));
  EXPECT_FALSE(membership(bt(0.9, 0.9, 0.05), parse_region("bipyramid")));
  EXPECT_TRUE(membership(bt(0.5, 0.5, 0.2), parse_region("bipyramid")));
  EXPECT_TRUE(membership(bt(1, 1, 1), parse_region("vertex")));
  EXPECT_TRUE(membership(bt(1, 0.3, 0.3), parse_region("edge-A")));
  EXPECT_TRUE(membership(bt(0.2, 0.2, 0.6), parse_region("triangle-12")));
  EXPECT_FALSE(membership(bt(0.2, 0.2, 0.1), parse_region("triangle-12")));
  EXPECT_TRUE(membership(bt(0.5, 0.1, 0.6), parse_region("wedge-l2")));
  EXPECT_TRUE(membership(bt(0.5, 0.6, 0.1), parse_region("wedge-l3")));
}

TEST(Membership, FaceSignRows) {
  const auto& rows = face_signs();
  EXPECT_EQ(rows.size(), 4u);
  // the W point sits on the base face, GHZ on none, (1,1,1) on the three upper faces
  int on_w = 0, on_v = 0;
  for (const auto& s : rows) {
    Region r;
    r.kind = RegionKind::Face;
    r.signs = s;
    on_w += membership(bt(1. / 3, 1. / 3, 1. / 3), r);
    on_v += membership(bt(1, 1, 1), r);
    EXPECT_FALSE(membership(bt(0, 0, 0), r));
  }
  EXPECT_EQ(on_w, 1);
  EXPECT_EQ(on_v, 3);
}

TEST(Membership, UnknownRegion) {
  EXPECT_EQ(code_of([] { parse_region("cube"); }), ErrorCode::UnknownRegion);
}

TEST(BoundCurve, Endpoints) {
  EXPECT_NEAR(*bound_curve(Curve::TauMax, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(*bound_curve(Curve::TauDown, r_w()), 0.0, 1e-12);
  EXPECT_NEAR(*bound_curve(Curve::TauDown, r_star()), 0.25, 1e-12);
  EXPECT_NEAR(*bound_curve(Curve::TauUp, r_star()), 12.0 / 49.0, 1e-12);
  EXPECT_FALSE(bound_curve(Curve::TauDown, 0.1).has_value());
  EXPECT_FALSE(bound_curve(Curve::TauUp, 0.9).has_value());
  EXPECT_EQ(code_of([] { bound_curve(Curve::TauMax, 2.0); }), ErrorCode::OutOfDomain);
}

TEST(BoundCurve, TauStarPieces) {
  const double r = 0.4, tm = 1 - r * r / 3;
  EXPECT_NEAR(*bound_curve(Curve::TauStar, r), 5 * tm - 4 * std::sqrt(tm), 1e-15);
  EXPECT_NEAR(*bound_curve(Curve::TauStar, 0.8), 1 - 0.64, 1e-15);
  EXPECT_EQ(*bound_curve(Curve::TauStar, 1.2), 0.0);
}

TEST(TauSurface, Examples) {
  EXPECT_NEAR(tau_surface(0.7, 0, 0), 1 - 0.49 / 3, 1e-15);
  EXPECT_NEAR(tau_surface(1.0, 0, 1 / std::sqrt(2.0)), 0.0, 1e-14);
  const double l3 = lambda3_sat_minus(0.4), tm = 1 - 0.16 / 3;
  EXPECT_NEAR(tau_surface(0.4, 0, l3), 5 * tm - 4 * std::sqrt(tm), 1e-12);
  EXPECT_EQ(code_of([] { tau_surface(0.0, 0.0, 1.5); }), ErrorCode::ComplexTau);
}

TEST(Lambda3Star, Examples) {
  EXPECT_LT(lambda3_star(1e-6), 1e-5);
  EXPECT_NEAR(lambda3_star(1.0), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(lambda3_star(0.3), std::sqrt(3 - std::sqrt(8.73)), 1e-15);
  EXPECT_EQ(code_of([] { lambda3_star(1.2); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { lambda3_star(0.0); }), ErrorCode::OutOfDomain);
}

TEST(Lambda3Star, NumericMinimumNearTauStar) {
  const double ts = *bound_curve(Curve::TauStar, 0.3);
  EXPECT_NEAR(tau_surface_min(0.3), ts, 0.02 * ts);
}

TEST(Sheets, ConsistencyCondition) {
  EXPECT_EQ(consistent_sheet(), Sheet::Minus);
  EXPECT_NEAR(consistency_min_r(Sheet::Minus), 1.0, 1e-6);
  EXPECT_NEAR(consistency_min_r(Sheet::Plus), std::sqrt(1.08), 1e-6);
}

TEST(Sheets, EnvelopeIsOneMinusRSquared) {
  for (double r : {0.6, 0.75, 0.9}) EXPECT_NEAR(tau_surface_min(r), 1 - r * r, 1e-6);
}

TEST(Crossover, NumericDefinition) {
  const double c = crossover_numeric(0.005);
  EXPECT_GT(c, 0.5);
  EXPECT_LT(c, 0.6);
}

TEST(Ansatz, DiagonalGivesTauMax) {
  const auto b = bt(0.3, 0.3, 0.3);
  EXPECT_NEAR(ansatz_tau(b, 7.0), *bound_curve(Curve::TauMax, big_r(b)), 1e-15);
}

TEST(FFactor, LowestOrderRoles) {
  const auto b = bt(0.1, 0.2, 0.3);
  const double k3 = 2 * std::sqrt(2.0 / 3.0), k4 = 2 * std::sqrt(3.0);
  EXPECT_NEAR(f_lowest_order(EntType::T3b12, bt(0.1, 0.1, 0.05)), k3 * 0.05, 1e-15);
  EXPECT_NEAR(f_lowest_order(EntType::T3b23, b), k3 * 0.1, 1e-15);
  EXPECT_NEAR(f_lowest_order(EntType::T3b13, b), k3 * 0.2, 1e-15);
  EXPECT_NEAR(f_lowest_order(EntType::T4bL3, b), k4 * 0.2, 1e-15);
  EXPECT_NEAR(f_lowest_order(EntType::T4bL2, b), k4 * 0.3, 1e-15);
  EXPECT_NEAR(f_lowest_order(EntType::T4bL2, b, FRole::MainText), k4 * 0.2, 1e-15);
  EXPECT_EQ(code_of([&] { f_lowest_order(EntType::T5, b); }), ErrorCode::UnsupportedType);
}

// Residual of the lowest-order ansatz must shrink like the small Bloch norm squared.
TEST(FFactor, AppendixRoleIsSecondOrder) {
  Rng rng(8);
  for (auto [type, zero] : {std::pair{EntType::T4bL2, 2}, std::pair{EntType::T4bL3, 3}})
    for (double eps : {0.1, 0.05, 0.025}) {
      double worst = 0;
      for (int it = 0; it < 200; ++it) {
        CanonicalForm cf;
        for (int j : {1, 2, 3})
          if (j != zero) cf.lambda[j] = eps * (0.2 + 0.8 * rng.uniform());
        double rest = 1;
        for (int j : {1, 2, 3}) rest -= cf.lambda[j] * cf.lambda[j];
        const double x = 0.35 + 0.3 * rng.uniform();
        cf.lambda[0] = std::sqrt(rest * x);
        cf.lambda[4] = std::sqrt(rest * (1 - x));
        cf.phi = kPi * rng.uniform();
        const PureState3 s = reconstruct(cf);
        const auto b = bloch_triple(s);
        const double small = type == EntType::T4bL2 ? b.rc() : b.rb();
        const double res = std::abs(tangle(s) - ansatz_tau(b, f_lowest_order(type, b)));
        worst = std::max(worst, res / (small * small));
      }
      EXPECT_LT(worst, 5.0) << to_string(type) << " eps " << eps;
    }
}

TEST(Strata, SampledTypesSitInTheirRegions) {
  for (const auto& st : all_strata())
    for (std::uint64_t seed = 0; seed < 50; ++seed)
      EXPECT_TRUE(in_stratum(bloch_triple(sample_stratum(st, derive_seed(31, seed))), st.cls,
                             st.type, 1e-9))
          << to_string(st.type);
}

TEST(TwoBranch, Region) {
  EXPECT_TRUE(in_two_branch_region(0.9, 0.0, 0.0));
  EXPECT_TRUE(in_two_branch_region(0.2, 1.0, 0.0));
  const double up = *bound_curve(Curve::TauUp, 0.2);
  EXPECT_TRUE(in_two_branch_region(0.2, up, 0.0));
  EXPECT_FALSE(in_two_branch_region(0.2, up - 0.03, 0.02));
  const double mid = 0.5 * (r_w() + r_star());
  EXPECT_TRUE(in_two_branch_region(mid, *bound_curve(Curve::TauDown, mid), 0.0));
}

// As printed, the up branch is negative up to R_W and stays under the down
// branch on [R_W, R_star], so every tau >= 0 satisfies the lower condition.
TEST(TwoBranch, PrintedBranchesCoverAllNonNegativeTau) {
  for (int i = 0; i <= 100; ++i) {
    const double R = r_star() * i / 100.0;
    const double up = *bound_curve(Curve::TauUp, R);
    if (R <= r_w()) EXPECT_LT(up, 0.0);
    const auto down = bound_curve(Curve::TauDown, R);
    if (down) EXPECT_LT(up, *down);
    EXPECT_TRUE(in_two_branch_region(R, 0.0, 0.0));
  }
}
