#include "bomc/constants.hpp"
#include "bomc/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace bomc {
namespace {

// beta (1 - sqrt(1/beta - 2))^2, an algebraically equivalent form of f(beta).
double f_closed(double beta) {
  const double r = 1.0 - std::sqrt(1.0 / beta - 2.0);
  return beta * r * r;
}

// max over omega of (beta omega (3 - 1/beta - omega) - y) / (1 - omega) by a
// dense scan followed by local refinement.
double mixed_inner_max(double beta, double y) {
  auto g = [&](double w) { return (beta * w * (3 - 1 / beta - w) - y) / (1 - w); };
  double best_w = 0;
  double best = g(0);
  for (int k = 1; k < 20000; ++k) {
    const double w = k / 20000.0;
    if (g(w) > best) {
      best = g(w);
      best_w = w;
    }
  }
  for (double step = 1.0 / 20000; step > 1e-15; step /= 2) {
    for (double w : {best_w - step, best_w + step}) {
      if (w >= 0 && w < 1 && g(w) > best) {
        best = g(w);
        best_w = w;
      }
    }
  }
  return std::max(0.0, best);
}

TEST(Constants, ExactPointAtFourNinths) {
  const auto p = exact_beta_point(Rat(4, 9));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->omega, Rat(1, 2));
  EXPECT_EQ(p->f_of_beta, Rat(1, 9));
  EXPECT_EQ(p->epsilon, Rat(1, 10));
  EXPECT_EQ(p->expectation_coefficient(), Rat(3, 5));
  EXPECT_EQ(p->ratio(), Rat(8, 5));
}

TEST(Constants, ExactPointElsewhere) {
  // 1/beta - 2 = 4/9 at beta = 9/22.
  const auto p = exact_beta_point(Rat(9, 22));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->omega, Rat(1, 3));
  EXPECT_EQ(p->f_of_beta, Rat(1, 22));
  EXPECT_EQ(p->epsilon, Rat(5, 46));
  EXPECT_FALSE(exact_beta_point(Rat(2, 5)).has_value());
  EXPECT_THROW(exact_beta_point(Rat(1, 2)), InvalidInput);
}

TEST(Constants, FourNinthsIsTheMinimizer) {
  const double at = f_beta(4.0 / 9.0).epsilon;
  EXPECT_NEAR(at, 0.1, 1e-12);
  for (int k = 1; k < 100; ++k) {
    const double beta = 1.0 / 3.0 + k * (1.0 / 6.0) / 100.0;
    EXPECT_GE(f_beta(beta).epsilon, at - 1e-12) << beta;
  }
}

TEST(Constants, ValueAtPointFortyFive) {
  // Evaluated independently in double precision.
  const BetaPoint p = f_beta(0.45);
  EXPECT_NEAR(p.omega, 0.5285954792089682, 1e-12);
  EXPECT_NEAR(p.f_of_beta, 0.12573593128807145, 1e-12);
  EXPECT_NEAR(p.epsilon, 0.10026149339915957, 1e-12);
}

TEST(Constants, ClosedFormAgreesWithDirectMaximum) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> beta_dist(1.0 / 3.0 + 1e-6, 0.5 - 1e-6);
  for (int k = 0; k < 100; ++k) {
    const double beta = beta_dist(rng);
    const BetaPoint p = f_beta(beta);
    EXPECT_NEAR(p.f_of_beta, f_closed(beta), kFBetaTolerance);
    EXPECT_NEAR(p.f_numeric, f_closed(beta), kFBetaTolerance);
    EXPECT_NEAR(p.epsilon, 0.5 - beta / (f_closed(beta) + 1), kFBetaTolerance);
  }
}

TEST(Constants, BoundaryAndDomain) {
  const BetaPoint left = f_beta(1.0 / 3.0);
  EXPECT_NEAR(left.omega, 0, 1e-12);
  EXPECT_NEAR(left.f_of_beta, 0, 1e-12);
  EXPECT_THROW(f_beta(0.5), InvalidInput);
  EXPECT_THROW(f_beta(0.3), InvalidInput);
  EXPECT_THROW(f_beta(std::nan("")), InvalidInput);
}

TEST(Constants, ExactComparisonWithIrrationalF) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(0, 4000);
  for (int k = 0; k < 300; ++k) {
    const Rat beta(1000 + num(rng) % 499 + 1, 3000);  // strictly inside (1/3, 1/2)
    const Rat r(num(rng) - 200, 20000);
    const double f = f_closed(to_double(beta));
    const double rd = to_double(r);
    if (std::abs(rd - f) < 1e-9) continue;
    EXPECT_EQ(leq_f_of_beta(r, beta), rd <= f) << to_string(r) << " vs f(" << to_string(beta) << ")";
  }
  EXPECT_TRUE(leq_f_of_beta(Rat(1, 9), Rat(4, 9)));
  EXPECT_FALSE(leq_f_of_beta(Rat(1, 9) + Rat(1, 1000000000), Rat(4, 9)));
  EXPECT_TRUE(leq_f_of_beta(Rat(-1), Rat(2, 5)));
}

TEST(Constants, FOfBetaString) {
  EXPECT_EQ(f_of_beta_string(Rat(4, 9)), "1/9");
  const std::string s = f_of_beta_string(Rat(2, 5));
  EXPECT_NEAR(std::stod(s), f_closed(0.4), 1e-15);
}

TEST(Constants, MixedBoundMatchesIndependentInnerMaximum) {
  for (double beta : {0.35, 0.4, 4.0 / 9.0, 0.47}) {
    for (double y : {0.0, 0.01, 0.05, 0.1, 0.2}) {
      const MixedPoint p = mixed_bound(beta, y);
      const double f = mixed_inner_max(beta, y);
      EXPECT_NEAR(p.f, f, 1e-9) << beta << " " << y;
      EXPECT_NEAR(p.epsilon, 0.5 - (beta - y) / (f + 1), 1e-9);
    }
  }
}

TEST(Constants, MixedBoundAtFourNinths) {
  const MixedPoint zero = mixed_bound(4.0 / 9.0, 0);
  EXPECT_NEAR(zero.f, 1.0 / 9.0, 1e-10);
  EXPECT_NEAR(zero.epsilon, 0.1, 1e-10);
  const MixedPoint p = mixed_bound(4.0 / 9.0, 0.05);
  EXPECT_NEAR(p.epsilon, 0.11343134084557255, 1e-9);
  EXPECT_NEAR(p.omega, 0.39792027, 1e-6);
  // The maximizer follows the shifted closed form.
  EXPECT_NEAR(p.omega, p.omega_shifted, 1e-6);
  EXPECT_GT(std::abs(p.omega - p.omega_unshifted), 0.1);
  EXPECT_THROW(mixed_bound(0.5, 0), InvalidInput);
  EXPECT_THROW(mixed_bound(0.4, -0.1), InvalidInput);
}

TEST(Constants, MixedMinimumIsAtZeroShift) {
  const MixedMinimum min = minimize_mixed_bound();
  EXPECT_LE(min.point.y, 1e-4);
  EXPECT_NEAR(min.point.epsilon, 0.1, 1e-4);
  EXPECT_NEAR(min.point.beta, 4.0 / 9.0, 1e-3);
  EXPECT_GT(min.evaluations, 0U);
  MixedSearch bad;
  bad.y_hi = -1;
  EXPECT_THROW(minimize_mixed_bound(bad), InvalidInput);
}

}  // namespace
}  // namespace bomc
