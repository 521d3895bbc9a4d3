#pragma once

#include "bomc/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace bomc {

/// Floating-point evaluation of the closed-form constants at one beta.
///   omega = 1 - sqrt(1/beta - 2)
///   f     = beta omega (3 - 1/beta - omega) / (1 - omega)
///   eps   = 1/2 - beta / (f + 1)
/// f_numeric is the direct maximum of (x-1)(4 beta - 1 - beta x)/(2 - x) over
/// x in [1, 2); f_beta throws std::logic_error if the two differ by more
/// than kFBetaTolerance.
struct BetaPoint {
  double beta = 0;
  double omega = 0;
  double f_of_beta = 0;
  double epsilon = 0;
  double f_numeric = 0;
};

inline constexpr double kFBetaTolerance = 1e-9;

/// Accepts 1/3 <= beta < 1/2 (the closed left end is the boundary probe
/// omega = f = 0); throws InvalidInput otherwise.
BetaPoint f_beta(double beta);

/// max over x in [1,2) of (x-1)(4 beta - 1 - beta x)/(2 - x).
double f_numeric(double beta);

/// The constants in exact rationals, available when 1/beta - 2 is the square
/// of a rational.
struct ExactBetaPoint {
  Rat beta;
  Rat omega;
  Rat f_of_beta;
  Rat epsilon;

  Rat expectation_coefficient() const { return Rat(1, 2) + epsilon; }
  Rat ratio() const { return 1 + expectation_coefficient(); }
};

std::optional<ExactBetaPoint> exact_beta_point(const Rat& beta);

/// Exact decision of r <= f(beta) for rational beta in [1/3, 1/2), even when
/// f(beta) is irrational. Uses f(beta) = beta (1 - sqrt(a))^2, a = 1/beta - 2.
bool leq_f_of_beta(const Rat& r, const Rat& beta);

/// "p/q" when f(beta) is rational, otherwise a 17-digit decimal.
std::string f_of_beta_string(const Rat& beta);

/// Two-parameter bound with the inner maximizer found numerically.
///   f(beta,y) = max(0, max_{omega in [0,1)} (beta omega (3 - 1/beta - omega) - y)/(1 - omega))
///   eps       = 1/2 - (beta - y)/(f(beta,y) + 1)
/// The two printed closed forms for the maximizer are evaluated for reference
/// only: omega_shifted = 1 - sqrt(1/beta - 2 + y/beta) and
/// omega_unshifted = sqrt(1/beta - 2 + y/beta).
struct MixedPoint {
  double beta = 0;
  double y = 0;
  double omega = 0;
  double f = 0;
  double epsilon = 0;
  double omega_shifted = 0;
  double omega_unshifted = 0;
};

/// Requires 1/3 < beta < 1/2 and y >= 0.
MixedPoint mixed_bound(double beta, double y);

struct MixedSearch {
  double beta_lo = 1.0 / 3.0;  // exclusive
  double beta_hi = 0.5;        // exclusive
  double y_lo = 0.0;
  double y_hi = 0.2;
  std::size_t beta_steps = 200;
  std::size_t y_steps = 40;
  double step_tolerance = 1e-10;
};

struct MixedMinimum {
  MixedPoint point;
  std::size_t evaluations = 0;
};

/// Grid scan followed by a bounded compass search from the best grid point.
MixedMinimum minimize_mixed_bound(const MixedSearch& search = {});

}  // namespace bomc
