#include "bomc/constants.hpp"

#include "bomc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bomc {

namespace {

// Golden-section search for the maximum of a unimodal function on [lo, hi].
template <typename F>
double golden_max(F&& fn, double lo, double hi, double* arg = nullptr) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  while (b - a > 1e-13) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    }
  }
  double best_x = (a + b) / 2;
  double best = fn(best_x);
  for (double x : {lo, hi}) {
    const double v = fn(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  if (arg != nullptr) *arg = best_x;
  return best;
}

constexpr double kOpenRight = 1e-12;

}  // namespace

double f_numeric(double beta) {
  auto h = [beta](double x) { return (x - 1) * (4 * beta - 1 - beta * x) / (2 - x); };
  return golden_max(h, 1.0, 2.0 - kOpenRight);
}

BetaPoint f_beta(double beta) {
  if (!std::isfinite(beta) || beta < 1.0 / 3.0 || beta >= 0.5) {
    throw InvalidInput("f_beta needs 1/3 <= beta < 1/2");
  }
  BetaPoint p;
  p.beta = beta;
  p.omega = 1 - std::sqrt(1 / beta - 2);
  p.f_of_beta = beta * p.omega * (3 - 1 / beta - p.omega) / (1 - p.omega);
  p.epsilon = 0.5 - beta / (p.f_of_beta + 1);
  p.f_numeric = f_numeric(beta);
  if (std::abs(p.f_of_beta - p.f_numeric) > kFBetaTolerance) {
    throw std::logic_error("closed-form f(beta) disagrees with direct maximization");
  }
  return p;
}

std::optional<ExactBetaPoint> exact_beta_point(const Rat& beta) {
  if (beta < Rat(1, 3) || beta >= Rat(1, 2)) {
    throw InvalidInput("exact_beta_point needs 1/3 <= beta < 1/2");
  }
  auto root = exact_sqrt(1 / beta - 2);
  if (!root) return std::nullopt;
  ExactBetaPoint p;
  p.beta = beta;
  p.omega = 1 - *root;
  p.f_of_beta = beta * p.omega * (3 - 1 / beta - p.omega) / (1 - p.omega);
  p.epsilon = Rat(1, 2) - beta / (p.f_of_beta + 1);
  return p;
}

bool leq_f_of_beta(const Rat& r, const Rat& beta) {
  if (beta < Rat(1, 3) || beta >= Rat(1, 2)) {
    throw InvalidInput("f(beta) needs 1/3 <= beta < 1/2");
  }
  if (r < 0) return true;
  // r <= beta (1 - sqrt a)^2  <=>  sqrt a + sqrt b <= 1 with b = r / beta.
  const Rat a = 1 / beta - 2;
  const Rat b = r / beta;
  const Rat rest = 1 - a - b;
  if (rest < 0) return false;
  return 4 * a * b <= rest * rest;
}

std::string f_of_beta_string(const Rat& beta) {
  if (auto exact = exact_beta_point(beta)) return to_fraction_string(exact->f_of_beta);
  std::ostringstream out;
  out << std::setprecision(17) << f_beta(to_double(beta)).f_of_beta;
  return out.str();
}

MixedPoint mixed_bound(double beta, double y) {
  if (!std::isfinite(beta) || !(beta > 1.0 / 3.0 && beta < 0.5)) {
    throw InvalidInput("mixed_bound needs 1/3 < beta < 1/2");
  }
  if (!std::isfinite(y) || y < 0) throw InvalidInput("mixed_bound needs y >= 0");
  // Concave in 1 - omega on [0, 1) since 2 beta - 1 - y < 0.
  auto g = [beta, y](double w) {
    return (beta * w * (3 - 1 / beta - w) - y) / (1 - w);
  };
  MixedPoint p;
  p.beta = beta;
  p.y = y;
  const double inner = golden_max(g, 0.0, 1.0 - kOpenRight, &p.omega);
  p.f = inner > 0 ? inner : 0.0;
  p.epsilon = 0.5 - (beta - y) / (p.f + 1);
  const double radicand = 1 / beta - 2 + y / beta;
  p.omega_shifted = 1 - std::sqrt(radicand);
  p.omega_unshifted = std::sqrt(radicand);
  return p;
}

MixedMinimum minimize_mixed_bound(const MixedSearch& s) {
  if (!(s.beta_lo < s.beta_hi) || !(s.y_lo <= s.y_hi) || s.y_lo < 0 || s.beta_steps == 0 ||
      s.y_steps == 0 || !(s.step_tolerance > 0)) {
    throw InvalidInput("minimize_mixed_bound: malformed search box");
  }
  MixedMinimum out;
  auto eval = [&](double beta, double y) {
    ++out.evaluations;
    return mixed_bound(beta, y);
  };

  // Interior grid in beta (both ends open), closed grid in y.
  const double db = (s.beta_hi - s.beta_lo) / static_cast<double>(s.beta_steps + 1);
  const double dy = (s.y_hi - s.y_lo) / static_cast<double>(s.y_steps);
  out.point.epsilon = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i <= s.beta_steps; ++i) {
    for (std::size_t j = 0; j <= s.y_steps; ++j) {
      const MixedPoint p = eval(s.beta_lo + db * static_cast<double>(i),
                                s.y_lo + dy * static_cast<double>(j));
      if (p.epsilon < out.point.epsilon) out.point = p;
    }
  }

  const double beta_min = s.beta_lo + 1e-12;
  const double beta_max = s.beta_hi - 1e-12;
  double step_b = db;
  double step_y = dy;
  while (step_b > s.step_tolerance || step_y > s.step_tolerance) {
    bool moved = false;
    const double moves[4][2] = {{step_b, 0}, {-step_b, 0}, {0, step_y}, {0, -step_y}};
    for (const auto& mv : moves) {
      const double b = std::min(beta_max, std::max(beta_min, out.point.beta + mv[0]));
      const double y = std::min(s.y_hi, std::max(s.y_lo, out.point.y + mv[1]));
      if (b == out.point.beta && y == out.point.y) continue;
      const MixedPoint p = eval(b, y);
      if (p.epsilon < out.point.epsilon) {
        out.point = p;
        moved = true;
        break;
      }
    }
    if (!moved) {
      step_b /= 2;
      step_y /= 2;
    }
  }
  return out;
}

}  // namespace bomc
