#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mclt/combinatorics.hpp"
#include "mclt/errors.hpp"
#include "mclt/rational.hpp"

namespace mclt {

// Standard arcsine law on (-sqrt(2), sqrt(2)): density 1/(pi*sqrt(2-x^2)),
// even moments (2k-1)!!/k!. This is the monotone CLT limit distribution.

inline double arcsine_pdf(double x) {
  if (!(std::abs(x) < std::numbers::sqrt2))
    throw std::domain_error("arcsine_pdf: |x| must be < sqrt(2), got " +
                            std::to_string(x));
  return 1.0 / (std::numbers::pi * std::sqrt(2.0 - x * x));
}

inline Rational arcsine_moment_closed(int m) {
  if (m < 0) throw InvalidInputError("negative moment order");
  if (m % 2 != 0) return Rational();
  const int k = m / 2;
  return Rational(double_factorial_odd(k), factorial(k));
}

struct QuadratureSpec {
  int panel_count = 64;
  double tolerance = 1e-10;
  int max_panel_count = 1 << 14;
};

namespace detail {

// 5-point Gauss-Legendre nodes and weights on [-1, 1].
inline constexpr std::array<double, 5> kGaussNodes = {
    -0.9061798459386640, -0.5384693101056831, 0.0,
    0.5384693101056831, 0.9061798459386640};
inline constexpr std::array<double, 5> kGaussWeights = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};

// (1/pi) * integral over [-pi/2, pi/2] of (sqrt(2) sin(theta))^m, panels
// summed left to right so the result is reproducible bit for bit.
inline double arcsine_panel_sum(int m, int panels) {
  const double a = -std::numbers::pi / 2.0;
  const double h = std::numbers::pi / static_cast<double>(panels);
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    double panel = 0.0;
    for (std::size_t j = 0; j < kGaussNodes.size(); ++j) {
      const double theta = mid + 0.5 * h * kGaussNodes[j];
      const double x = std::numbers::sqrt2 * std::sin(theta);
      panel += kGaussWeights[j] * std::pow(x, m);
    }
    total += panel * 0.5 * h;
  }
  return total / std::numbers::pi;
}

}  // namespace detail

// Evaluates (1/pi) * integral_{-sqrt2}^{sqrt2} x^m / sqrt(2-x^2) dx after the
// substitution x = sqrt(2) sin(theta), which removes the endpoint
// singularity. Panels double until two successive estimates agree within
// spec.tolerance.
inline double arcsine_moment_quadrature(int m,
                                        const QuadratureSpec& spec = {}) {
  if (m < 0) throw InvalidInputError("negative moment order");
  if (spec.panel_count < 2)
    throw InvalidInputError("quadrature needs at least 2 panels");
  if (!(spec.tolerance > 0.0))
    throw InvalidInputError("quadrature tolerance must be positive");
  int panels = spec.panel_count;
  double prev = detail::arcsine_panel_sum(m, panels);
  double delta = std::numeric_limits<double>::infinity();
  while (panels <= spec.max_panel_count / 2) {
    panels *= 2;
    const double cur = detail::arcsine_panel_sum(m, panels);
    delta = std::abs(cur - prev);
    if (delta <= spec.tolerance) return cur;
    prev = cur;
  }
  throw ConvergenceError(prev, delta);
}

}  // namespace mclt
