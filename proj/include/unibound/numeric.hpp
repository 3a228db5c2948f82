#pragma once

#include <cmath>
#include <span>

namespace unibound {

// Repeated multiplication keeps results identical across libm versions.
inline double ipow(double x, int n) noexcept {
  double result = 1.0;
  for (int i = 0; i < n; ++i) result *= x;
  return result;
}

/// Complete homogeneous symmetric polynomial of degree m in two variables:
/// sum_{i=0}^{m} x^i y^(m-i). Equals (x^(m+1) - y^(m+1)) / (x - y) for x != y
/// and (m+1) x^m at x == y, without the cancellation of the quotient form.
inline double homogeneous_sum(double x, double y, int m) noexcept {
  double h = 1.0;
  double y_pow = 1.0;
  for (int k = 1; k <= m; ++k) {
    y_pow *= y;
    h = h * x + y_pow;
  }
  return h;
}

/// Horner evaluation, coefficients in ascending order of degree.
inline double horner(std::span<const double> coeffs, double x) noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace unibound
