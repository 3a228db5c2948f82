#include "unibound/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "unibound/errors.hpp"
#include "unibound/numeric.hpp"

namespace unibound {
namespace {

constexpr int kMaxBisectionSteps = 200;
constexpr double kBisectionRelWidth = 1e-13;

double abs_poly(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

double constraint_rhs(double a, double beta, int r) {
  double tail = 0.0;
  double a_pow = a;
  for (int k = 2; k <= r; ++k) {
    a_pow *= a;
    tail += a_pow * ipow(beta, r - k);
  }
  const double numer = (r - 1) * ipow(beta, r) + (r - 1) * a * ipow(beta, r - 1) - 2.0 * tail;
  return numer / ((r + 1) * (beta - a));
}

// alpha * h_{r-2}(alpha, beta) = sum_{i=1}^{r-1} alpha^i beta^{r-1-i}
double constraint_lhs(double alpha, double beta, int r) {
  return alpha * homogeneous_sum(alpha, beta, r - 2);
}

}  // namespace

double MomentPolynomial::eval_f(double x) const noexcept { return horner(f, x); }
double MomentPolynomial::eval_g(double x) const noexcept { return horner(g, x); }

Deflation deflate(std::span<const double> coeffs, double root) {
  if (coeffs.size() < 2) throw InputError("cannot deflate a constant polynomial");
  const std::size_t degree = coeffs.size() - 1;
  Deflation out;
  out.quotient.assign(degree, 0.0);
  double carry = coeffs[degree];
  for (std::size_t k = degree; k-- > 0;) {
    out.quotient[k] = carry;
    carry = coeffs[k] + carry * root;
  }
  out.remainder = carry;
  return out;
}

MomentPolynomial build_moment_polynomial(double alpha, double beta, int r) {
  if (r < 2) throw InputError("moment polynomial needs order r >= 2");
  if (alpha == beta) throw InputError("moment polynomial needs alpha != beta");
  if (r % 2 == 1 && (alpha < 0.0 || beta < 0.0)) {
    throw UnsupportedRegimeError("odd order needs alpha >= 0 and beta >= 0");
  }

  MomentPolynomial poly;
  poly.order = r;
  poly.alpha = alpha;
  poly.beta = beta;
  poly.f.assign(static_cast<std::size_t>(r) + 1, 0.0);
  poly.f[r] = 1.0;
  poly.f[1] = -homogeneous_sum(alpha, beta, r - 1);
  poly.f[0] += alpha * beta * homogeneous_sum(alpha, beta, r - 2);

  const auto first = deflate(poly.f, alpha);
  const auto second = deflate(first.quotient, beta);
  poly.g = second.quotient;

  double f_scale = 0.0;
  for (double c : poly.f) f_scale = std::max(f_scale, std::abs(c));
  poly.division_residual = std::max(std::abs(first.remainder), std::abs(second.remainder)) / f_scale;
  if (poly.division_residual > kDivisionTolerance) {
    std::ostringstream msg;
    msg << "synthetic division remainder " << poly.division_residual << " exceeds tolerance";
    throw ConsistencyError(msg.str());
  }

  if (r % 2 == 1) {
    poly.grid_lo = 0.0;
    poly.grid_hi = 2.0 * std::max(alpha, beta);
  } else {
    const double span = 2.0 * std::max({std::abs(alpha), std::abs(beta), 1.0});
    poly.grid_lo = -span;
    poly.grid_hi = span;
  }
  poly.min_g_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kNonnegativityGridPoints; ++i) {
    const double x = poly.grid_lo + (poly.grid_hi - poly.grid_lo) * i / (kNonnegativityGridPoints - 1);
    const double scale = abs_poly(poly.g, x);
    if (scale == 0.0) continue;
    poly.min_g_ratio = std::min(poly.min_g_ratio, poly.eval_g(x) / scale);
  }
  if (poly.min_g_ratio < -kNonnegativityTolerance) {
    std::ostringstream msg;
    msg << "cofactor g is negative on [" << poly.grid_lo << ", " << poly.grid_hi
        << "] (relative value " << poly.min_g_ratio << ")";
    throw NonnegativityError(msg.str());
  }
  return poly;
}

std::optional<double> try_solve_witness_constraint(double a, double beta, int r) {
  if (r < 2) throw InputError("witness constraint needs order r >= 2");
  if (!(a < beta)) throw InputError("witness constraint needs a < beta");
  if (r % 2 == 1 && a < 0.0) throw UnsupportedRegimeError("odd order needs a >= 0");

  const double rhs = constraint_rhs(a, beta, r);
  auto residual = [&](double alpha) { return constraint_lhs(alpha, beta, r) - rhs; };

  double lo = a;
  double hi = beta;
  double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;

  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= kBisectionRelWidth * std::max({1.0, std::abs(lo), std::abs(hi)})) break;
    const double f_mid = residual(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double solve_witness_constraint(double a, double beta, int r) {
  auto root = try_solve_witness_constraint(a, beta, r);
  if (!root) {
    std::ostringstream msg;
    msg << "witness constraint has no sign change on [" << a << ", " << beta << "] for r = " << r;
    throw ConstraintInfeasibleError(msg.str());
  }
  return *root;
}

}  // namespace unibound
