#pragma once

#include <optional>
#include <span>
#include <vector>

namespace unibound {

/// Tolerance on synthetic-division remainders, relative to the largest |f| coefficient.
inline constexpr double kDivisionTolerance = 1e-9;
/// g may dip to -kNonnegativityTolerance * (sum_i |g_i| |x|^i) on the check grid.
inline constexpr double kNonnegativityTolerance = 1e-9;
inline constexpr int kNonnegativityGridPoints = 1024;

/// f(x) = x^r - h_{r-1}(alpha, beta) x + alpha beta h_{r-2}(alpha, beta),
/// the degree-r polynomial through (alpha, alpha^r) and (beta, beta^r)
/// subtracted from x^r, together with its cofactor g in
/// f(x) = (x - alpha)(x - beta) g(x). Coefficients are in ascending order.
struct MomentPolynomial {
  int order = 2;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> f;
  std::vector<double> g;
  /// Largest synthetic-division remainder over max |f_i|.
  double division_residual = 0.0;
  /// Smallest g(x) / sum_i |g_i| |x|^i over the check grid.
  double min_g_ratio = 0.0;
  double grid_lo = 0.0;
  double grid_hi = 0.0;

  [[nodiscard]] double eval_f(double x) const noexcept;
  [[nodiscard]] double eval_g(double x) const noexcept;
};

struct Deflation {
  std::vector<double> quotient;
  double remainder = 0.0;
};

/// Synthetic division of an ascending-coefficient polynomial by (x - root).
[[nodiscard]] Deflation deflate(std::span<const double> coeffs, double root);

/// Requires r >= 2 and alpha != beta; odd r requires alpha, beta >= 0.
/// The nonnegativity of g is checked on [0, 2 max(alpha, beta)] for odd r
/// and on [-span, span], span = 2 max(|alpha|, |beta|, 1), for even r.
/// Throws ConsistencyError on a large remainder and NonnegativityError on negative g.
[[nodiscard]] MomentPolynomial build_moment_polynomial(double alpha, double beta, int r);

/// Solves for alpha in [a, beta] such that the integral of f over [a, beta]
/// vanishes, i.e. sum_{i=1}^{r-1} alpha^i beta^{r-1-i} equals
/// ((r-1) beta^r + (r-1) a beta^{r-1} - 2 sum_{k=2}^{r} a^k beta^{r-k}) / ((r+1)(beta - a)).
/// Bisection to 1e-13 relative width, at most 200 iterations.
[[nodiscard]] double solve_witness_constraint(double a, double beta, int r);

/// As above, but returns nullopt when the constraint has no bracketed root.
[[nodiscard]] std::optional<double> try_solve_witness_constraint(double a, double beta, int r);

}  // namespace unibound
