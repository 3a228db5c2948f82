#pragma once

#include <optional>
#include <string_view>

#include "unibound/distribution.hpp"

namespace unibound {

enum class BoundKind { Lower, Upper };

/// Every bound the library evaluates.
enum class BoundSource {
  VarianceNonIncreasing,  // (mean - a)^2 / 3
  VarianceNonDecreasing,  // (mean - b)^2 / 3
  VarianceUnimodal,       // (mean - M)^2 / 3
  RawTangent,             // r alpha^{r-1} mean - (r-1) alpha^r
  RawNonIncreasing,       // E[U^r], U uniform on [a, 2 mean - a]
  RawUnimodal,            // E[U^r], U uniform between M and 2 mean - M
  CentralUnimodal,        // (mean - M)^{2r} / (2r + 1)
  CentralDiscreteWindow,  // two-point bound from the support window around the mean
  VarianceLattice,        // ((mean - M)^2 + |mean - M|) / 3
  VarianceJacobson,       // (b - a)^2 / 9, upper
};

inline constexpr BoundSource kAllBoundSources[] = {
    BoundSource::VarianceNonIncreasing, BoundSource::VarianceNonDecreasing,
    BoundSource::VarianceUnimodal,      BoundSource::RawTangent,
    BoundSource::RawNonIncreasing,      BoundSource::RawUnimodal,
    BoundSource::CentralUnimodal,       BoundSource::CentralDiscreteWindow,
    BoundSource::VarianceLattice,       BoundSource::VarianceJacobson,
};

/// Stable machine tag, e.g. "variance.unimodal".
[[nodiscard]] std::string_view to_string(BoundSource source) noexcept;
/// Human label naming the hypothesis the bound rests on.
[[nodiscard]] std::string_view describe(BoundSource source) noexcept;
[[nodiscard]] std::string_view to_string(BoundKind kind) noexcept;

/// Roots of the quadratic (x - alpha)(x - beta) whose expectation is
/// nonnegative under the shape constraint; alpha <= beta.
struct QuadraticWitness {
  double alpha = 0.0;
  double beta = 0.0;
};

struct BoundResult {
  double value = 0.0;
  BoundKind kind = BoundKind::Lower;
  BoundSource source = BoundSource::RawTangent;
  int order = 2;  // order of the bounded moment
  MomentKind moment = MomentKind::Central;
  std::optional<QuadraticWitness> witness;
};

enum class Direction { NonIncreasing, NonDecreasing };

/// Slack allowed on mean-range preconditions, relative to the data scale.
inline constexpr double kRangeSlack = 1e-12;

/// Lower bound on E[X^r] from E[(X - alpha)(X - beta) g(X)] >= 0:
/// h_{r-1}(alpha, beta) mean - alpha beta h_{r-2}(alpha, beta).
/// Throws InputError when alpha == beta (use tangent_raw_lb).
[[nodiscard]] double two_point_raw_lb(double alpha, double beta, double mean, int r);

/// Tangent-line bound r alpha^{r-1} mean - (r-1) alpha^r; largest at alpha = mean.
[[nodiscard]] double tangent_raw_lb(double alpha, double mean, int r);

[[nodiscard]] QuadraticWitness witness_monotone(double a, double mean);
/// Mirrored about M when mean < M; the pair is always returned sorted.
[[nodiscard]] QuadraticWitness witness_unimodal(double mode, double mean);

/// Variance bound for monotone densities on [a, b]. Throws PreconditionError
/// unless a <= mean <= (a+b)/2 (non-increasing) or (a+b)/2 <= mean <= b.
[[nodiscard]] BoundResult variance_lb_monotone(double a, double b, double mean, Direction direction);

[[nodiscard]] BoundResult variance_lb_unimodal(double mean, double mode);

/// Upper bound on the variance of a unimodal density on [a, b].
[[nodiscard]] BoundResult variance_ub_jacobson(double a, double b);

/// Raw-moment bound for a non-increasing density on [a, b]. Odd r needs a >= 0.
[[nodiscard]] BoundResult raw_moment_lb_monotone(double a, double mean, int r);

/// Raw-moment bound for a density unimodal at `mode`. Odd r needs
/// mode >= 0 and 2 mean - mode >= 0.
[[nodiscard]] BoundResult raw_moment_lb_unimodal(double mode, double mean, int r);

/// Bound on the 2r-th central moment of a density unimodal at `mode`.
[[nodiscard]] BoundResult central_even_lb_unimodal(double mean, double mode, int r);

/// Bound on the 2r-th central moment of any discrete distribution whose
/// consecutive support points x_lo < x_hi straddle the mean.
[[nodiscard]] BoundResult discrete_central_lb(double x_lo, double x_hi, double mean, int r);

/// Variance bound for unimodal pmfs on consecutive integers with integer mode.
[[nodiscard]] BoundResult lattice_variance_lb(double mean, double mode);

}  // namespace unibound
