#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace unibound {

/// Absolute tolerance on total probability mass accepted at construction.
inline constexpr double kMassTolerance = 1e-12;

/// Finite discrete distribution: strictly increasing support points with
/// nonnegative probabilities summing to one.
class DiscretePmf {
 public:
  /// Throws InputError when any invariant fails. Inputs are never renormalized.
  DiscretePmf(std::vector<double> points, std::vector<double> probs);

  [[nodiscard]] const std::vector<double>& points() const noexcept { return points_; }
  [[nodiscard]] const std::vector<double>& probs() const noexcept { return probs_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] double lo() const noexcept { return points_.front(); }
  [[nodiscard]] double hi() const noexcept { return points_.back(); }

  /// Support is a run of consecutive integers.
  [[nodiscard]] bool is_lattice() const noexcept;

  bool operator==(const DiscretePmf&) const = default;

 private:
  std::vector<double> points_;
  std::vector<double> probs_;
};

/// Step density on [t_0, t_m]: height h_k on (t_{k-1}, t_k).
class StepDensity {
 public:
  StepDensity(std::vector<double> breakpoints, std::vector<double> heights);

  /// Single-piece uniform density on [a, b], a < b.
  static StepDensity uniform(double a, double b);

  [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  [[nodiscard]] const std::vector<double>& heights() const noexcept { return heights_; }
  [[nodiscard]] std::size_t pieces() const noexcept { return heights_.size(); }
  [[nodiscard]] double lo() const noexcept { return breakpoints_.front(); }
  [[nodiscard]] double hi() const noexcept { return breakpoints_.back(); }
  [[nodiscard]] double piece_mass(std::size_t k) const noexcept {
    return heights_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
  }

  bool operator==(const StepDensity&) const = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> heights_;
};

using Distribution = std::variant<DiscretePmf, StepDensity>;

enum class MomentKind { Raw, Central };

struct MomentValue {
  int order = 1;
  MomentKind kind = MomentKind::Raw;
  double value = 0.0;
};

// Moments are exact up to rounding: compensated sums for pmfs, closed-form
// piecewise polynomial integrals for step densities. Order 0 gives the mass.
[[nodiscard]] double raw_moment(const DiscretePmf& pmf, int r);
[[nodiscard]] double raw_moment(const StepDensity& density, int r);
[[nodiscard]] double raw_moment(const Distribution& dist, int r);

[[nodiscard]] double central_moment(const DiscretePmf& pmf, int r);
[[nodiscard]] double central_moment(const StepDensity& density, int r);
[[nodiscard]] double central_moment(const Distribution& dist, int r);

[[nodiscard]] MomentValue moment(const Distribution& dist, int r, MomentKind kind);

[[nodiscard]] double support_lo(const Distribution& dist) noexcept;
[[nodiscard]] double support_hi(const Distribution& dist) noexcept;

enum class ShapeKind { NonIncreasing, NonDecreasing, Unimodal, NotUnimodal };

[[nodiscard]] std::string_view to_string(ShapeKind kind) noexcept;

/// Shape of a weight sequence (probabilities or step heights).
///
/// For every kind except NotUnimodal, [peak_lo, peak_hi] is the maximal run
/// of indices holding the peak weight; each of them is an admissible mode.
/// NonIncreasing has peak_lo == 0, NonDecreasing has peak_hi == n - 1. A
/// constant sequence reports NonIncreasing with `also_non_decreasing` set.
struct ShapeClass {
  ShapeKind kind = ShapeKind::NotUnimodal;
  std::size_t peak_lo = 0;
  std::size_t peak_hi = 0;
  bool also_non_decreasing = false;

  [[nodiscard]] bool is_unimodal() const noexcept { return kind != ShapeKind::NotUnimodal; }
  [[nodiscard]] bool non_increasing() const noexcept { return kind == ShapeKind::NonIncreasing; }
  [[nodiscard]] bool non_decreasing() const noexcept {
    return kind == ShapeKind::NonDecreasing || also_non_decreasing;
  }

  bool operator==(const ShapeClass&) const = default;
};

/// Uses exact comparisons on the stored values.
[[nodiscard]] ShapeClass classify_shape(std::span<const double> weights);
[[nodiscard]] ShapeClass classify_shape(const Distribution& dist);

/// Closed interval of admissible modes in x-coordinates. For a pmf this is
/// [x_{peak_lo}, x_{peak_hi}]; for a step density it is the closure of the
/// peak pieces, [t_{peak_lo}, t_{peak_hi + 1}].
struct ModeInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Requires shape.is_unimodal().
[[nodiscard]] ModeInterval mode_interval(const Distribution& dist, const ShapeClass& shape);

}  // namespace unibound
