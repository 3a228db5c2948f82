#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unibound/bounds.hpp"
#include "unibound/distribution.hpp"

namespace unibound {

/// lhs >= rhs passes iff lhs >= rhs - max(abs, rel * max(|lhs|, |rhs|)).
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;

  [[nodiscard]] double allowance(double lhs, double rhs) const noexcept;
  [[nodiscard]] bool holds(double lhs, double rhs) const noexcept {
    return lhs >= rhs - allowance(lhs, rhs);
  }
};

struct TrialConfig {
  std::uint64_t master_seed = 1;
  int n_trials = 1000;
  int max_points = 12;
  int max_pieces = 64;
  int r_max = 3;
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;

  /// Throws InputError on non-positive caps or tolerances.
  void validate() const;
  [[nodiscard]] Tolerance tolerance() const noexcept { return {abs_tol, rel_tol}; }
};

enum class CheckStatus { Pass, Fail, NotApplicable };

[[nodiscard]] std::string_view to_string(CheckStatus status) noexcept;

/// One bound evaluated against the exact moment.
struct Check {
  std::string name;  // bound source tag, or "mean-range"
  std::optional<BoundSource> source;
  BoundKind kind = BoundKind::Lower;
  MomentKind moment = MomentKind::Central;
  int order = 2;
  std::optional<double> mode;  // mode the bound was evaluated at
  double bound = 0.0;
  double actual = 0.0;
  /// actual - bound for lower bounds, bound - actual for upper bounds.
  double margin = 0.0;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string note;

  /// margin / max(|bound|, |actual|), 0 when both vanish.
  [[nodiscard]] double relative_margin() const noexcept;
};

struct AuditReport {
  std::string id;  // FNV-1a hash of the stored values
  Distribution dist;
  ShapeClass shape;
  double mean = 0.0;
  double variance = 0.0;
  std::vector<Check> checks;

  [[nodiscard]] std::size_t count(CheckStatus status) const noexcept;
  [[nodiscard]] bool passed() const noexcept { return count(CheckStatus::Fail) == 0; }
  /// First applicable check with the given name, if any.
  [[nodiscard]] const Check* find(std::string_view name, int order = 0) const noexcept;
};

struct AuditOptions {
  int r_max = 3;
  Tolerance tol;
};

/// Support-window bound on the 2r-th central moment at the pmf's own mean.
/// Zero when the mean sits on a support point (or rounds past an end point).
[[nodiscard]] BoundResult discrete_window_bound(const DiscretePmf& pmf, double mean, int r);

[[nodiscard]] std::string distribution_id(const Distribution& dist);

/// Evaluates every bound applicable to the distribution's kind and shape.
///
/// Step densities: shape-specific variance, raw-moment and even central
/// bounds, the upper variance bound, and the mean-range property. Pmfs:
/// the support-window central bound and, on integer lattices, the lattice
/// variance bound. Both: the tangent raw bound at alpha = mean. Bounds valid
/// at every admissible mode are evaluated at each plateau end point (each
/// lattice plateau member for pmfs) and the largest is checked. Raw moments
/// run over orders 2..2 r_max; odd orders need support in [0, inf).
[[nodiscard]] AuditReport audit(const Distribution& dist, const AuditOptions& options = {});

}  // namespace unibound
