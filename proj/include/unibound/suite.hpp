#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unibound/audit.hpp"

namespace unibound {

/// Tallies for one check name across a run.
struct CheckTally {
  std::size_t run = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
  /// Smallest relative margin seen among applicable checks.
  std::optional<double> min_relative_margin;
};

struct FailureRecord {
  std::string section;  // "discrete", "density", "tightness", "factorization", "consistency"
  std::uint64_t trial = 0;
  std::string check;
  double bound = 0.0;
  double actual = 0.0;
  std::string detail;
  std::optional<Distribution> dist;
};

/// Outcome of one trial: a discrete pmf and a step density, both audited.
struct TrialOutcome {
  AuditReport discrete;
  AuditReport density;
};

struct SectionStats {
  std::size_t cases = 0;
  std::size_t failed = 0;
  double worst = 0.0;  // section-specific worst statistic
};

struct SuiteSummary {
  TrialConfig config;
  std::size_t discrete_trials = 0;
  std::size_t density_trials = 0;
  std::size_t lattice_trials = 0;
  std::size_t shapes_not_unimodal = 0;
  std::map<std::string, CheckTally> tallies;
  SectionStats tightness;      // worst = largest |relative margin|
  SectionStats factorization;  // worst = largest division residual
  double factorization_min_g_ratio = 0.0;
  SectionStats consistency;    // worst = largest relative error
  std::vector<FailureRecord> failures;

  [[nodiscard]] std::size_t violations() const noexcept { return failures.size(); }
  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
  /// Failure with the smallest distribution (fewest points or pieces), if any.
  [[nodiscard]] const FailureRecord* minimal_counterexample() const noexcept;
};

// Generation for trial i: pmf with n in [min(2, max_points), max_points] on
// a lattice when i is even; density with 1..max_pieces pieces on [a, a + w],
// a in [0, 5] when i % 4 < 2 and in [-5, 5] otherwise, w in [0.1, 10].
[[nodiscard]] DiscretePmf trial_pmf(const TrialConfig& config, std::uint64_t index);
[[nodiscard]] StepDensity trial_density(const TrialConfig& config, std::uint64_t index);
[[nodiscard]] TrialOutcome run_trial(const TrialConfig& config, std::uint64_t index);

/// Number of (mode, mean) tightness pairs and factorization cases per suite run.
inline constexpr int kTightnessPairs = 100;
inline constexpr int kFactorizationCases = 500;

/// Tightness pair i: mode in [-10, 10], |mean - mode| in [0.1, 10], random sign.
struct ModeMeanPair {
  double mode = 0.0;
  double mean = 0.0;
};
[[nodiscard]] ModeMeanPair tightness_pair(std::uint64_t master_seed, std::uint64_t index);

struct FactorizationCase {
  double alpha = 0.0;
  double beta = 0.0;
  int order = 2;
};
/// 0 <= alpha < beta <= 10, order in [2, 8].
[[nodiscard]] FactorizationCase factorization_case(std::uint64_t master_seed, std::uint64_t index);

/// Serial reference: the whole property suite, trial by trial.
[[nodiscard]] SuiteSummary run_suite_serial(const TrialConfig& config);

/// OpenMP version of run_suite_serial. `threads` <= 0 uses the runtime
/// default. Results are merged by trial index, so the summary is identical
/// to the serial one for every thread count.
[[nodiscard]] SuiteSummary run_suite(const TrialConfig& config, int threads = 0);

struct RatioExtreme {
  std::uint64_t trial = 0;
  double ratio = 0.0;
  double window = 0.0;
  double lattice = 0.0;
};

struct BuiltinComparison {
  std::string name;
  double window = 0.0;   // support-window variance bound
  double lattice = 0.0;  // lattice variance bound
  std::optional<double> ratio;
  std::string verdict;  // "window", "lattice" or "tie"
};

/// Support-window bound versus lattice bound on the variance of random
/// unimodal lattice pmfs.
struct ComparisonSummary {
  std::uint64_t master_seed = 0;
  std::size_t trials = 0;
  std::size_t window_wins = 0;
  std::size_t lattice_wins = 0;
  std::size_t ties = 0;
  /// Over trials with a positive lattice bound.
  std::size_t ratio_cases = 0;
  std::optional<double> mean_ratio;
  std::optional<RatioExtreme> min_ratio;
  std::optional<RatioExtreme> max_ratio;
  std::string family;
  std::vector<BuiltinComparison> builtins;
};

/// Both variance bounds for a unimodal lattice pmf; the lattice bound takes
/// the best plateau mode.
[[nodiscard]] BuiltinComparison compare_bounds(const DiscretePmf& pmf, const std::string& name,
                                               const Tolerance& tol);

[[nodiscard]] ComparisonSummary run_compare(const TrialConfig& config, int threads = 0);

/// The worked pmf {(-1, 1/5), (0, 1/2), (1, 3/10)}.
[[nodiscard]] DiscretePmf example_skewed_three_point();
/// Symmetric pmf on +-5, +-10, +-15 with weights 3, 2, 1 (over 12).
[[nodiscard]] DiscretePmf example_symmetric_six_point();

}  // namespace unibound
