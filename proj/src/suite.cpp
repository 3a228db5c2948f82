#include "unibound/suite.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "unibound/compensated_sum.hpp"
#include "unibound/errors.hpp"
#include "unibound/generators.hpp"
#include "unibound/polynomial.hpp"

namespace unibound {
namespace {

// Trials are generated and audited in blocks so memory stays bounded; the
// merge walks each block in index order.
constexpr std::uint64_t kBlock = 1024;

constexpr double kTightnessRelTol = 1e-12;
constexpr double kConsistencyRelTol = 1e-10;

enum class Stream : std::uint64_t { Discrete = 1, Density = 2, Compare = 3, Tightness = 4, Factorization = 5 };

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index, Stream stream) {
  return mix64(trial_seed(master, index) ^ static_cast<std::uint64_t>(stream));
}

std::size_t dist_size(const Distribution& dist) {
  if (const auto* pmf = std::get_if<DiscretePmf>(&dist)) return pmf->size();
  return std::get<StepDensity>(dist).pieces();
}

void merge_report(SuiteSummary& summary, const AuditReport& report, const char* section,
                  std::uint64_t trial) {
  if (!report.shape.is_unimodal()) ++summary.shapes_not_unimodal;
  for (const auto& c : report.checks) {
    auto& tally = summary.tallies[c.name];
    if (c.status == CheckStatus::NotApplicable) {
      ++tally.not_applicable;
      continue;
    }
    ++tally.run;
    const double rel = c.relative_margin();
    tally.min_relative_margin = tally.min_relative_margin ? std::min(*tally.min_relative_margin, rel) : rel;
    if (c.status == CheckStatus::Fail) {
      ++tally.failed;
      std::ostringstream detail;
      detail << "order " << c.order;
      if (c.mode) detail << ", mode " << *c.mode;
      summary.failures.push_back({section, trial, c.name, c.bound, c.actual, detail.str(), report.dist});
    }
  }
}

void merge_trial(SuiteSummary& summary, const TrialOutcome& outcome, std::uint64_t trial) {
  ++summary.discrete_trials;
  ++summary.density_trials;
  if (std::get<DiscretePmf>(outcome.discrete.dist).is_lattice()) ++summary.lattice_trials;
  merge_report(summary, outcome.discrete, "discrete", trial);
  merge_report(summary, outcome.density, "density", trial);
}

// One tightness pair: the uniform witness must meet each bound to kTightnessRelTol.
struct TightnessOutcome {
  std::size_t cases = 0;
  double worst = 0.0;
  std::vector<FailureRecord> failures;
};

TightnessOutcome run_tightness(std::uint64_t master, std::uint64_t index) {
  const auto pair = tightness_pair(master, index);
  const Distribution witness = tightness_witness(pair.mode, pair.mean);
  TightnessOutcome out;
  auto check = [&](const BoundResult& b, double actual) {
    ++out.cases;
    const double scale = std::max(std::abs(b.value), std::abs(actual));
    const double rel = scale == 0.0 ? 0.0 : std::abs(actual - b.value) / scale;
    out.worst = std::max(out.worst, rel);
    if (!(rel <= kTightnessRelTol)) {
      std::ostringstream detail;
      detail << "order " << b.order << ", mode " << pair.mode << ", mean " << pair.mean
             << ", relative gap " << rel;
      out.failures.push_back({"tightness", index, std::string(to_string(b.source)), b.value, actual,
                              detail.str(), witness});
    }
  };
  check(variance_lb_unimodal(pair.mean, pair.mode), central_moment(witness, 2));
  const bool nonnegative = pair.mode >= 0.0 && 2.0 * pair.mean - pair.mode >= 0.0;
  for (int r = 2; r <= 5; ++r) {
    if (r % 2 == 1 && !nonnegative) continue;
    check(raw_moment_lb_unimodal(pair.mode, pair.mean, r), raw_moment(witness, r));
  }
  for (int k = 1; k <= 3; ++k) {
    check(central_even_lb_unimodal(pair.mean, pair.mode, k), central_moment(witness, 2 * k));
  }
  return out;
}

struct FactorizationOutcome {
  double residual = 0.0;
  double min_g_ratio = 0.0;
  std::optional<FailureRecord> failure;
};

FactorizationOutcome run_factorization(std::uint64_t master, std::uint64_t index) {
  const auto fc = factorization_case(master, index);
  FactorizationOutcome out;
  std::ostringstream detail;
  detail.precision(17);
  detail << "alpha " << fc.alpha << ", beta " << fc.beta << ", order " << fc.order;
  try {
    const auto poly = build_moment_polynomial(fc.alpha, fc.beta, fc.order);
    out.residual = poly.division_residual;
    out.min_g_ratio = poly.min_g_ratio;
  } catch (const std::exception& e) {
    out.failure = FailureRecord{"factorization", index, "moment-polynomial", 0.0, 0.0,
                                detail.str() + ": " + e.what(), std::nullopt};
  }
  return out;
}

struct ConsistencyCase {
  double a;
  double mean;
  int r;
};

std::vector<ConsistencyCase> consistency_grid() {
  std::vector<ConsistencyCase> grid;
  for (int r = 2; r <= 6; ++r) {
    for (double a : {0.0, 0.5, 1.0}) {
      for (double offset : {0.25, 1.0}) grid.push_back({a, a + offset, r});
    }
  }
  return grid;
}

void run_consistency(SuiteSummary& summary) {
  for (const auto& c : consistency_grid()) {
    ++summary.consistency.cases;
    const double beta = 2.0 * c.mean - c.a;
    const double alpha = solve_witness_constraint(c.a, beta, c.r);
    const double via_witness = two_point_raw_lb(alpha, beta, c.mean, c.r);
    const double closed = raw_moment_lb_monotone(c.a, c.mean, c.r).value;
    const double rel = std::abs(via_witness - closed) / std::max(std::abs(closed), 1e-300);
    summary.consistency.worst = std::max(summary.consistency.worst, rel);
    if (!(rel <= kConsistencyRelTol)) {
      ++summary.consistency.failed;
      std::ostringstream detail;
      detail << "a " << c.a << ", mean " << c.mean << ", order " << c.r << ", relative error " << rel;
      summary.failures.push_back(
          {"consistency", 0, "witness-identity", closed, via_witness, detail.str(), std::nullopt});
    }
  }
}

void merge_tightness(SuiteSummary& summary, const TightnessOutcome& t) {
  summary.tightness.cases += t.cases;
  summary.tightness.failed += t.failures.size();
  summary.tightness.worst = std::max(summary.tightness.worst, t.worst);
  summary.failures.insert(summary.failures.end(), t.failures.begin(), t.failures.end());
}

void merge_factorization(SuiteSummary& summary, const FactorizationOutcome& f) {
  ++summary.factorization.cases;
  if (f.failure) {
    ++summary.factorization.failed;
    summary.failures.push_back(*f.failure);
    return;
  }
  summary.factorization.worst = std::max(summary.factorization.worst, f.residual);
  summary.factorization_min_g_ratio = std::min(summary.factorization_min_g_ratio, f.min_g_ratio);
}

SuiteSummary start_summary(const TrialConfig& config) {
  config.validate();
  SuiteSummary summary;
  summary.config = config;
  summary.factorization_min_g_ratio = std::numeric_limits<double>::infinity();
  return summary;
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

const FailureRecord* SuiteSummary::minimal_counterexample() const noexcept {
  const FailureRecord* best = nullptr;
  for (const auto& f : failures) {
    if (!f.dist) continue;
    if (best == nullptr || dist_size(*f.dist) < dist_size(*best->dist)) best = &f;
  }
  return best;
}

DiscretePmf trial_pmf(const TrialConfig& config, std::uint64_t index) {
  Rng rng(stream_seed(config.master_seed, index, Stream::Discrete));
  const int lo = std::min(2, config.max_points);
  const auto n = static_cast<int>(rng.integer(lo, config.max_points));
  return gen_discrete_unimodal(rng.integer(0, INT64_MAX), n, index % 2 == 0);
}

StepDensity trial_density(const TrialConfig& config, std::uint64_t index) {
  Rng rng(stream_seed(config.master_seed, index, Stream::Density));
  const auto pieces = static_cast<int>(rng.integer(1, config.max_pieces));
  const double a = index % 4 < 2 ? rng.uniform(0.0, 5.0) : rng.uniform(-5.0, 5.0);
  const double width = rng.uniform(0.1, 10.0);
  return gen_density_unimodal(rng.integer(0, INT64_MAX), pieces, a, a + width);
}

TrialOutcome run_trial(const TrialConfig& config, std::uint64_t index) {
  const AuditOptions options{config.r_max, config.tolerance()};
  return {audit(trial_pmf(config, index), options), audit(trial_density(config, index), options)};
}

ModeMeanPair tightness_pair(std::uint64_t master_seed, std::uint64_t index) {
  Rng rng(stream_seed(master_seed, index, Stream::Tightness));
  const double mode = rng.uniform(-10.0, 10.0);
  const double gap = rng.uniform(0.1, 10.0);
  return {mode, rng.coin(0.5) ? mode + gap : mode - gap};
}

FactorizationCase factorization_case(std::uint64_t master_seed, std::uint64_t index) {
  Rng rng(stream_seed(master_seed, index, Stream::Factorization));
  double alpha = rng.uniform(0.0, 10.0);
  double beta = rng.uniform(0.0, 10.0);
  while (alpha == beta) beta = rng.uniform(0.0, 10.0);
  if (alpha > beta) std::swap(alpha, beta);
  return {alpha, beta, static_cast<int>(rng.integer(2, 8))};
}

SuiteSummary run_suite_serial(const TrialConfig& config) {
  SuiteSummary summary = start_summary(config);
  const auto n = static_cast<std::uint64_t>(config.n_trials);
  for (std::uint64_t i = 0; i < n; ++i) merge_trial(summary, run_trial(config, i), i);
  for (std::uint64_t i = 0; i < kTightnessPairs; ++i) {
    merge_tightness(summary, run_tightness(config.master_seed, i));
  }
  for (std::uint64_t i = 0; i < kFactorizationCases; ++i) {
    merge_factorization(summary, run_factorization(config.master_seed, i));
  }
  run_consistency(summary);
  return summary;
}

SuiteSummary run_suite(const TrialConfig& config, int threads) {
  SuiteSummary summary = start_summary(config);
  const int workers = resolve_threads(threads);
  const auto n = static_cast<std::uint64_t>(config.n_trials);

  std::vector<std::optional<TrialOutcome>> block;
  for (std::uint64_t start = 0; start < n; start += kBlock) {
    const auto count = static_cast<std::int64_t>(std::min(kBlock, n - start));
    block.assign(static_cast<std::size_t>(count), std::nullopt);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (std::int64_t k = 0; k < count; ++k) {
      block[static_cast<std::size_t>(k)] = run_trial(config, start + static_cast<std::uint64_t>(k));
    }
    for (std::int64_t k = 0; k < count; ++k) {
      merge_trial(summary, *block[static_cast<std::size_t>(k)], start + static_cast<std::uint64_t>(k));
    }
  }

  std::vector<TightnessOutcome> tight(kTightnessPairs);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (int i = 0; i < kTightnessPairs; ++i) tight[i] = run_tightness(config.master_seed, i);
  for (const auto& t : tight) merge_tightness(summary, t);

  std::vector<FactorizationOutcome> fact(kFactorizationCases);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (int i = 0; i < kFactorizationCases; ++i) fact[i] = run_factorization(config.master_seed, i);
  for (const auto& f : fact) merge_factorization(summary, f);

  run_consistency(summary);
  return summary;
}

DiscretePmf example_skewed_three_point() {
  return DiscretePmf({-1.0, 0.0, 1.0}, {1.0 / 5.0, 1.0 / 2.0, 3.0 / 10.0});
}

DiscretePmf example_symmetric_six_point() {
  return DiscretePmf({-15.0, -10.0, -5.0, 5.0, 10.0, 15.0},
                     {1.0 / 12.0, 2.0 / 12.0, 3.0 / 12.0, 3.0 / 12.0, 2.0 / 12.0, 1.0 / 12.0});
}

BuiltinComparison compare_bounds(const DiscretePmf& pmf, const std::string& name, const Tolerance& tol) {
  if (!pmf.is_lattice()) throw InputError("comparison needs a pmf on consecutive integers");
  const auto shape = classify_shape(pmf.probs());
  if (!shape.is_unimodal()) throw InputError("comparison needs a unimodal pmf");
  const double mean = raw_moment(pmf, 1);

  BuiltinComparison out;
  out.name = name;
  out.window = discrete_window_bound(pmf, mean, 1).value;
  out.lattice = 0.0;
  for (std::size_t i = shape.peak_lo; i <= shape.peak_hi; ++i) {
    out.lattice = std::max(out.lattice, lattice_variance_lb(mean, pmf.points()[i]).value);
  }
  if (out.lattice > 0.0) out.ratio = out.window / out.lattice;
  if (std::abs(out.window - out.lattice) <= tol.allowance(out.window, out.lattice)) {
    out.verdict = "tie";
  } else {
    out.verdict = out.window > out.lattice ? "window" : "lattice";
  }
  return out;
}

ComparisonSummary run_compare(const TrialConfig& config, int threads) {
  config.validate();
  const auto tol = config.tolerance();
  ComparisonSummary summary;
  summary.master_seed = config.master_seed;
  summary.trials = static_cast<std::size_t>(config.n_trials);
  {
    std::ostringstream family;
    family << "unimodal pmfs on n consecutive integers, n uniform in [" << std::min(2, config.max_points)
           << ", " << config.max_points
           << "], offset uniform in [-5, 5]; peak index uniform; weights step away from the peak by "
              "exp(-c u) with c ~ U(0, 4) per side, u ~ U(0, 1), ties with probability 0.2";
    summary.family = family.str();
  }

  std::vector<BuiltinComparison> rows(summary.trials);
  const int workers = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
  for (std::int64_t i = 0; i < config.n_trials; ++i) {
    Rng rng(stream_seed(config.master_seed, static_cast<std::uint64_t>(i), Stream::Compare));
    const int lo = std::min(2, config.max_points);
    const auto n = static_cast<int>(rng.integer(lo, config.max_points));
    const auto pmf = gen_discrete_unimodal(rng.integer(0, INT64_MAX), n, true);
    rows[static_cast<std::size_t>(i)] = compare_bounds(pmf, "trial", tol);
  }

  CompensatedSum ratio_sum;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.verdict == "tie") {
      ++summary.ties;
    } else if (row.verdict == "window") {
      ++summary.window_wins;
    } else {
      ++summary.lattice_wins;
    }
    if (!row.ratio) continue;
    ++summary.ratio_cases;
    ratio_sum += *row.ratio;
    const RatioExtreme ext{i, *row.ratio, row.window, row.lattice};
    if (!summary.min_ratio || ext.ratio < summary.min_ratio->ratio) summary.min_ratio = ext;
    if (!summary.max_ratio || ext.ratio > summary.max_ratio->ratio) summary.max_ratio = ext;
  }
  if (summary.ratio_cases > 0) summary.mean_ratio = ratio_sum.value() / static_cast<double>(summary.ratio_cases);

  summary.builtins.push_back(compare_bounds(example_skewed_three_point(), "skewed-three-point", tol));
  summary.builtins.push_back(compare_bounds(DiscretePmf({0.0}, {1.0}), "point-mass", tol));
  return summary;
}

}  // namespace unibound
