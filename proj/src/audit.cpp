#include "unibound/audit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <span>

#include "unibound/errors.hpp"

namespace unibound {
namespace {

constexpr std::string_view kDensityOnly = "applies to unimodal densities only";
constexpr std::string_view kNotUnimodal = "distribution is not unimodal";
constexpr std::string_view kOddNegative = "odd order needs support in [0, inf)";

class CheckList {
 public:
  explicit CheckList(const Tolerance& tol) : tol_(tol) {}

  void add(const BoundResult& b, double actual, std::optional<double> mode = std::nullopt) {
    Check c;
    c.name = std::string(to_string(b.source));
    c.source = b.source;
    c.kind = b.kind;
    c.moment = b.moment;
    c.order = b.order;
    c.mode = mode;
    c.bound = b.value;
    c.actual = actual;
    if (b.kind == BoundKind::Lower) {
      c.margin = actual - b.value;
      c.status = tol_.holds(actual, b.value) ? CheckStatus::Pass : CheckStatus::Fail;
    } else {
      c.margin = b.value - actual;
      c.status = tol_.holds(b.value, actual) ? CheckStatus::Pass : CheckStatus::Fail;
    }
    checks_.push_back(std::move(c));
  }

  void not_applicable(BoundSource source, int order, MomentKind moment, std::string_view why) {
    Check c;
    c.name = std::string(to_string(source));
    c.source = source;
    c.kind = source == BoundSource::VarianceJacobson ? BoundKind::Upper : BoundKind::Lower;
    c.moment = moment;
    c.order = order;
    c.status = CheckStatus::NotApplicable;
    c.note = std::string(why);
    checks_.push_back(std::move(c));
  }

  void range(std::string name, BoundKind kind, double limit, double mean) {
    Check c;
    c.name = std::move(name);
    c.kind = kind;
    c.moment = MomentKind::Raw;
    c.order = 1;
    c.bound = limit;
    c.actual = mean;
    c.margin = kind == BoundKind::Lower ? mean - limit : limit - mean;
    const bool ok = kind == BoundKind::Lower ? tol_.holds(mean, limit) : tol_.holds(limit, mean);
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    checks_.push_back(std::move(c));
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  Tolerance tol_;
  std::vector<Check> checks_;
};

template <typename Eval>
std::pair<BoundResult, double> best_over_modes(std::span<const double> modes, Eval&& eval) {
  BoundResult best = eval(modes.front());
  double best_mode = modes.front();
  for (double m : modes.subspan(1)) {
    BoundResult candidate = eval(m);
    if (candidate.value > best.value) {
      best = candidate;
      best_mode = m;
    }
  }
  return {best, best_mode};
}

void tangent_checks(CheckList& list, const Distribution& dist, double mean, int r_max) {
  const bool nonnegative = support_lo(dist) >= 0.0;
  for (int r = 2; r <= 2 * r_max; ++r) {
    if (r % 2 == 1 && !nonnegative) {
      list.not_applicable(BoundSource::RawTangent, r, MomentKind::Raw, kOddNegative);
      continue;
    }
    BoundResult b;
    b.source = BoundSource::RawTangent;
    b.order = r;
    b.moment = MomentKind::Raw;
    b.value = tangent_raw_lb(mean, mean, r);
    list.add(b, raw_moment(dist, r));
  }
}

void density_checks(CheckList& list, const StepDensity& density, const ShapeClass& shape,
                    double mean, double variance, int r_max) {
  const Distribution dist = density;
  const double a = density.lo();
  const double b = density.hi();
  const bool nonnegative = a >= 0.0;

  if (!shape.is_unimodal()) {
    for (auto s : {BoundSource::VarianceNonIncreasing, BoundSource::VarianceNonDecreasing,
                   BoundSource::VarianceUnimodal, BoundSource::RawNonIncreasing,
                   BoundSource::RawUnimodal, BoundSource::CentralUnimodal,
                   BoundSource::VarianceJacobson}) {
      list.not_applicable(s, 2, MomentKind::Central, kNotUnimodal);
    }
    return;
  }

  if (shape.non_increasing()) {
    list.add(variance_lb_monotone(a, b, mean, Direction::NonIncreasing), variance, a);
    for (int r = 2; r <= 2 * r_max; ++r) {
      if (r % 2 == 1 && !nonnegative) {
        list.not_applicable(BoundSource::RawNonIncreasing, r, MomentKind::Raw, kOddNegative);
      } else {
        list.add(raw_moment_lb_monotone(a, mean, r), raw_moment(dist, r), a);
      }
    }
  } else {
    list.not_applicable(BoundSource::VarianceNonIncreasing, 2, MomentKind::Central,
                        "density is not non-increasing");
    list.not_applicable(BoundSource::RawNonIncreasing, 2, MomentKind::Raw,
                        "density is not non-increasing");
  }
  if (shape.non_decreasing()) {
    list.add(variance_lb_monotone(a, b, mean, Direction::NonDecreasing), variance, b);
  } else {
    list.not_applicable(BoundSource::VarianceNonDecreasing, 2, MomentKind::Central,
                        "density is not non-decreasing");
  }

  const ModeInterval plateau = mode_interval(dist, shape);
  const double ends[] = {plateau.lo, plateau.hi};
  const std::span<const double> modes(ends, plateau.lo == plateau.hi ? 1 : 2);

  auto [var_b, var_m] = best_over_modes(modes, [&](double m) { return variance_lb_unimodal(mean, m); });
  list.add(var_b, variance, var_m);

  for (int r = 2; r <= 2 * r_max; ++r) {
    if (r % 2 == 1 && !nonnegative) {
      list.not_applicable(BoundSource::RawUnimodal, r, MomentKind::Raw, kOddNegative);
      continue;
    }
    auto [raw_b, raw_m] =
        best_over_modes(modes, [&](double m) { return raw_moment_lb_unimodal(m, mean, r); });
    list.add(raw_b, raw_moment(dist, r), raw_m);
  }
  for (int k = 1; k <= r_max; ++k) {
    auto [cen_b, cen_m] =
        best_over_modes(modes, [&](double m) { return central_even_lb_unimodal(mean, m, k); });
    list.add(cen_b, central_moment(dist, 2 * k), cen_m);
  }

  list.range("mean-range.lower", BoundKind::Lower, 0.5 * (a + plateau.lo), mean);
  list.range("mean-range.upper", BoundKind::Upper, 0.5 * (b + plateau.hi), mean);

  list.add(variance_ub_jacobson(a, b), variance);
}

}  // namespace

BoundResult discrete_window_bound(const DiscretePmf& pmf, double mean, int r) {
  const auto& x = pmf.points();
  const auto upper = std::lower_bound(x.begin(), x.end(), mean);
  // Mean on (or rounded past) a support point: one factor of each term vanishes.
  if (upper == x.begin() || upper == x.end() || *upper == mean) {
    BoundResult zero;
    zero.source = BoundSource::CentralDiscreteWindow;
    zero.order = 2 * r;
    zero.moment = MomentKind::Central;
    zero.value = 0.0;
    return zero;
  }
  return discrete_central_lb(*(upper - 1), *upper, mean, r);
}

namespace {

void pmf_checks(CheckList& list, const DiscretePmf& pmf, const ShapeClass& shape, double mean,
                double variance, int r_max) {
  const Distribution dist = pmf;
  for (int k = 1; k <= r_max; ++k) list.add(discrete_window_bound(pmf, mean, k), central_moment(dist, 2 * k));

  if (!pmf.is_lattice()) {
    list.not_applicable(BoundSource::VarianceLattice, 2, MomentKind::Central,
                        "support is not a run of consecutive integers");
  } else if (!shape.is_unimodal()) {
    list.not_applicable(BoundSource::VarianceLattice, 2, MomentKind::Central, kNotUnimodal);
  } else {
    const auto& x = pmf.points();
    const std::span<const double> modes(x.data() + shape.peak_lo, shape.peak_hi - shape.peak_lo + 1);
    auto [lat_b, lat_m] = best_over_modes(modes, [&](double m) { return lattice_variance_lb(mean, m); });
    list.add(lat_b, variance, lat_m);
  }

  for (auto s : {BoundSource::VarianceNonIncreasing, BoundSource::VarianceNonDecreasing,
                 BoundSource::VarianceUnimodal, BoundSource::RawNonIncreasing,
                 BoundSource::RawUnimodal, BoundSource::CentralUnimodal,
                 BoundSource::VarianceJacobson}) {
    list.not_applicable(s, 2, MomentKind::Central, kDensityOnly);
  }
}

}  // namespace

double Tolerance::allowance(double lhs, double rhs) const noexcept {
  return std::max(abs, rel * std::max(std::abs(lhs), std::abs(rhs)));
}

void TrialConfig::validate() const {
  if (n_trials < 1) throw InputError("trials must be >= 1");
  if (max_points < 1) throw InputError("max-points must be >= 1");
  if (max_pieces < 1) throw InputError("max-pieces must be >= 1");
  if (r_max < 1) throw InputError("r-max must be >= 1");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw InputError("tolerances must be > 0");
}

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "unknown";
}

double Check::relative_margin() const noexcept {
  const double scale = std::max(std::abs(bound), std::abs(actual));
  return scale == 0.0 ? 0.0 : margin / scale;
}

std::size_t AuditReport::count(CheckStatus status) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [status](const Check& c) { return c.status == status; }));
}

const Check* AuditReport::find(std::string_view name, int order) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name && c.status != CheckStatus::NotApplicable && (order == 0 || c.order == order)) {
      return &c;
    }
  }
  return nullptr;
}

std::string distribution_id(const Distribution& dist) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (word >> (8 * i)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  auto feed_all = [&](const std::vector<double>& values) {
    feed(values.size());
    for (double v : values) feed(std::bit_cast<std::uint64_t>(v));
  };
  if (const auto* pmf = std::get_if<DiscretePmf>(&dist)) {
    feed(1);
    feed_all(pmf->points());
    feed_all(pmf->probs());
  } else {
    const auto& density = std::get<StepDensity>(dist);
    feed(2);
    feed_all(density.breakpoints());
    feed_all(density.heights());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

AuditReport audit(const Distribution& dist, const AuditOptions& options) {
  if (options.r_max < 1) throw InputError("r-max must be >= 1");
  AuditReport report{distribution_id(dist), dist, classify_shape(dist), raw_moment(dist, 1),
                     central_moment(dist, 2), {}};
  CheckList list(options.tol);
  tangent_checks(list, dist, report.mean, options.r_max);
  if (const auto* pmf = std::get_if<DiscretePmf>(&dist)) {
    pmf_checks(list, *pmf, report.shape, report.mean, report.variance, options.r_max);
  } else {
    density_checks(list, std::get<StepDensity>(dist), report.shape, report.mean, report.variance,
                   options.r_max);
  }
  report.checks = list.take();
  return report;
}

}  // namespace unibound
