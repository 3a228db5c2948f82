#include "unibound/distribution.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "unibound/compensated_sum.hpp"
#include "unibound/errors.hpp"
#include "unibound/numeric.hpp"

namespace unibound {
namespace {

void require_finite(const std::vector<double>& values, std::string_view what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      std::ostringstream msg;
      msg << what << "[" << i << "] is not finite";
      throw InputError(msg.str());
    }
  }
}

void require_strictly_increasing(const std::vector<double>& values, std::string_view what) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      std::ostringstream msg;
      msg << what << " must be strictly increasing (index " << i << ")";
      throw InputError(msg.str());
    }
  }
}

void require_nonnegative(const std::vector<double>& values, std::string_view what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) {
      std::ostringstream msg;
      msg << what << "[" << i << "] is negative";
      throw InputError(msg.str());
    }
  }
}

void require_unit_mass(double mass) {
  if (!(std::abs(mass - 1.0) <= kMassTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "total mass " << mass << " differs from 1 by more than " << kMassTolerance;
    throw InputError(msg.str());
  }
}

void require_order(int r) {
  if (r < 0) throw InputError("moment order must be nonnegative");
}

// Mass times the mean of x^r over [lo, hi] with uniform weight:
// (hi^{r+1} - lo^{r+1}) / ((r+1)(hi - lo)) written as a homogeneous sum.
double uniform_piece_power_mean(double lo, double hi, int r) {
  return homogeneous_sum(hi, lo, r) / static_cast<double>(r + 1);
}

}  // namespace

DiscretePmf::DiscretePmf(std::vector<double> points, std::vector<double> probs)
    : points_(std::move(points)), probs_(std::move(probs)) {
  if (points_.empty()) throw InputError("discrete distribution needs at least one support point");
  if (points_.size() != probs_.size()) throw InputError("points and probs differ in length");
  require_finite(points_, "points");
  require_finite(probs_, "probs");
  require_strictly_increasing(points_, "points");
  require_nonnegative(probs_, "probs");
  CompensatedSum mass;
  for (double p : probs_) mass += p;
  require_unit_mass(mass.value());
}

bool DiscretePmf::is_lattice() const noexcept {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] != std::floor(points_[i])) return false;
    if (i > 0 && points_[i] - points_[i - 1] != 1.0) return false;
  }
  return true;
}

StepDensity::StepDensity(std::vector<double> breakpoints, std::vector<double> heights)
    : breakpoints_(std::move(breakpoints)), heights_(std::move(heights)) {
  if (heights_.empty()) throw InputError("step density needs at least one piece");
  if (breakpoints_.size() != heights_.size() + 1) {
    throw InputError("step density needs exactly one more breakpoint than heights");
  }
  require_finite(breakpoints_, "breakpoints");
  require_finite(heights_, "heights");
  require_strictly_increasing(breakpoints_, "breakpoints");
  require_nonnegative(heights_, "heights");
  CompensatedSum mass;
  for (std::size_t k = 0; k < heights_.size(); ++k) mass += piece_mass(k);
  require_unit_mass(mass.value());
}

StepDensity StepDensity::uniform(double a, double b) {
  if (!(a < b)) throw InputError("uniform density needs a < b");
  return StepDensity({a, b}, {1.0 / (b - a)});
}

double raw_moment(const DiscretePmf& pmf, int r) {
  require_order(r);
  CompensatedSum acc;
  for (std::size_t i = 0; i < pmf.size(); ++i) acc += pmf.probs()[i] * ipow(pmf.points()[i], r);
  return acc.value();
}

double raw_moment(const StepDensity& density, int r) {
  require_order(r);
  const auto& t = density.breakpoints();
  CompensatedSum acc;
  for (std::size_t k = 0; k < density.pieces(); ++k) {
    acc += density.piece_mass(k) * uniform_piece_power_mean(t[k], t[k + 1], r);
  }
  return acc.value();
}

double central_moment(const DiscretePmf& pmf, int r) {
  require_order(r);
  const double mu = raw_moment(pmf, 1);
  CompensatedSum acc;
  for (std::size_t i = 0; i < pmf.size(); ++i) acc += pmf.probs()[i] * ipow(pmf.points()[i] - mu, r);
  return acc.value();
}

double central_moment(const StepDensity& density, int r) {
  require_order(r);
  const double mu = raw_moment(density, 1);
  const auto& t = density.breakpoints();
  CompensatedSum acc;
  for (std::size_t k = 0; k < density.pieces(); ++k) {
    acc += density.piece_mass(k) * uniform_piece_power_mean(t[k] - mu, t[k + 1] - mu, r);
  }
  return acc.value();
}

double raw_moment(const Distribution& dist, int r) {
  return std::visit([r](const auto& d) { return raw_moment(d, r); }, dist);
}

double central_moment(const Distribution& dist, int r) {
  return std::visit([r](const auto& d) { return central_moment(d, r); }, dist);
}

MomentValue moment(const Distribution& dist, int r, MomentKind kind) {
  const double value = kind == MomentKind::Raw ? raw_moment(dist, r) : central_moment(dist, r);
  return {r, kind, value};
}

double support_lo(const Distribution& dist) noexcept {
  return std::visit([](const auto& d) { return d.lo(); }, dist);
}

double support_hi(const Distribution& dist) noexcept {
  return std::visit([](const auto& d) { return d.hi(); }, dist);
}

std::string_view to_string(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::NonIncreasing: return "non-increasing";
    case ShapeKind::NonDecreasing: return "non-decreasing";
    case ShapeKind::Unimodal: return "unimodal";
    case ShapeKind::NotUnimodal: return "not-unimodal";
  }
  return "unknown";
}

ShapeClass classify_shape(std::span<const double> w) {
  const std::size_t n = w.size();
  if (n == 0) throw InputError("cannot classify an empty weight sequence");

  bool non_increasing = true;
  bool non_decreasing = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (w[i] > w[i - 1]) non_increasing = false;
    if (w[i] < w[i - 1]) non_decreasing = false;
  }

  ShapeClass shape;
  if (non_increasing) {
    std::size_t hi = 0;
    while (hi + 1 < n && w[hi + 1] == w[0]) ++hi;
    shape.kind = ShapeKind::NonIncreasing;
    shape.peak_lo = 0;
    shape.peak_hi = hi;
    shape.also_non_decreasing = non_decreasing;
    return shape;
  }
  if (non_decreasing) {
    std::size_t lo = n - 1;
    while (lo > 0 && w[lo - 1] == w[n - 1]) --lo;
    shape.kind = ShapeKind::NonDecreasing;
    shape.peak_lo = lo;
    shape.peak_hi = n - 1;
    return shape;
  }

  // Climb the non-strict ascent, then require a non-strict descent.
  std::size_t top = 0;
  while (top + 1 < n && w[top] <= w[top + 1]) ++top;
  for (std::size_t i = top; i + 1 < n; ++i) {
    if (w[i] < w[i + 1]) return shape;  // NotUnimodal
  }
  std::size_t lo = top;
  while (lo > 0 && w[lo - 1] == w[top]) --lo;
  std::size_t hi = top;
  while (hi + 1 < n && w[hi + 1] == w[top]) ++hi;
  shape.kind = ShapeKind::Unimodal;
  shape.peak_lo = lo;
  shape.peak_hi = hi;
  return shape;
}

ShapeClass classify_shape(const Distribution& dist) {
  if (const auto* pmf = std::get_if<DiscretePmf>(&dist)) return classify_shape(pmf->probs());
  return classify_shape(std::get<StepDensity>(dist).heights());
}

ModeInterval mode_interval(const Distribution& dist, const ShapeClass& shape) {
  if (!shape.is_unimodal()) throw InputError("distribution has no mode: not unimodal");
  if (const auto* pmf = std::get_if<DiscretePmf>(&dist)) {
    return {pmf->points()[shape.peak_lo], pmf->points()[shape.peak_hi]};
  }
  const auto& t = std::get<StepDensity>(dist).breakpoints();
  return {t[shape.peak_lo], t[shape.peak_hi + 1]};
}

}  // namespace unibound
