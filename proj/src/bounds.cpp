#include "unibound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unibound/errors.hpp"
#include "unibound/numeric.hpp"
#include "unibound/polynomial.hpp"

namespace unibound {
namespace {

double slack(double x, double y) { return kRangeSlack * std::max({1.0, std::abs(x), std::abs(y)}); }

void require_order(int r, int min_order = 1) {
  if (r < min_order) {
    std::ostringstream msg;
    msg << "moment order must be >= " << min_order << " (got " << r << ")";
    throw InputError(msg.str());
  }
}

// Mean of x^r for x uniform between lo and 2 mean - lo.
double uniform_reflection_moment(double anchor, double mean, int r) {
  if (std::abs(mean - anchor) < 1e-12 * std::max(1.0, std::abs(anchor))) return ipow(anchor, r);
  return homogeneous_sum(2.0 * mean - anchor, anchor, r) / static_cast<double>(r + 1);
}

// alpha solving the integral constraint on [anchor, 2 mean - anchor], mirrored
// for mean < anchor when r is even.
std::optional<QuadraticWitness> raw_witness(double anchor, double mean, int r) {
  if (r < 2 || mean == anchor) return std::nullopt;
  if (mean > anchor) {
    const double beta = 2.0 * mean - anchor;
    if (r % 2 == 1 && anchor < 0.0) return std::nullopt;
    auto alpha = try_solve_witness_constraint(anchor, beta, r);
    if (!alpha) return std::nullopt;
    return QuadraticWitness{*alpha, beta};
  }
  if (r % 2 == 1) return std::nullopt;
  const double beta = 2.0 * (-mean) + anchor;
  auto alpha = try_solve_witness_constraint(-anchor, beta, r);
  if (!alpha) return std::nullopt;
  return QuadraticWitness{-beta, -*alpha};
}

}  // namespace

std::string_view to_string(BoundSource source) noexcept {
  switch (source) {
    case BoundSource::VarianceNonIncreasing: return "variance.nonincreasing";
    case BoundSource::VarianceNonDecreasing: return "variance.nondecreasing";
    case BoundSource::VarianceUnimodal: return "variance.unimodal";
    case BoundSource::RawTangent: return "raw.tangent";
    case BoundSource::RawNonIncreasing: return "raw.nonincreasing";
    case BoundSource::RawUnimodal: return "raw.unimodal";
    case BoundSource::CentralUnimodal: return "central.unimodal";
    case BoundSource::CentralDiscreteWindow: return "central.discrete-window";
    case BoundSource::VarianceLattice: return "variance.lattice";
    case BoundSource::VarianceJacobson: return "variance.jacobson";
  }
  return "unknown";
}

std::string_view describe(BoundSource source) noexcept {
  switch (source) {
    case BoundSource::VarianceNonIncreasing: return "variance, non-increasing density";
    case BoundSource::VarianceNonDecreasing: return "variance, non-decreasing density";
    case BoundSource::VarianceUnimodal: return "variance, unimodal (Johnson-Rogers)";
    case BoundSource::RawTangent: return "raw moment, tangent line (any distribution)";
    case BoundSource::RawNonIncreasing: return "raw moment, non-increasing density";
    case BoundSource::RawUnimodal: return "raw moment, unimodal density";
    case BoundSource::CentralUnimodal: return "even central moment, unimodal density";
    case BoundSource::CentralDiscreteWindow: return "even central moment, discrete support window";
    case BoundSource::VarianceLattice: return "variance, unimodal integer lattice (Abouammoh-Mashhour)";
    case BoundSource::VarianceJacobson: return "variance upper, unimodal density (Jacobson)";
  }
  return "unknown";
}

std::string_view to_string(BoundKind kind) noexcept {
  return kind == BoundKind::Lower ? "lower" : "upper";
}

double two_point_raw_lb(double alpha, double beta, double mean, int r) {
  require_order(r);
  if (alpha == beta) throw InputError("two-point bound needs alpha != beta; use tangent_raw_lb");
  const double slope = homogeneous_sum(alpha, beta, r - 1);
  const double intercept = r >= 2 ? alpha * beta * homogeneous_sum(alpha, beta, r - 2) : 0.0;
  return slope * mean - intercept;
}

double tangent_raw_lb(double alpha, double mean, int r) {
  require_order(r);
  return r * ipow(alpha, r - 1) * mean - (r - 1) * ipow(alpha, r);
}

QuadraticWitness witness_monotone(double a, double mean) {
  const double beta = 2.0 * mean - a;
  return {(2.0 * a + beta) / 3.0, beta};
}

QuadraticWitness witness_unimodal(double mode, double mean) {
  if (mean >= mode) return witness_monotone(mode, mean);
  const auto mirrored = witness_monotone(-mode, -mean);
  return {-mirrored.beta, -mirrored.alpha};
}

BoundResult variance_lb_monotone(double a, double b, double mean, Direction direction) {
  if (!(a <= b)) throw InputError("support needs a <= b");
  const double mid = 0.5 * (a + b);
  const double s = slack(a, b);
  BoundResult out;
  out.order = 2;
  out.moment = MomentKind::Central;
  if (direction == Direction::NonIncreasing) {
    if (mean < a - s || mean > mid + s) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "non-increasing density needs mean in [a, (a+b)/2] = [" << a << ", " << mid
          << "], got " << mean;
      throw PreconditionError(msg.str());
    }
    out.source = BoundSource::VarianceNonIncreasing;
    out.value = (mean - a) * (mean - a) / 3.0;
    out.witness = witness_monotone(a, mean);
  } else {
    if (mean < mid - s || mean > b + s) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "non-decreasing density needs mean in [(a+b)/2, b] = [" << mid << ", " << b
          << "], got " << mean;
      throw PreconditionError(msg.str());
    }
    out.source = BoundSource::VarianceNonDecreasing;
    out.value = (mean - b) * (mean - b) / 3.0;
    out.witness = witness_unimodal(b, mean);
  }
  return out;
}

BoundResult variance_lb_unimodal(double mean, double mode) {
  BoundResult out;
  out.source = BoundSource::VarianceUnimodal;
  out.order = 2;
  out.moment = MomentKind::Central;
  out.value = (mean - mode) * (mean - mode) / 3.0;
  out.witness = witness_unimodal(mode, mean);
  return out;
}

BoundResult variance_ub_jacobson(double a, double b) {
  if (!(a < b)) throw InputError("upper variance bound needs a < b");
  BoundResult out;
  out.kind = BoundKind::Upper;
  out.source = BoundSource::VarianceJacobson;
  out.order = 2;
  out.moment = MomentKind::Central;
  out.value = (b - a) * (b - a) / 9.0;
  return out;
}

BoundResult raw_moment_lb_monotone(double a, double mean, int r) {
  require_order(r);
  if (r % 2 == 1 && a < 0.0) {
    throw UnsupportedRegimeError("odd-order raw bound needs a >= 0");
  }
  if (mean < a - slack(a, mean)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-increasing density needs mean >= a = " << a << ", got " << mean;
    throw PreconditionError(msg.str());
  }
  mean = std::max(mean, a);
  BoundResult out;
  out.source = BoundSource::RawNonIncreasing;
  out.order = r;
  out.moment = MomentKind::Raw;
  out.value = uniform_reflection_moment(a, mean, r);
  out.witness = raw_witness(a, mean, r);
  return out;
}

BoundResult raw_moment_lb_unimodal(double mode, double mean, int r) {
  require_order(r);
  const double reflected = 2.0 * mean - mode;
  if (r % 2 == 1 && (mode < 0.0 || reflected < -slack(mode, mean))) {
    throw UnsupportedRegimeError("odd-order raw bound needs mode >= 0 and 2 mean - mode >= 0");
  }
  BoundResult out;
  out.source = BoundSource::RawUnimodal;
  out.order = r;
  out.moment = MomentKind::Raw;
  out.value = uniform_reflection_moment(mode, mean, r);
  out.witness = raw_witness(mode, mean, r);
  return out;
}

BoundResult central_even_lb_unimodal(double mean, double mode, int r) {
  require_order(r);
  BoundResult out;
  out.source = BoundSource::CentralUnimodal;
  out.order = 2 * r;
  out.moment = MomentKind::Central;
  out.value = ipow(mean - mode, 2 * r) / (2 * r + 1);
  return out;
}

BoundResult discrete_central_lb(double x_lo, double x_hi, double mean, int r) {
  require_order(r);
  if (!(x_lo < x_hi)) throw InputError("support window needs x_lo < x_hi");
  if (mean < x_lo || mean > x_hi) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "mean " << mean << " lies outside the support window [" << x_lo << ", " << x_hi << "]";
    throw PreconditionError(msg.str());
  }
  const double below = mean - x_lo;
  const double above = x_hi - mean;
  BoundResult out;
  out.source = BoundSource::CentralDiscreteWindow;
  out.order = 2 * r;
  out.moment = MomentKind::Central;
  out.value = (below * ipow(above, 2 * r) + above * ipow(below, 2 * r)) / (x_hi - x_lo);
  out.witness = QuadraticWitness{x_lo, x_hi};
  return out;
}

BoundResult lattice_variance_lb(double mean, double mode) {
  const double gap = std::abs(mean - mode);
  BoundResult out;
  out.source = BoundSource::VarianceLattice;
  out.order = 2;
  out.moment = MomentKind::Central;
  out.value = (gap * gap + gap) / 3.0;
  return out;
}

}  // namespace unibound
