#include "unibound/generators.hpp"

#include <algorithm>
#include <cmath>

#include "unibound/compensated_sum.hpp"
#include "unibound/errors.hpp"

namespace unibound {
namespace {

constexpr double kTieProbability = 0.2;
constexpr double kMaxLogStep = 4.0;
constexpr double kMinGap = 1e-6;

// Fills weights walking away from the peak; each step is a factor in (e^-c, 1].
void fill_run(Rng& rng, std::vector<double>& w, std::size_t peak, bool leftwards) {
  const double scale = rng.uniform(0.0, kMaxLogStep);
  if (leftwards) {
    for (std::size_t i = peak; i-- > 0;) {
      w[i] = rng.coin(kTieProbability) ? w[i + 1] : w[i + 1] * std::exp(-scale * rng.uniform());
    }
  } else {
    for (std::size_t i = peak + 1; i < w.size(); ++i) {
      w[i] = rng.coin(kTieProbability) ? w[i - 1] : w[i - 1] * std::exp(-scale * rng.uniform());
    }
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return mix64(mix64(master_seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto pick = static_cast<std::uint64_t>(uniform() * static_cast<double>(span));
  return lo + static_cast<std::int64_t>(std::min(pick, span - 1));
}

std::vector<double> unimodal_weights(Rng& rng, std::size_t n) {
  std::vector<double> w(n, 1.0);
  const auto peak = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1));
  fill_run(rng, w, peak, true);
  fill_run(rng, w, peak, false);
  return w;
}

DiscretePmf gen_discrete_unimodal(std::uint64_t seed, int n, bool lattice) {
  if (n < 1) throw InputError("support size must be >= 1");
  Rng rng(seed);
  std::vector<double> points(static_cast<std::size_t>(n));
  if (lattice) {
    const auto offset = static_cast<double>(rng.integer(-5, 5));
    for (int i = 0; i < n; ++i) points[i] = offset + i;
  } else {
    bool spaced = false;
    while (!spaced) {
      for (auto& x : points) x = rng.uniform(-10.0, 10.0);
      std::sort(points.begin(), points.end());
      spaced = true;
      for (std::size_t i = 1; i < points.size(); ++i) spaced = spaced && points[i] - points[i - 1] >= kMinGap;
    }
  }

  auto w = unimodal_weights(rng, points.size());
  CompensatedSum total;
  for (double x : w) total += x;
  const double norm = total.value();
  for (auto& x : w) x /= norm;
  return DiscretePmf(std::move(points), std::move(w));
}

StepDensity gen_density_unimodal(std::uint64_t seed, int pieces, double a, double b) {
  if (pieces < 1) throw InputError("piece count must be >= 1");
  if (!(a < b)) throw InputError("density support needs a < b");
  Rng rng(seed);
  const auto m = static_cast<std::size_t>(pieces);
  std::vector<double> t(m + 1);
  for (std::size_t k = 0; k < m; ++k) t[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(m);
  t[m] = b;

  auto h = unimodal_weights(rng, m);
  CompensatedSum total;
  for (std::size_t k = 0; k < m; ++k) total += h[k] * (t[k + 1] - t[k]);
  const double norm = total.value();
  for (auto& x : h) x /= norm;
  return StepDensity(std::move(t), std::move(h));
}

StepDensity tightness_witness(double mode, double mean) {
  if (mean == mode) throw DegenerateWitnessError("tightness witness needs mean != mode");
  const double other = 2.0 * mean - mode;
  return StepDensity::uniform(std::min(mode, other), std::max(mode, other));
}

}  // namespace unibound
