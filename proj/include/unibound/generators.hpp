#pragma once

#include <cstdint>
#include <random>

#include "unibound/distribution.hpp"

namespace unibound {

/// splitmix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for trial `index` of a run; independent of execution order.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// mt19937_64 with explicit bit-level conversions, so draws do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin(double p_true) { return uniform() < p_true; }

 private:
  std::mt19937_64 engine_;
};

/// Random unimodal weights of length n: ascending run to a uniformly drawn
/// peak, independent descending run. Steps are exp(-c u) ratios with a
/// per-run scale c, and ties are injected with probability 0.2 per step so
/// that flat peaks and plateaus occur.
[[nodiscard]] std::vector<double> unimodal_weights(Rng& rng, std::size_t n);

/// n >= 1 support points: consecutive integers from a random offset in
/// [-5, 5] when `lattice`, otherwise sorted draws from [-10, 10] with gaps
/// of at least 1e-6.
[[nodiscard]] DiscretePmf gen_discrete_unimodal(std::uint64_t seed, int n, bool lattice);

/// Equal-width pieces on [a, b] with unimodal heights normalized to mass 1.
[[nodiscard]] StepDensity gen_density_unimodal(std::uint64_t seed, int pieces, double a, double b);

/// Uniform density between `mode` and 2 mean - mode: attains the unimodal
/// variance, raw-moment and even central-moment bounds with equality.
/// Throws DegenerateWitnessError when mean == mode.
[[nodiscard]] StepDensity tightness_witness(double mode, double mean);

}  // namespace unibound
