#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "unibound/audit.hpp"
#include "unibound/bounds.hpp"
#include "unibound/generators.hpp"

using namespace unibound;

TEST_CASE("moments agree with the oracles on random inputs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pmf = gen_discrete_unimodal(seed, 1 + static_cast<int>(seed % 12), seed % 2 == 0);
    for (int r = 1; r <= 6; ++r) {
      const double want = oracle::pmf_expectation(pmf.points(), pmf.probs(), [r](double x) { return std::pow(x, r); });
      CHECK(raw_moment(pmf, r) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
    }
    const auto d = gen_density_unimodal(seed, 1 + static_cast<int>(seed % 16), -1.0, 2.0);
    for (int r = 1; r <= 4; ++r) {
      const double want = oracle::step_expectation(d.breakpoints(), d.heights(), [r](double x) { return std::pow(x, r); }, 2000);
      CHECK(raw_moment(d, r) == doctest::Approx(want).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("central moments follow the binomial expansion") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Distribution dist = gen_density_unimodal(seed, 8, 0.5, 2.0);
    const double mu = raw_moment(dist, 1);
    for (int r = 2; r <= 8; ++r) {
      double expanded = 0.0;
      double scale = 0.0;
      for (int k = 0; k <= r; ++k) {
        const double term = oracle::binomial(r, k) * raw_moment(dist, k) * std::pow(-mu, r - k);
        expanded += term;
        scale += std::abs(term);
      }
      CHECK(std::abs(central_moment(dist, r) - expanded) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("central moments are shift invariant") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pmf = gen_discrete_unimodal(seed, 6, false);
    std::vector<double> shifted = pmf.points();
    for (double& x : shifted) x += 3.25;
    const DiscretePmf moved(shifted, pmf.probs());
    for (int r = 2; r <= 6; ++r) {
      CHECK(central_moment(moved, r) ==
            doctest::Approx(central_moment(pmf, r)).epsilon(1e-9).scale(std::pow(20.0, r) * 1e-6));
    }
    // Shape-based bounds depend only on mean - mode.
    const double mean = raw_moment(pmf, 1);
    CHECK(variance_lb_unimodal(mean + 3.25, 3.25).value ==
          doctest::Approx(variance_lb_unimodal(mean, 0.0).value).epsilon(1e-12).scale(1e-12));
  }
}

TEST_CASE("audits of random unimodal distributions pass") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto pmf = gen_discrete_unimodal(seed, 1 + static_cast<int>(seed % 12), seed % 3 == 0);
    const auto dp = audit(pmf);
    CHECK(dp.passed());
    const double a = -5.0 + static_cast<double>(seed % 10);
    const auto density = gen_density_unimodal(seed, 1 + static_cast<int>(seed % 64), a, a + 0.5 + seed % 7);
    const auto dd = audit(density);
    CHECK(dd.passed());
  }
}

TEST_CASE("two-point bound lies under x^r for every admissible mean") {
  for (int r = 2; r <= 6; ++r) {
    const double alpha = 0.4;
    const double beta = 1.7;
    for (double x = 0.0; x <= 3.0; x += 0.05) {
      // The chord line is below x^r outside (alpha, beta) for x >= 0.
      if (x > alpha && x < beta) continue;
      CHECK(two_point_raw_lb(alpha, beta, x, r) <= std::pow(x, r) + 1e-12 * std::pow(std::max(1.0, x), r));
    }
  }
}
