#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "unibound/distribution.hpp"
#include "unibound/distribution_json.hpp"
#include "unibound/errors.hpp"
#include "unibound/suite.hpp"

using namespace unibound;

TEST_CASE("raw moments") {
  SUBCASE("uniform on [0,1], second moment") {
    CHECK(raw_moment(StepDensity::uniform(0.0, 1.0), 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("skewed three-point pmf has mean 1/10") {
    CHECK(std::abs(raw_moment(example_skewed_three_point(), 1) - 0.1) <= 1e-15 * 0.1);
  }
  SUBCASE("symmetric six-point pmf, second moment by direct summation") {
    const auto pmf = example_symmetric_six_point();
    const double expected = oracle::pmf_expectation(pmf.points(), pmf.probs(), [](double x) { return x * x; });
    CHECK(expected == doctest::Approx(250.0 / 3.0).epsilon(1e-15));
    CHECK(raw_moment(pmf, 2) == doctest::Approx(250.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("order zero is the mass") {
    CHECK(raw_moment(example_symmetric_six_point(), 0) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("negative order rejected") {
    CHECK_THROWS_AS((void)raw_moment(example_skewed_three_point(), -1), InputError);
  }
}

TEST_CASE("central moments") {
  CHECK(central_moment(example_skewed_three_point(), 2) ==
        doctest::Approx(0.2 * 1.21 + 0.5 * 0.01 + 0.3 * 0.81).epsilon(1e-14));
  for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-3.0, 2.5}, std::pair{10.0, 10.25}}) {
    CHECK(central_moment(StepDensity::uniform(a, b), 2) ==
          doctest::Approx((b - a) * (b - a) / 12.0).epsilon(1e-13));
  }
  CHECK(std::abs(central_moment(example_symmetric_six_point(), 1)) <= 1e-12);
  CHECK(std::abs(central_moment(StepDensity({0.0, 1.0, 3.0}, {0.8, 0.1}), 1)) <= 1e-12);
}

TEST_CASE("step density moments agree with quadrature") {
  const std::vector<double> t{-1.0, -0.25, 0.5, 2.0};
  const std::vector<double> h{0.2, 0.6, 4.0 / 15.0};  // mass 0.15 + 0.45 + 0.4
  const StepDensity d(t, h);
  const double mu = oracle::step_expectation(t, h, [](double x) { return x; });
  for (int r = 1; r <= 6; ++r) {
    const double raw = oracle::step_expectation(t, h, [r](double x) { return std::pow(x, r); });
    const double cen = oracle::step_expectation(t, h, [r, mu](double x) { return std::pow(x - mu, r); });
    CHECK(raw_moment(d, r) == doctest::Approx(raw).epsilon(1e-11));
    CHECK(central_moment(d, r) == doctest::Approx(cen).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("construction rejects invariant violations") {
  CHECK_THROWS_AS(DiscretePmf({0.0, 1.0}, {0.5, 0.4}), InputError);  // mass 0.9
  CHECK_THROWS_AS(DiscretePmf({1.0, 0.0}, {0.5, 0.5}), InputError);
  CHECK_THROWS_AS(DiscretePmf({0.0, 0.0}, {0.5, 0.5}), InputError);
  CHECK_THROWS_AS(DiscretePmf({0.0, 1.0}, {1.2, -0.2}), InputError);
  CHECK_THROWS_AS(DiscretePmf({0.0, 1.0}, {1.0}), InputError);
  CHECK_THROWS_AS(DiscretePmf({}, {}), InputError);
  CHECK_THROWS_AS(DiscretePmf({0.0, NAN}, {0.5, 0.5}), InputError);
  CHECK_THROWS_AS(StepDensity({0.0, 1.0}, {0.5}), InputError);
  CHECK_THROWS_AS(StepDensity({0.0, 1.0}, {1.0, 1.0}), InputError);
  CHECK_THROWS_AS(StepDensity({0.0, 2.0, 1.0}, {0.5, 0.5}), InputError);
  CHECK_THROWS_AS(StepDensity::uniform(1.0, 1.0), InputError);
  // Within the 1e-12 mass tolerance: accepted as is.
  CHECK_NOTHROW(DiscretePmf({0.0, 1.0}, {0.5, 0.5 + 5e-13}));
}

TEST_CASE("lattice detection") {
  CHECK(example_skewed_three_point().is_lattice());
  CHECK_FALSE(example_symmetric_six_point().is_lattice());
  CHECK_FALSE(DiscretePmf({0.0, 2.0}, {0.5, 0.5}).is_lattice());
  CHECK_FALSE(DiscretePmf({0.5, 1.5}, {0.5, 0.5}).is_lattice());
  CHECK(DiscretePmf({7.0}, {1.0}).is_lattice());
}

TEST_CASE("shape classification") {
  SUBCASE("single interior peak") {
    const auto s = classify_shape(example_skewed_three_point());
    CHECK(s.kind == ShapeKind::Unimodal);
    CHECK(s.peak_lo == 1);
    CHECK(s.peak_hi == 1);
    const auto m = mode_interval(example_skewed_three_point(), s);
    CHECK(m.lo == 0.0);
    CHECK(m.hi == 0.0);
  }
  SUBCASE("constant sequence reports non-increasing, flagged non-decreasing") {
    const std::vector<double> w{1.0, 1.0, 1.0};
    const auto s = classify_shape(w);
    CHECK(s.kind == ShapeKind::NonIncreasing);
    CHECK(s.also_non_decreasing);
    CHECK(s.non_decreasing());
    CHECK(s.peak_lo == 0);
    CHECK(s.peak_hi == 2);
  }
  SUBCASE("flat peak across the gap") {
    const auto pmf = example_symmetric_six_point();
    const auto s = classify_shape(pmf);
    CHECK(s.kind == ShapeKind::Unimodal);
    const auto m = mode_interval(pmf, s);
    CHECK(m.lo == -5.0);
    CHECK(m.hi == 5.0);
  }
  SUBCASE("monotone runs") {
    const std::vector<double> dec{3.0, 3.0, 2.0, 1.0};
    const auto s = classify_shape(dec);
    CHECK(s.kind == ShapeKind::NonIncreasing);
    CHECK_FALSE(s.also_non_decreasing);
    CHECK(s.peak_hi == 1);
    const std::vector<double> inc{1.0, 2.0, 2.0};
    const auto u = classify_shape(inc);
    CHECK(u.kind == ShapeKind::NonDecreasing);
    CHECK(u.peak_lo == 1);
    CHECK(u.peak_hi == 2);
  }
  SUBCASE("two peaks or an interior hole") {
    CHECK(classify_shape(std::vector<double>{1.0, 3.0, 1.0, 3.0}).kind == ShapeKind::NotUnimodal);
    CHECK(classify_shape(std::vector<double>{0.5, 0.0, 0.5}).kind == ShapeKind::NotUnimodal);
    CHECK(classify_shape(std::vector<double>{1.0, 2.0, 2.0, 1.0, 1.0, 2.0}).kind == ShapeKind::NotUnimodal);
  }
  SUBCASE("density plateau maps to breakpoints") {
    const Distribution d = StepDensity({0.0, 1.0, 2.0, 3.0, 4.0}, {0.1, 0.35, 0.35, 0.2});
    const auto s = classify_shape(d);
    CHECK(s.kind == ShapeKind::Unimodal);
    const auto m = mode_interval(d, s);
    CHECK(m.lo == 1.0);
    CHECK(m.hi == 3.0);
  }
  SUBCASE("no mode without unimodality") {
    const Distribution d = DiscretePmf({0.0, 1.0, 2.0}, {0.5, 0.0, 0.5});
    CHECK_THROWS_AS((void)mode_interval(d, classify_shape(d)), InputError);
  }
}

TEST_CASE("distribution JSON") {
  SUBCASE("round trip is exact") {
    const Distribution pmf = example_symmetric_six_point();
    const Distribution density = StepDensity({0.0, 0.1, 0.7}, {1.0 / 0.3, (1.0 - 1.0 / 3.0) / 0.6});
    for (const auto& d : {pmf, density}) {
      const auto text = to_json(d).dump();
      CHECK(parse_distribution(text) == d);
    }
  }
  SUBCASE("schema") {
    const auto d = parse_distribution(R"({"type":"discrete","points":[-1,0,1],"probs":[0.2,0.5,0.3]})");
    CHECK(std::holds_alternative<DiscretePmf>(d));
    const auto p = parse_distribution(R"({"type":"piecewise","breakpoints":[0,1],"heights":[1]})");
    CHECK(std::holds_alternative<StepDensity>(p));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS((void)parse_distribution("{"), InputError);
    CHECK_THROWS_AS((void)parse_distribution("[]"), InputError);
    CHECK_THROWS_AS((void)parse_distribution(R"({"type":"gamma"})"), InputError);
    CHECK_THROWS_AS((void)parse_distribution(R"({"type":"discrete","points":[0]})"), InputError);
    CHECK_THROWS_AS((void)parse_distribution(R"({"type":"discrete","points":["a"],"probs":[1]})"),
                    InputError);
    CHECK_THROWS_AS((void)parse_distribution(R"({"type":"discrete","points":[0,1],"probs":[0.5,0.4]})"),
                    InputError);
    CHECK_THROWS_AS((void)load_distribution("/nonexistent/file.json"), InputError);
  }
}
