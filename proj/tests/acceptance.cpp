// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: unibound_acceptance [path-to-unibound-cli]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "unibound/audit.hpp"
#include "unibound/bounds.hpp"
#include "unibound/generators.hpp"
#include "unibound/polynomial.hpp"
#include "unibound/report_json.hpp"
#include "unibound/suite.hpp"

using namespace unibound;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int g_failed = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  out.detail.precision(17);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0.0 && secs >= limit_s) {
    out.ok = false;
    out.detail << " [runtime " << secs << " s exceeds " << limit_s << " s]";
  }
  if (!out.ok) ++g_failed;
  std::printf("%s  %d. %s (%.3f s)%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs, out.detail.str().c_str());
  std::fflush(stdout);
}

bool rel_close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::abs(want);
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "skewed three-point pmf: mean, window and lattice bounds", 1.0, [](Outcome& o) {
    const auto pmf = example_skewed_three_point();
    const auto report = audit(pmf);
    // 0.1 is not representable; the stored probabilities give the nearest sum.
    o.require(rel_close(report.mean, 0.1, 1e-15), "mean within 1e-15 of 1/10");
    const auto* lattice = report.find("variance.lattice");
    const auto* window = report.find("central.discrete-window", 2);
    o.require(lattice && rel_close(lattice->bound, 11.0 / 300.0, 1e-15), "lattice bound 11/300");
    o.require(window && rel_close(window->bound, 9.0 / 100.0, 1e-15), "window bound 9/100");
    o.require(rel_close(report.variance, 0.49, 1e-15), "variance 0.49");
    o.require(lattice && lattice->status == CheckStatus::Pass, "lattice bound holds");
    o.require(window && window->status == CheckStatus::Pass, "window bound holds");
    o.require(lattice && window && window->bound > lattice->bound, "window bound exceeds lattice bound");
    if (lattice && window) {
      o.detail << " mean=" << report.mean << " lattice=" << lattice->bound << " window=" << window->bound
               << " variance=" << report.variance;
    }
  });

  criterion(2, "symmetric six-point pmf: window bound 5^(2r), lattice n/a", 1.0, [](Outcome& o) {
    const auto pmf = example_symmetric_six_point();
    const auto report = audit(pmf);
    o.require(report.mean == 0.0, "mean 0");
    for (int r = 1; r <= 3; ++r) {
      const auto* w = report.find("central.discrete-window", 2 * r);
      o.require(w && w->bound == std::pow(5.0, 2 * r), "window bound 5^(2r) for r=" + std::to_string(r));
      o.require(w && w->status == CheckStatus::Pass, "bound holds for r=" + std::to_string(r));
    }
    const double mu2 = central_moment(pmf, 2);
    const double mu4 = central_moment(pmf, 4);
    o.require(rel_close(mu2, 250.0 / 3.0, 1e-15), "mu2 = 250/3");
    o.require(rel_close(mu4, 36250.0 / 3.0, 1e-15), "mu4 = 36250/3 by direct summation");
    o.require(report.find("variance.lattice") == nullptr, "lattice bound not applicable");
    bool reported = false;
    for (const auto& c : report.checks) {
      if (c.name == "variance.lattice" && c.status == CheckStatus::NotApplicable) reported = true;
    }
    o.require(reported, "lattice bound listed as n/a");
    o.detail << " mu2=" << mu2 << " mu4=" << mu4 << " mu6=" << central_moment(pmf, 6);
  });

  criterion(3, "tightness: uniform witness attains the unimodal bounds (100 pairs)", 5.0, [](Outcome& o) {
    double worst = 0.0;
    std::size_t checks = 0;
    auto gap = [&](double bound, double actual) {
      ++checks;
      const double scale = std::max(std::abs(bound), std::abs(actual));
      const double rel = scale == 0.0 ? 0.0 : std::abs(actual - bound) / scale;
      worst = std::max(worst, rel);
    };
    for (std::uint64_t i = 0; i < kTightnessPairs; ++i) {
      const auto p = tightness_pair(1, i);
      const Distribution w = tightness_witness(p.mode, p.mean);
      gap(variance_lb_unimodal(p.mean, p.mode).value, central_moment(w, 2));
      const bool nonnegative = std::min(p.mode, 2.0 * p.mean - p.mode) >= 0.0;
      for (int r = 2; r <= 5; ++r) {
        if (r % 2 == 1 && !nonnegative) continue;
        gap(raw_moment_lb_unimodal(p.mode, p.mean, r).value, raw_moment(w, r));
      }
      for (int k = 1; k <= 3; ++k) gap(central_even_lb_unimodal(p.mean, p.mode, k).value, central_moment(w, 2 * k));
    }
    o.require(worst <= 1e-12, "relative margin <= 1e-12");
    o.detail << " checks=" << checks << " worst_rel_gap=" << worst;
  });

  SuiteSummary big;
  criterion(4, "soundness: 10000 pmfs and 10000 densities, zero violations", 60.0, [&](Outcome& o) {
    TrialConfig config;
    config.master_seed = 1;
    config.n_trials = 10000;
    big = run_suite(config);
    o.require(big.discrete_trials == 10000 && big.density_trials == 10000, "trial counts");
    o.require(big.lattice_trials == 5000, "half of the pmfs on a lattice");
    std::size_t bound_failures = 0;
    for (const auto& [name, t] : big.tallies) {
      if (name.rfind("mean-range", 0) != 0) bound_failures += t.failed;
    }
    for (const char* tag : {"variance.nonincreasing", "variance.nondecreasing", "variance.unimodal", "raw.tangent",
                            "raw.nonincreasing", "raw.unimodal", "central.unimodal", "central.discrete-window",
                            "variance.lattice", "variance.jacobson"}) {
      const auto it = big.tallies.find(tag);
      o.require(it != big.tallies.end() && it->second.run > 0, std::string("bound exercised: ") + tag);
    }
    o.require(bound_failures == 0, "no bound violations");
    o.detail << " bound_violations=" << bound_failures;
    for (const char* tag : {"variance.unimodal", "central.discrete-window", "variance.lattice"}) {
      o.detail << " " << tag << "_checks=" << big.tallies[tag].run;
    }
  });

  criterion(5, "consistency: solved witness reproduces the closed-form raw bound", 1.0, [](Outcome& o) {
    double worst = 0.0;
    for (int r = 2; r <= 6; ++r) {
      for (double a : {0.0, 0.5, 1.0}) {
        for (double off : {0.25, 1.0}) {
          const double mean = a + off;
          const double beta = 2.0 * mean - a;
          const double alpha = solve_witness_constraint(a, beta, r);
          const double via = two_point_raw_lb(alpha, beta, mean, r);
          const double closed = raw_moment_lb_monotone(a, mean, r).value;
          worst = std::max(worst, std::abs(via - closed) / std::abs(closed));
        }
      }
    }
    o.require(worst <= 1e-10, "relative error <= 1e-10");
    o.detail << " cases=30 worst_rel_error=" << worst;
  });

  criterion(6, "factorization of the moment polynomial (500 cases)", 5.0, [](Outcome& o) {
    double worst_residual = 0.0;
    double min_ratio = 1.0;
    for (std::uint64_t i = 0; i < kFactorizationCases; ++i) {
      const auto c = factorization_case(1, i);
      const auto p = build_moment_polynomial(c.alpha, c.beta, c.order);
      worst_residual = std::max(worst_residual, p.division_residual);
      min_ratio = std::min(min_ratio, p.min_g_ratio);
    }
    o.require(worst_residual <= kDivisionTolerance, "division residual <= 1e-9");
    o.require(min_ratio >= -kNonnegativityTolerance, "g >= -1e-9 scale on the grid");
    o.detail << " worst_residual=" << worst_residual << " min_g_ratio=" << min_ratio;
  });

  criterion(7, "mean range (a+M)/2 <= mean <= (b+M)/2 on 10000 densities", 0.0, [&](Outcome& o) {
    const auto lo = big.tallies.find("mean-range.lower");
    const auto hi = big.tallies.find("mean-range.upper");
    o.require(lo != big.tallies.end() && hi != big.tallies.end(), "mean-range checks present");
    if (lo == big.tallies.end() || hi == big.tallies.end()) return;
    o.require(lo->second.run == 10000 && hi->second.run == 10000, "every density checked");
    o.require(lo->second.failed == 0 && hi->second.failed == 0, "no mean-range violations");
    o.detail << " checked=" << lo->second.run << " failed=" << lo->second.failed + hi->second.failed;
  });

  criterion(8, "determinism: verify JSON identical across UNIBOUND_THREADS", 0.0, [&](Outcome& o) {
    TrialConfig config;
    config.master_seed = 1;
    config.n_trials = 2000;
    const auto serial = to_json(run_suite_serial(config)).dump();
    for (int t : {1, 2, 4, 8}) {
      o.require(to_json(run_suite(config, t)).dump() == serial, "library run with " + std::to_string(t) + " threads");
    }
    if (cli.empty()) {
      o.require(false, "CLI path not given");
      return;
    }
    int st1 = 0;
    int st4 = 0;
    const std::string args = " verify --seed 1 --trials 1000 --json";
    const auto a = run_capture("UNIBOUND_THREADS=1 '" + cli + "'" + args, st1);
    const auto b = run_capture("UNIBOUND_THREADS=4 '" + cli + "'" + args, st4);
    o.require(st1 == 0 && st4 == 0, "verify exits 0");
    o.require(!a.empty() && a == b, "byte-identical output");
    o.detail << " bytes=" << a.size();
  });

  std::printf("%d criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
