// unibound: moment bounds for unimodal distributions.
//
// Exit codes: 0 success, 1 a bound was violated, 2 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unibound/audit.hpp"
#include "unibound/bounds.hpp"
#include "unibound/distribution_json.hpp"
#include "unibound/errors.hpp"
#include "unibound/report_json.hpp"
#include "unibound/suite.hpp"

namespace ub = unibound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string num(double x) {
  std::ostringstream out;
  out << std::setprecision(6) << x;
  return out.str();
}

// UNIBOUND_THREADS caps the worker count; results do not depend on it.
int env_threads() {
  const char* raw = std::getenv("UNIBOUND_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) throw ub::InputError("UNIBOUND_THREADS must be a positive integer");
  return static_cast<int>(v);
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

// --- bound ---------------------------------------------------------------

struct BoundArgs {
  std::string shape;
  double a = 0, b = 0, mode = 0, mean = 0, xlo = 0, xhi = 0;
  int r = 1;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* mean_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* xlo_opt = nullptr;
  CLI::Option* xhi_opt = nullptr;
};

void need(const CLI::Option* opt, const std::string& shape) {
  if (opt->count() == 0) throw ub::InputError("--shape " + shape + " requires " + opt->get_name());
}

std::vector<ub::BoundResult> compute_bounds(const BoundArgs& q, std::vector<std::string>& notes) {
  std::vector<ub::BoundResult> out;
  const int r = q.r;
  if (r < 1) throw ub::InputError("--r must be >= 1");
  if (q.shape == "non-increasing" || q.shape == "non-decreasing") {
    need(q.a_opt, q.shape);
    need(q.b_opt, q.shape);
    need(q.mean_opt, q.shape);
    const auto dir = q.shape == "non-increasing" ? ub::Direction::NonIncreasing : ub::Direction::NonDecreasing;
    out.push_back(ub::variance_lb_monotone(q.a, q.b, q.mean, dir));
    if (dir == ub::Direction::NonIncreasing && r >= 2) {
      try {
        out.push_back(ub::raw_moment_lb_monotone(q.a, q.mean, r));
      } catch (const ub::UnsupportedRegimeError& e) {
        notes.emplace_back(e.what());
      }
    }
    out.push_back(ub::variance_ub_jacobson(q.a, q.b));
  } else if (q.shape == "unimodal") {
    need(q.mean_opt, q.shape);
    need(q.mode_opt, q.shape);
    if (q.a_opt->count() && q.b_opt->count()) {
      if (q.mode < q.a || q.mode > q.b) throw ub::PreconditionError("mode must lie in [a, b]");
      const double slack = ub::kRangeSlack * std::max({1.0, std::abs(q.a), std::abs(q.b)});
      if (q.mean < 0.5 * (q.a + q.mode) - slack || q.mean > 0.5 * (q.b + q.mode) + slack) {
        throw ub::PreconditionError("mean must lie in [(a+M)/2, (b+M)/2] for a unimodal density");
      }
    }
    out.push_back(ub::variance_lb_unimodal(q.mean, q.mode));
    if (r >= 2) out.push_back(ub::central_even_lb_unimodal(q.mean, q.mode, r));
    if (r >= 2) {
      try {
        out.push_back(ub::raw_moment_lb_unimodal(q.mode, q.mean, r));
      } catch (const ub::UnsupportedRegimeError& e) {
        notes.emplace_back(e.what());
      }
    }
    if (q.a_opt->count() && q.b_opt->count()) out.push_back(ub::variance_ub_jacobson(q.a, q.b));
  } else if (q.shape == "discrete-window") {
    need(q.xlo_opt, q.shape);
    need(q.xhi_opt, q.shape);
    need(q.mean_opt, q.shape);
    out.push_back(ub::discrete_central_lb(q.xlo, q.xhi, q.mean, r));
  } else if (q.shape == "lattice") {
    need(q.mean_opt, q.shape);
    need(q.mode_opt, q.shape);
    if (q.mode != std::floor(q.mode)) throw ub::InputError("--shape lattice requires an integer --mode");
    out.push_back(ub::lattice_variance_lb(q.mean, q.mode));
  } else {
    throw ub::InputError("unknown shape " + q.shape);
  }
  if (r >= 2) {
    ub::BoundResult t;
    t.source = ub::BoundSource::RawTangent;
    t.moment = ub::MomentKind::Raw;
    t.order = r;
    t.value = ub::tangent_raw_lb(q.mean, q.mean, r);
    if (r % 2 == 0 || (q.a_opt->count() && q.a >= 0.0)) out.push_back(t);
  }
  return out;
}

int cmd_bound(const BoundArgs& q, bool json) {
  std::vector<std::string> notes;
  const auto bounds = compute_bounds(q, notes);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : bounds) arr.push_back(ub::to_json(b));
    print_json({{"shape", q.shape}, {"bounds", arr}, {"notes", notes}});
    return kExitOk;
  }
  for (const auto& b : bounds) {
    std::cout << std::left << std::setw(24) << ub::to_string(b.source) << ' ' << ub::to_string(b.kind) << "  "
              << (b.moment == ub::MomentKind::Raw ? "raw" : "central") << " order " << b.order << "  "
              << num(b.value);
    if (b.witness) std::cout << "  witness (" << num(b.witness->alpha) << ", " << num(b.witness->beta) << ")";
    std::cout << "  [" << ub::describe(b.source) << "]\n";
  }
  for (const auto& n : notes) std::cout << "note: " << n << '\n';
  return kExitOk;
}

// --- audit ---------------------------------------------------------------

int cmd_audit(const std::string& path, int r_max, bool json) {
  const auto dist = ub::load_distribution(path);
  const auto report = ub::audit(dist, {r_max, ub::Tolerance{}});
  if (json) {
    print_json(ub::to_json(report));
  } else {
    std::cout << "distribution " << report.id << "  shape " << ub::to_string(report.shape.kind) << "\n"
              << "mean " << num(report.mean) << "  variance " << num(report.variance) << "\n";
    for (const auto& c : report.checks) {
      std::cout << std::left << std::setw(6) << ub::to_string(c.status) << std::setw(24) << c.name << " order "
                << c.order;
      if (c.status == ub::CheckStatus::NotApplicable) {
        std::cout << "  (" << c.note << ")\n";
        continue;
      }
      std::cout << "  " << (c.kind == ub::BoundKind::Lower ? "bound " : "upper ") << num(c.bound) << "  actual "
                << num(c.actual);
      if (c.mode) std::cout << "  mode " << num(*c.mode);
      if (c.source) std::cout << "  [" << ub::describe(*c.source) << "]";
      std::cout << '\n';
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << ": " << report.count(ub::CheckStatus::Pass) << " passed, "
              << report.count(ub::CheckStatus::Fail) << " failed, " << report.count(ub::CheckStatus::NotApplicable)
              << " not applicable\n";
  }
  return report.passed() ? kExitOk : kExitViolation;
}

// --- verify --------------------------------------------------------------

void write_counterexample(const ub::SuiteSummary& s, const std::string& dir) {
  const auto* f = s.minimal_counterexample();
  if (f == nullptr) return;
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / "counterexample.json");
  if (!out) throw ub::InputError("cannot write to " + dir);
  out << ub::to_json(*f->dist).dump(2) << '\n';
}

int cmd_verify(const ub::TrialConfig& config, const std::string& failure_dir, bool json) {
  config.validate();
  const auto summary = ub::run_suite(config, env_threads());
  if (!failure_dir.empty()) write_counterexample(summary, failure_dir);
  if (json) {
    print_json(ub::to_json(summary));
  } else {
    std::cout << "seed " << config.master_seed << "  trials " << config.n_trials << " discrete + "
              << config.n_trials << " density (" << summary.lattice_trials << " lattice)\n";
    for (const auto& [name, t] : summary.tallies) {
      std::cout << "  " << std::left << std::setw(24) << name << " run " << std::setw(7) << t.run << " failed "
                << std::setw(4) << t.failed << " n/a " << t.not_applicable;
      if (t.min_relative_margin) std::cout << "  min rel margin " << num(*t.min_relative_margin);
      std::cout << '\n';
    }
    std::cout << "tightness: " << summary.tightness.cases << " checks, worst rel gap " << num(summary.tightness.worst)
              << '\n'
              << "factorization: " << summary.factorization.cases << " cases, worst residual "
              << num(summary.factorization.worst) << ", min g ratio " << num(summary.factorization_min_g_ratio) << '\n'
              << "consistency: " << summary.consistency.cases << " cases, worst rel error "
              << num(summary.consistency.worst) << '\n';
    for (const auto& f : summary.failures) {
      std::cout << "violation: " << f.section << " trial " << f.trial << " " << f.check << " bound " << num(f.bound)
                << " actual " << num(f.actual) << " (" << f.detail << ")\n";
    }
    std::cout << summary.violations() << " violations\n";
  }
  return summary.ok() ? kExitOk : kExitViolation;
}

// --- compare -------------------------------------------------------------

int cmd_compare(const ub::TrialConfig& config, bool json) {
  config.validate();
  const auto s = ub::run_compare(config, env_threads());
  if (json) {
    print_json(ub::to_json(s));
    return kExitOk;
  }
  std::cout << "family: " << s.family << "\n"
            << "trials " << s.trials << ": window larger " << s.window_wins << ", lattice larger " << s.lattice_wins
            << ", ties " << s.ties << '\n';
  if (s.mean_ratio) std::cout << "window/lattice ratio over " << s.ratio_cases << " cases: mean " << num(*s.mean_ratio);
  if (s.min_ratio) std::cout << ", min " << num(s.min_ratio->ratio) << " (trial " << s.min_ratio->trial << ")";
  if (s.max_ratio) std::cout << ", max " << num(s.max_ratio->ratio) << " (trial " << s.max_ratio->trial << ")";
  if (s.mean_ratio) std::cout << '\n';
  for (const auto& b : s.builtins) {
    std::cout << "  " << std::left << std::setw(20) << b.name << " window " << num(b.window) << "  lattice "
              << num(b.lattice) << "  ratio " << (b.ratio ? num(*b.ratio) : std::string("-")) << "  " << b.verdict
              << '\n';
  }
  return kExitOk;
}

void add_config_flags(CLI::App* cmd, ub::TrialConfig& config) {
  cmd->add_option("--seed", config.master_seed, "Master seed")->capture_default_str();
  cmd->add_option("--trials", config.n_trials, "Number of trials")->capture_default_str();
  cmd->add_option("--max-points", config.max_points, "Largest pmf support size")->capture_default_str();
  cmd->add_option("--max-pieces", config.max_pieces, "Largest number of density pieces")->capture_default_str();
  cmd->add_option("--r-max", config.r_max, "Raw orders up to 2 r-max, central orders up to 2 r-max")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment bounds for unimodal distributions"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  BoundArgs q;
  auto* bound = app.add_subcommand("bound", "Evaluate bounds from parameters");
  bound->add_option("--shape", q.shape, "non-increasing | non-decreasing | unimodal | discrete-window | lattice")
      ->required()
      ->check(CLI::IsMember({"non-increasing", "non-decreasing", "unimodal", "discrete-window", "lattice"}));
  q.a_opt = bound->add_option("--a", q.a, "Support left end");
  q.b_opt = bound->add_option("--b", q.b, "Support right end");
  q.mode_opt = bound->add_option("--mode", q.mode, "Mode");
  q.mean_opt = bound->add_option("--mean", q.mean, "Mean");
  q.r_opt = bound->add_option("--r", q.r, "Order parameter")->capture_default_str();
  q.xlo_opt = bound->add_option("--xlo", q.xlo, "Largest support point below the mean");
  q.xhi_opt = bound->add_option("--xhi", q.xhi, "Smallest support point above the mean");
  bound->add_flag("--json", json, "Machine-readable output");

  std::string path;
  int audit_r_max = 3;
  auto* audit = app.add_subcommand("audit", "Check every applicable bound on a distribution file");
  audit->add_option("input", path, "Distribution JSON file")->required();
  audit->add_option("--r-max", audit_r_max, "Largest order parameter")->capture_default_str();
  audit->add_flag("--json", json, "Machine-readable output");

  ub::TrialConfig verify_config;
  std::string failure_dir;
  auto* verify = app.add_subcommand("verify", "Run the randomized property suite");
  add_config_flags(verify, verify_config);
  verify->add_option("--failures", failure_dir, "Directory for the minimal counterexample");
  verify->add_flag("--json", json, "Machine-readable output");

  ub::TrialConfig compare_config;
  auto* compare = app.add_subcommand("compare", "Compare the support-window and lattice variance bounds");
  add_config_flags(compare, compare_config);
  compare->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(q, json);
    if (*audit) return cmd_audit(path, audit_r_max, json);
    if (*verify) return cmd_verify(verify_config, failure_dir, json);
    if (*compare) return cmd_compare(compare_config, json);
  } catch (const ub::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ub::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
