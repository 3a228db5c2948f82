#include "unibound/report_json.hpp"

#include "unibound/distribution_json.hpp"

namespace unibound {
namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string_view to_string(MomentKind kind) { return kind == MomentKind::Raw ? "raw" : "central"; }

nlohmann::json to_json(const RatioExtreme& e) {
  return {{"trial", e.trial}, {"ratio", e.ratio}, {"window", e.window}, {"lattice", e.lattice}};
}

}  // namespace

nlohmann::json to_json(const ShapeClass& shape) {
  nlohmann::json j{{"kind", to_string(shape.kind)}};
  if (shape.is_unimodal()) {
    j["peak_lo"] = shape.peak_lo;
    j["peak_hi"] = shape.peak_hi;
    j["also_non_decreasing"] = shape.also_non_decreasing;
  }
  return j;
}

nlohmann::json to_json(const BoundResult& bound) {
  nlohmann::json j{{"source", to_string(bound.source)},
                   {"label", describe(bound.source)},
                   {"kind", to_string(bound.kind)},
                   {"moment", to_string(bound.moment)},
                   {"order", bound.order},
                   {"value", bound.value}};
  if (bound.witness) j["witness"] = {{"alpha", bound.witness->alpha}, {"beta", bound.witness->beta}};
  return j;
}

nlohmann::json to_json(const Check& c) {
  nlohmann::json j{{"name", c.name},
                   {"status", to_string(c.status)},
                   {"kind", to_string(c.kind)},
                   {"moment", to_string(c.moment)},
                   {"order", c.order}};
  if (c.status == CheckStatus::NotApplicable) {
    j["note"] = c.note;
    return j;
  }
  if (c.mode) j["mode"] = *c.mode;
  j["bound"] = c.bound;
  j["actual"] = c.actual;
  j["margin"] = c.margin;
  return j;
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {{"id", report.id},
          {"distribution", to_json(report.dist)},
          {"shape", to_json(report.shape)},
          {"mean", report.mean},
          {"variance", report.variance},
          {"passed", report.passed()},
          {"failed", report.count(CheckStatus::Fail)},
          {"checks", checks}};
}

nlohmann::json to_json(const TrialConfig& config) {
  return {{"master_seed", config.master_seed}, {"n_trials", config.n_trials},
          {"max_points", config.max_points},   {"max_pieces", config.max_pieces},
          {"r_max", config.r_max},             {"abs_tol", config.abs_tol},
          {"rel_tol", config.rel_tol}};
}

nlohmann::json to_json(const SuiteSummary& s) {
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [name, t] : s.tallies) {
    tallies[name] = {{"run", t.run},
                     {"failed", t.failed},
                     {"not_applicable", t.not_applicable},
                     {"min_relative_margin", optional_number(t.min_relative_margin)}};
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : s.failures) {
    nlohmann::json j{{"section", f.section}, {"trial", f.trial},   {"check", f.check},
                     {"bound", f.bound},     {"actual", f.actual}, {"detail", f.detail}};
    if (f.dist) j["distribution"] = to_json(*f.dist);
    failures.push_back(std::move(j));
  }
  nlohmann::json out{
      {"config", to_json(s.config)},
      {"violations", s.violations()},
      {"ok", s.ok()},
      {"trials", {{"discrete", s.discrete_trials}, {"lattice", s.lattice_trials}, {"density", s.density_trials}}},
      {"not_unimodal", s.shapes_not_unimodal},
      {"checks", tallies},
      {"tightness",
       {{"cases", s.tightness.cases}, {"failed", s.tightness.failed}, {"max_relative_gap", s.tightness.worst}}},
      {"factorization",
       {{"cases", s.factorization.cases},
        {"failed", s.factorization.failed},
        {"max_division_residual", s.factorization.worst},
        {"min_g_ratio", s.factorization.cases > s.factorization.failed
                            ? nlohmann::json(s.factorization_min_g_ratio)
                            : nlohmann::json(nullptr)}}},
      {"consistency",
       {{"cases", s.consistency.cases},
        {"failed", s.consistency.failed},
        {"max_relative_error", s.consistency.worst}}},
      {"failures", failures}};
  if (const auto* minimal = s.minimal_counterexample()) {
    out["minimal_counterexample"] = to_json(*minimal->dist);
  }
  return out;
}

nlohmann::json to_json(const ComparisonSummary& s) {
  nlohmann::json builtins = nlohmann::json::array();
  for (const auto& b : s.builtins) {
    builtins.push_back({{"name", b.name},
                        {"window", b.window},
                        {"lattice", b.lattice},
                        {"ratio", optional_number(b.ratio)},
                        {"verdict", b.verdict}});
  }
  return {{"master_seed", s.master_seed},
          {"trials", s.trials},
          {"family", s.family},
          {"window_wins", s.window_wins},
          {"lattice_wins", s.lattice_wins},
          {"ties", s.ties},
          {"window_win_fraction", s.trials ? static_cast<double>(s.window_wins) / static_cast<double>(s.trials) : 0.0},
          {"ratio_cases", s.ratio_cases},
          {"mean_ratio", optional_number(s.mean_ratio)},
          {"min_ratio", s.min_ratio ? to_json(*s.min_ratio) : nlohmann::json(nullptr)},
          {"max_ratio", s.max_ratio ? to_json(*s.max_ratio) : nlohmann::json(nullptr)},
          {"builtins", builtins}};
}

}  // namespace unibound
