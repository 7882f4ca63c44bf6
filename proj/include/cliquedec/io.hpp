#pragma once

/**
 * JSON encodings. Big integers are decimal strings; decompositions are
 * written in canonical (sorted) form and accepted unsorted.
 */

#include <cmath>
#include <string>
#include <variant>

#include <json.hpp>

#include "cliquedec/asymptotics.hpp"
#include "cliquedec/decomposition.hpp"
#include "cliquedec/enumerator.hpp"
#include "cliquedec/order_experiment.hpp"
#include "cliquedec/removal.hpp"
#include "cliquedec/typicality.hpp"

#ifndef CLIQUEDEC_VERSION_STRING
#define CLIQUEDEC_VERSION_STRING "0.1.0"
#endif

namespace cliquedec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = CLIQUEDEC_VERSION_STRING;

namespace io_detail {
// Non-finite reals become null rather than invalid JSON.
inline auto real(long double x) -> Json { return std::isfinite(x) ? Json(static_cast<double>(x)) : Json(nullptr); }
}  // namespace io_detail

inline auto to_json(const CliqueDecomposition& d) -> Json {
  const auto canon = d.canonical();
  Json cliques = Json::array();
  for (const auto& c : canon.cliques) cliques.push_back(c.vertices());
  return {{"n", d.n}, {"cliques", std::move(cliques)}};
}

inline auto decomposition_from_json(const Json& j) -> CliqueDecomposition {
  CliqueDecomposition d;
  d.n = j.at("n").get<int>();
  for (const auto& c : j.at("cliques")) d.cliques.emplace_back(c.get<std::vector<Vertex>>());
  return d;
}

inline auto to_json(const DenseGraph& g) -> Json {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline auto graph_from_json(const Json& j) -> DenseGraph {
  DenseGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edges must be [u, v] pairs");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

inline auto to_json(const Violation& v) -> Json {
  Json j{{"kind", to_string(v.kind)}};
  if (v.edge.first >= 0) j["edge"] = {v.edge.first, v.edge.second};
  if (v.clique_index >= 0) j["clique"] = v.clique_index;
  if (v.multiplicity > 0) j["multiplicity"] = v.multiplicity;
  return j;
}

inline auto to_json(const Profile& p) -> Json {
  return {{"s", p.counts}, {"E", p.oversized_edges}};
}

inline auto to_json(const EnumerationResult& r, bool by_profile) -> Json {
  Json j{{"n", r.n}, {"cutoff", r.cutoff}, {"method", to_string(r.method)}, {"total", to_decimal(r.total)}};
  if (by_profile) {
    Json profiles = Json::array();
    for (const auto& [p, count] : r.by_profile) {
      auto entry = to_json(p);
      entry["count"] = to_decimal(count);
      profiles.push_back(std::move(entry));
    }
    j["profiles"] = std::move(profiles);
  }
  return j;
}

inline auto to_json(const TypicalityReport& r) -> Json {
  Json j{{"epsilon", io_detail::real(r.epsilon)},
         {"h", r.h},
         {"density", r.density},
         {"worst_relative_deviation", io_detail::real(r.worst_relative_deviation)},
         {"worst_absolute_deviation", r.worst_absolute_deviation},
         {"worst_set", r.worst_set},
         {"sets_checked", r.sets_checked},
         {"exhaustive", r.exhaustive},
         {"passed", r.passed}};
  if (r.additive_tolerance) j["additive_tolerance"] = *r.additive_tolerance;
  return j;
}

inline auto to_json(const OrderExperimentReport& r) -> Json {
  return {{"trials", r.trials},
          {"checkpoints", r.checkpoints},
          {"h", r.h},
          {"seed", r.seed},
          {"coneighborhood_tolerance", r.coneighborhood_tolerance},
          {"window_tolerance", r.window_tolerance},
          {"coneighborhood_pass_rate", r.coneighborhood_pass_rate},
          {"window_pass_rate", r.window_pass_rate},
          {"worst_coneighborhood_excess", io_detail::real(r.worst_coneighborhood_excess)},
          {"worst_window_excess", io_detail::real(r.worst_window_excess)},
          {"sets_checked", r.sets_checked}};
}

inline auto to_json(const RunResult& r, bool include_decomposition) -> Json {
  Json outcome;
  if (r.succeeded()) {
    outcome = {{"status", "decomposition"}};
    if (include_decomposition) outcome["decomposition"] = to_json(r.decomposition());
  } else {
    const auto& a = std::get<Aborted>(r.outcome);
    outcome = {{"status", "aborted"}, {"phase", a.phase}, {"step", a.step}};
  }
  Json trace = Json::array();
  for (const auto& cp : r.typicality_trace)
    trace.push_back({{"phase", cp.phase}, {"step", cp.step}, {"report", to_json(cp.report)}});
  return {{"seed", r.seed},
          {"rng", std::string(kRngName)},
          {"schedule", {{"four_clique_steps", r.schedule.four_clique_steps}, {"triangle_steps", r.schedule.triangle_steps}}},
          {"outcome", std::move(outcome)},
          {"clique_counts", {{"four", r.clique_counts.four}, {"three", r.clique_counts.three}, {"two", r.clique_counts.two}}},
          {"final_density", r.final_density},
          {"ledger_ok", r.ledger_ok},
          {"ledger_checks", r.ledger_checks},
          {"fallback_selections", r.fallback_selections},
          {"typicality_trace", std::move(trace)}};
}

inline auto to_json(const AbortRateReport& r) -> Json {
  Json by_phase = Json::object();
  for (const auto& [phase, count] : r.aborted_by_phase) by_phase[std::to_string(phase)] = count;
  const double pass_rate = r.checkpoints == 0 ? 1.0 : static_cast<double>(r.checkpoints_passed) / static_cast<double>(r.checkpoints);
  return {{"seed", r.seed},
          {"trials", r.trials},
          {"aborted", r.aborted},
          {"abort_rate", r.abort_rate},
          {"aborted_by_phase", std::move(by_phase)},
          {"mean_min_density", r.mean_min_density},
          {"checkpoints", r.checkpoints},
          {"checkpoints_passed", r.checkpoints_passed},
          {"checkpoint_pass_rate", pass_rate},
          {"ledger_ok", r.ledger_ok}};
}

inline auto to_json(const OptimalProfile& p) -> Json {
  Json s = Json::array();
  for (auto x : p.s) s.push_back(io_detail::real(x));
  return {{"n", io_detail::real(p.n)},
          {"cutoff", p.cutoff},
          {"lambda", io_detail::real(p.lambda)},
          {"alpha", io_detail::real(p.alpha)},
          {"s", std::move(s)},
          {"f_value", io_detail::real(p.f_value)}};
}

inline auto to_json(const BoundReport& r) -> Json {
  return {{"n", io_detail::real(r.n)},
          {"cutoff", r.cutoff},
          {"upper_log", io_detail::real(r.upper_log)},
          {"lower_log", io_detail::real(r.lower_log)},
          {"leading_constant", io_detail::real(r.leading_constant)},
          {"upper_constant", io_detail::real(r.upper_constant)},
          {"lower_constant", io_detail::real(r.lower_constant)},
          {"normalized_gap", io_detail::real(r.normalized_gap)}};
}

inline auto to_json(const LowerBound& lb) -> Json {
  const auto& t = lb.telescoping;
  return {{"n", io_detail::real(lb.n)},
          {"c", io_detail::real(lb.c)},
          {"s3", io_detail::real(lb.s3)},
          {"s4", io_detail::real(lb.s4)},
          {"truncated_triangles", io_detail::real(lb.truncated_triangles)},
          {"log_value", io_detail::real(lb.log_value)},
          {"telescoping",
           {{"a3", io_detail::real(t.a3)},
            {"a4", io_detail::real(t.a4)},
            {"a3_used", io_detail::real(t.a3_used)},
            {"quadrature", io_detail::real(t.quadrature_total())},
            {"exact", io_detail::real(t.exact)},
            {"error", io_detail::real(t.error())}}}};
}

inline auto to_json(const SmallRankCounts& r) -> Json {
  Json bell = Json::array();
  for (const auto& b : r.bell) bell.push_back(to_decimal(b));
  return {{"n", r.n}, {"m1", to_decimal(r.m1)}, {"m2", to_decimal(r.m2)}, {"bell", std::move(bell)}};
}

}  // namespace cliquedec
