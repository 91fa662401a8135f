#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mds/classify.hpp"
#include "mds/dynamics.hpp"
#include "mds/parser.hpp"

namespace mds {

struct OracleReport {
  std::map<std::uint64_t, std::uint64_t> cycle_counts;
  std::uint64_t fixed_points = 0;
  std::uint64_t max_transient = 0;
  std::uint64_t state_count = 0;
};

struct AnalysisReport {
  MonomialSystem system;
  DependencyGraph graph;
  SccDecomposition decomposition;
  SystemVerdict verdict;
  std::optional<OracleReport> oracle;
  std::vector<std::pair<std::string, double>> timings_ms;
};

inline AnalysisReport analyze_system(const MonomialSystem& f, bool with_oracle,
                                     int limit = 24, int threads = 1) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point from) {
    return std::chrono::duration<double, std::milli>(clock::now() - from).count();
  };

  AnalysisReport report;
  report.system = f;

  auto t0 = clock::now();
  report.graph = build_dependency_graph(f);
  report.decomposition = strongly_connected_components(report.graph);
  report.verdict = classify(f, report.graph, report.decomposition);
  report.timings_ms.emplace_back("analyze", ms_since(t0));

  if (with_oracle) {
    auto t1 = clock::now();
    const CycleStructure cs =
        cycle_structure(enumerate_state_space(f, limit, threads));
    OracleReport oracle;
    oracle.cycle_counts = cs.cycle_counts;
    oracle.fixed_points = cs.fixed_points.size();
    oracle.max_transient = cs.max_transient;
    oracle.state_count = std::uint64_t{1} << f.n;
    report.oracle = std::move(oracle);
    report.timings_ms.emplace_back("oracle", ms_since(t1));
  }
  return report;
}

inline std::string verdict_text(bool is_fixed_point_system) {
  return is_fixed_point_system ? "fixed-point system" : "not a fixed-point system";
}

namespace detail {

inline std::string vertex_set_text(const std::vector<int>& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ", ";
    out += "a" + std::to_string(vertices[i] + 1);
  }
  return out + "}";
}

}  // namespace detail

inline std::string render_human(const AnalysisReport& r) {
  std::string out = format_system(r.system);
  out += "\ncomponents:\n";
  for (std::size_t c = 0; c < r.decomposition.components.size(); ++c) {
    const SccInfo& info = r.decomposition.components[c];
    const ComponentVerdict& cv = r.verdict.component_verdicts[c];
    out += "  " + detail::vertex_set_text(info.vertices) +
           ": loop number " + std::to_string(info.loop_number) +
           (info.reaches_zero ? ", reaches a zero" : "") +
           ", status " + to_string(cv.status) + "\n";
  }
  out += "verdict: " + verdict_text(r.verdict.is_fixed_point_system) + "\n";
  out += "vertex criteria:\n";
  for (int v = 0; v < r.system.n; ++v)
    out += "  a" + std::to_string(v + 1) + ": " +
           to_string(r.verdict.vertex_criteria[v]) + "\n";
  if (r.oracle) {
    out += "oracle (" + std::to_string(r.oracle->state_count) + " states):\n";
    out += "  cycle counts:";
    for (const auto& [len, count] : r.oracle->cycle_counts)
      out += " " + std::to_string(len) + "x" + std::to_string(count);
    out += "\n  fixed points: " + std::to_string(r.oracle->fixed_points) + "\n";
    out += "  max transient: " + std::to_string(r.oracle->max_transient) + "\n";
  }
  out += "timings:";
  for (const auto& [name, ms] : r.timings_ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %s=%.3fms", name.c_str(), ms);
    out += buf;
  }
  out += "\n";
  return out;
}

// Machine-readable schema: verdict (bool), components (vertices, loop
// number, zero reachability, status), vertex_criteria, oracle (null until
// the brute force ran), timings_ms (null unless requested, to keep the
// output byte-identical across runs).
inline nlohmann::json structured_report(const AnalysisReport& r,
                                        bool include_timings = false) {
  nlohmann::json j;
  j["verdict"] = r.verdict.is_fixed_point_system;
  j["components"] = nlohmann::json::array();
  for (std::size_t c = 0; c < r.decomposition.components.size(); ++c) {
    const SccInfo& info = r.decomposition.components[c];
    const ComponentVerdict& cv = r.verdict.component_verdicts[c];
    nlohmann::json jc;
    jc["vertices"] = nlohmann::json::array();
    for (int v : info.vertices) jc["vertices"].push_back(v + 1);
    jc["loop_number"] = info.loop_number;
    jc["reaches_zero"] = info.reaches_zero;
    jc["status"] = to_string(cv.status);
    j["components"].push_back(std::move(jc));
  }
  j["vertex_criteria"] = nlohmann::json::object();
  for (int v = 0; v < r.system.n; ++v)
    j["vertex_criteria"][std::to_string(v + 1)] =
        to_string(r.verdict.vertex_criteria[v]);
  if (r.oracle) {
    nlohmann::json jo;
    jo["cycle_counts"] = nlohmann::json::object();
    for (const auto& [len, count] : r.oracle->cycle_counts)
      jo["cycle_counts"][std::to_string(len)] = count;
    jo["fixed_points"] = r.oracle->fixed_points;
    jo["max_transient"] = r.oracle->max_transient;
    j["oracle"] = std::move(jo);
  } else {
    j["oracle"] = nullptr;
  }
  if (include_timings) {
    nlohmann::json jt;
    for (const auto& [name, ms] : r.timings_ms) jt[name] = ms;
    j["timings_ms"] = std::move(jt);
  } else {
    j["timings_ms"] = nullptr;
  }
  return j;
}

inline std::string render_structured(const AnalysisReport& r,
                                     bool include_timings = false) {
  return structured_report(r, include_timings).dump(2) + "\n";
}

// Exit-code contract for classifier/oracle cross-validation: 0 on agreement,
// 3 on mismatch (a mismatch means a bug, not bad input).
inline int check_exit_code(bool classifier_verdict, bool oracle_verdict) {
  return classifier_verdict == oracle_verdict ? 0 : 3;
}

}  // namespace mds
