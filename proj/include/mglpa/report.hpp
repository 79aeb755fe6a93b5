#pragma once
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>
#include "json.hpp"
#include "mglpa/graph.hpp"
#include "mglpa/lpa.hpp"

namespace mglpa {

inline constexpr int kReportSchemaVersion = 1;

/** Outcome of one timed run, as printed by the CLI. */
struct RunReport {
  std::string graph_name;
  std::size_t num_vertices = 0;
  std::size_t num_arcs = 0;
  LpaConfig config;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<std::size_t> delta_history;
  /** Absent for graphs without edges. */
  std::optional<double> modularity;
  std::size_t num_communities = 0;
  double wall_time_ms = 0;
  std::size_t aux_bytes = 0;
};

/** Fill a report from a finished run (computes modularity and community count). */
RunReport make_report(std::string graph_name, const Graph& g, const LpaConfig& cfg, const LpaResult& result, double wall_time_ms);

/** Run lpa_run with the wall clock around it, and report. */
std::pair<RunReport, LpaResult> timed_run(std::string graph_name, const Graph& g, const LpaConfig& cfg);

/** `ascending` or `shuffled:SEED`. */
std::string seed_order_string(const LpaConfig& cfg);
void parse_seed_order(std::string_view s, LpaConfig& cfg);

nlohmann::json config_to_json(const LpaConfig& cfg);
LpaConfig config_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

std::string report_csv_header();
std::string report_csv_row(const RunReport& r);
void write_report_text(std::ostream& out, const RunReport& r);




/** Aggregate of repeated runs of one variant. */
struct BenchRow {
  Variant variant = Variant::mg;
  std::size_t repeats = 0;
  double mean_wall_time_ms = 0;
  /** NaN for graphs without edges. */
  double mean_modularity = 0;
  std::size_t aux_bytes = 0;
  /** Mean modularity over the exact variant's mean modularity. */
  double modularity_ratio = 0;
  std::vector<RunReport> runs;
};

struct BenchReport {
  std::string graph_name;
  std::size_t num_vertices = 0;
  std::size_t num_arcs = 0;
  std::size_t repeats = 0;
  LpaConfig config;
  std::vector<BenchRow> rows;
};

/**
 * Run every variant `repeats` times with the base config. The exact variant is
 * run as a reference even if not requested, but only requested rows are kept.
 */
BenchReport run_bench(std::string graph_name, const Graph& g, const LpaConfig& base, std::span<const Variant> variants, std::size_t repeats);

nlohmann::json bench_to_json(const BenchReport& b);
void write_bench_csv(std::ostream& out, const BenchReport& b);
void write_bench_text(std::ostream& out, const BenchReport& b);

}  // namespace mglpa
