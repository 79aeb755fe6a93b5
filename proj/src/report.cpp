#include "mglpa/report.hpp"
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include "mglpa/metrics.hpp"

namespace mglpa {
using nlohmann::json;

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string join_history(const std::vector<std::size_t>& h) {
  std::string out;
  for (std::size_t t = 0; t < h.size(); ++t) {
    if (t) out += ';';
    out += std::to_string(h[t]);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace


std::string seed_order_string(const LpaConfig& cfg) {
  if (cfg.order == VertexOrder::ascending) return "ascending";
  return "shuffled:" + std::to_string(cfg.order_seed);
}


void parse_seed_order(std::string_view s, LpaConfig& cfg) {
  if (s == "ascending") {
    cfg.order = VertexOrder::ascending;
    cfg.order_seed = 0;
    return;
  }
  constexpr std::string_view prefix = "shuffled:";
  if (s.substr(0, prefix.size()) == prefix) {
    auto digits = s.substr(prefix.size());
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) {
      cfg.order = VertexOrder::shuffled;
      cfg.order_seed = seed;
      return;
    }
  }
  throw ConfigError("invalid seed order '" + std::string(s) + "' (expected ascending|shuffled:SEED)");
}


json config_to_json(const LpaConfig& cfg) {
  return {
    {"variant", to_string(cfg.variant)},
    {"scan_mode", to_string(cfg.scan_mode)},
    {"sketch_slots", cfg.sketch_slots},
    {"pickless_gap", cfg.pickless_gap},
    {"tolerance", cfg.tolerance},
    {"max_iterations", cfg.max_iterations},
    {"degree_threshold", cfg.degree_threshold},
    {"partial_groups", cfg.partial_groups},
    {"worker_count", cfg.worker_count},
    {"shared_sketch", cfg.shared_sketch},
    {"mg_decrement", to_string(cfg.mg_decrement)},
    {"bm_rule", to_string(cfg.bm_rule)},
    {"seed_order", seed_order_string(cfg)},
  };
}


LpaConfig config_from_json(const json& j) {
  try {
    LpaConfig cfg;
    cfg.variant = parse_variant(j.at("variant").get<std::string>());
    cfg.scan_mode = parse_scan_mode(j.at("scan_mode").get<std::string>());
    cfg.sketch_slots = j.at("sketch_slots").get<std::size_t>();
    cfg.pickless_gap = j.at("pickless_gap").get<std::size_t>();
    cfg.tolerance = j.at("tolerance").get<double>();
    cfg.max_iterations = j.at("max_iterations").get<std::size_t>();
    cfg.degree_threshold = j.at("degree_threshold").get<std::size_t>();
    cfg.partial_groups = j.at("partial_groups").get<std::size_t>();
    cfg.worker_count = j.at("worker_count").get<std::size_t>();
    cfg.shared_sketch = j.at("shared_sketch").get<bool>();
    cfg.mg_decrement = parse_decrement_rule(j.at("mg_decrement").get<std::string>());
    cfg.bm_rule = parse_bm_rule(j.at("bm_rule").get<std::string>());
    parse_seed_order(j.at("seed_order").get<std::string>(), cfg);
    return cfg;
  }
  catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}


RunReport make_report(std::string graph_name, const Graph& g, const LpaConfig& cfg, const LpaResult& result, double wall_time_ms) {
  RunReport r;
  r.graph_name = std::move(graph_name);
  r.num_vertices = g.num_vertices();
  r.num_arcs = g.num_arcs();
  r.config = cfg;
  r.iterations = result.iterations;
  r.converged = result.converged;
  r.delta_history = result.delta_history;
  if (total_weight(g) > 0) r.modularity = modularity(g, result.labels);
  r.num_communities = community_stats(g, result.labels).num_communities;
  r.wall_time_ms = wall_time_ms;
  r.aux_bytes = result.aux_bytes;
  return r;
}


std::pair<RunReport, LpaResult> timed_run(std::string graph_name, const Graph& g, const LpaConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  LpaResult result = lpa_run(g, cfg);
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  RunReport report = make_report(std::move(graph_name), g, cfg, result, ms);
  return {std::move(report), std::move(result)};
}


json report_to_json(const RunReport& r) {
  return {
    {"schema_version", kReportSchemaVersion},
    {"graph_name", r.graph_name},
    {"num_vertices", r.num_vertices},
    {"num_arcs", r.num_arcs},
    {"config", config_to_json(r.config)},
    {"iterations", r.iterations},
    {"converged", r.converged},
    {"delta_history", r.delta_history},
    {"modularity", r.modularity ? json(*r.modularity) : json(nullptr)},
    {"num_communities", r.num_communities},
    {"wall_time_ms", r.wall_time_ms},
    {"aux_bytes", r.aux_bytes},
  };
}


RunReport report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw ConfigError("unsupported report schema version");
    RunReport r;
    r.graph_name = j.at("graph_name").get<std::string>();
    r.num_vertices = j.at("num_vertices").get<std::size_t>();
    r.num_arcs = j.at("num_arcs").get<std::size_t>();
    r.config = config_from_json(j.at("config"));
    r.iterations = j.at("iterations").get<std::size_t>();
    r.converged = j.at("converged").get<bool>();
    r.delta_history = j.at("delta_history").get<std::vector<std::size_t>>();
    if (!j.at("modularity").is_null()) r.modularity = j.at("modularity").get<double>();
    r.num_communities = j.at("num_communities").get<std::size_t>();
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    r.aux_bytes = j.at("aux_bytes").get<std::size_t>();
    return r;
  }
  catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}


std::string report_csv_header() {
  return "schema_version,graph_name,num_vertices,num_arcs,variant,scan_mode,sketch_slots,pickless_gap,tolerance,"
         "max_iterations,degree_threshold,partial_groups,worker_count,shared_sketch,mg_decrement,bm_rule,seed_order,"
         "iterations,converged,delta_history,modularity,num_communities,wall_time_ms,aux_bytes";
}


std::string report_csv_row(const RunReport& r) {
  const LpaConfig& c = r.config;
  std::ostringstream out;
  out << kReportSchemaVersion << ',' << csv_escape(r.graph_name) << ',' << r.num_vertices << ',' << r.num_arcs << ','
      << to_string(c.variant) << ',' << to_string(c.scan_mode) << ',' << c.sketch_slots << ',' << c.pickless_gap << ','
      << format_double(c.tolerance) << ',' << c.max_iterations << ',' << c.degree_threshold << ',' << c.partial_groups << ','
      << c.worker_count << ',' << (c.shared_sketch ? "true" : "false") << ',' << to_string(c.mg_decrement) << ',' << to_string(c.bm_rule) << ','
      << seed_order_string(c) << ',' << r.iterations << ',' << (r.converged ? "true" : "false") << ','
      << join_history(r.delta_history) << ',' << (r.modularity ? format_double(*r.modularity) : "") << ','
      << r.num_communities << ',' << format_double(r.wall_time_ms) << ',' << r.aux_bytes;
  return out.str();
}


void write_report_text(std::ostream& out, const RunReport& r) {
  const LpaConfig& c = r.config;
  out << "graph        " << r.graph_name << " (N=" << r.num_vertices << ", M=" << r.num_arcs << ")\n";
  out << "variant      " << to_string(c.variant);
  if (c.variant == Variant::mg) out << " k=" << c.sketch_slots << " scan=" << to_string(c.scan_mode);
  out << " workers=" << c.worker_count << "\n";
  out << "iterations   " << r.iterations << (r.converged ? " (converged)" : " (not converged)") << "\n";
  out << "changed      " << join_history(r.delta_history) << "\n";
  out << "modularity   " << (r.modularity ? format_double(*r.modularity) : "n/a") << "\n";
  out << "communities  " << r.num_communities << "\n";
  out << "time         " << r.wall_time_ms << " ms\n";
  out << "aux memory   " << r.aux_bytes << " bytes\n";
}




BenchReport run_bench(std::string graph_name, const Graph& g, const LpaConfig& base, std::span<const Variant> variants, std::size_t repeats) {
  if (repeats == 0) throw ConfigError("repeats must be >= 1");
  base.validate();
  BenchReport bench;
  bench.graph_name = graph_name;
  bench.num_vertices = g.num_vertices();
  bench.num_arcs = g.num_arcs();
  bench.repeats = repeats;
  bench.config = base;

  auto run_variant = [&](Variant v) {
    BenchRow row;
    row.variant = v;
    row.repeats = repeats;
    LpaConfig cfg = base;
    cfg.variant = v;
    double time_sum = 0, q_sum = 0;
    for (std::size_t r = 0; r < repeats; ++r) {
      auto [report, result] = timed_run(graph_name, g, cfg);
      time_sum += report.wall_time_ms;
      q_sum += report.modularity.value_or(std::numeric_limits<double>::quiet_NaN());
      row.aux_bytes = report.aux_bytes;
      row.runs.push_back(std::move(report));
    }
    row.mean_wall_time_ms = time_sum / repeats;
    row.mean_modularity = q_sum / repeats;
    return row;
  };

  std::optional<BenchRow> reference;
  for (Variant v : variants) {
    bench.rows.push_back(run_variant(v));
    if (v == Variant::exact && !reference) reference = bench.rows.back();
  }
  if (!reference) reference = run_variant(Variant::exact);
  for (auto& row : bench.rows) row.modularity_ratio = row.mean_modularity / reference->mean_modularity;
  return bench;
}


json bench_to_json(const BenchReport& b) {
  json rows = json::array();
  for (const auto& row : b.rows) {
    json runs = json::array();
    for (const auto& r : row.runs) runs.push_back(report_to_json(r));
    rows.push_back({
      {"variant", to_string(row.variant)},
      {"repeats", row.repeats},
      {"mean_wall_time_ms", row.mean_wall_time_ms},
      {"mean_modularity", std::isnan(row.mean_modularity) ? json(nullptr) : json(row.mean_modularity)},
      {"aux_bytes", row.aux_bytes},
      {"modularity_ratio", std::isnan(row.modularity_ratio) ? json(nullptr) : json(row.modularity_ratio)},
      {"runs", runs},
    });
  }
  return {
    {"schema_version", kReportSchemaVersion},
    {"graph_name", b.graph_name},
    {"num_vertices", b.num_vertices},
    {"num_arcs", b.num_arcs},
    {"repeats", b.repeats},
    {"config", config_to_json(b.config)},
    {"rows", rows},
  };
}


void write_bench_csv(std::ostream& out, const BenchReport& b) {
  out << "graph_name,num_vertices,num_arcs,variant,repeats,mean_wall_time_ms,mean_modularity,aux_bytes,modularity_ratio\n";
  for (const auto& row : b.rows)
    out << csv_escape(b.graph_name) << ',' << b.num_vertices << ',' << b.num_arcs << ',' << to_string(row.variant) << ','
        << row.repeats << ',' << format_double(row.mean_wall_time_ms) << ',' << format_double(row.mean_modularity) << ','
        << row.aux_bytes << ',' << format_double(row.modularity_ratio) << '\n';
}


void write_bench_text(std::ostream& out, const BenchReport& b) {
  out << "graph " << b.graph_name << " (N=" << b.num_vertices << ", M=" << b.num_arcs << "), " << b.repeats << " repeats\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-8s %14s %12s %14s %10s\n", "variant", "time_ms", "modularity", "aux_bytes", "Q/Q_exact");
  out << line;
  for (const auto& row : b.rows) {
    std::snprintf(line, sizeof(line), "%-8s %14.3f %12.6f %14zu %10.4f\n", std::string(to_string(row.variant)).c_str(),
                  row.mean_wall_time_ms, row.mean_modularity, row.aux_bytes, row.modularity_ratio);
    out << line;
  }
}

}  // namespace mglpa
