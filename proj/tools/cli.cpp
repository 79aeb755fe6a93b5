#include "cli.hpp"
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>
#include "CLI11.hpp"
#include "mglpa/generate.hpp"
#include "mglpa/graph.hpp"
#include "mglpa/lpa.hpp"
#include "mglpa/report.hpp"

namespace mglpa::cli {
namespace {

struct GraphInput {
  std::string path;
  std::string format;  // mm | edgelist | "" (by extension)
  bool remap_ids = false;
};

struct ConfigFlags {
  std::string variant = "mg";
  std::string scan = "single";
  std::string mg_decrement = "carry";
  std::string bm_rule = "carry";
  std::string seed_order = "ascending";
  LpaConfig cfg;

  LpaConfig resolve() {
    LpaConfig c = cfg;
    c.variant = parse_variant(variant);
    c.scan_mode = parse_scan_mode(scan);
    c.mg_decrement = parse_decrement_rule(mg_decrement);
    c.bm_rule = parse_bm_rule(bm_rule);
    parse_seed_order(seed_order, c);
    c.validate();
    return c;
  }
};

void add_input(CLI::App& app, GraphInput& in) {
  app.add_option("input", in.path, "Graph file")->required();
  app.add_option("--format", in.format, "Input format: mm|edgelist (default: by extension)")->check(CLI::IsMember({"mm", "edgelist"}));
  app.add_flag("--remap-ids", in.remap_ids, "Remap sparse edge-list ids in first-seen order");
}

void add_config(CLI::App& app, ConfigFlags& f, bool with_variant) {
  if (with_variant) app.add_option("--variant", f.variant, "Label selector: exact|bm|mg");
  app.add_option("--k", f.cfg.sketch_slots, "MG sketch slots");
  app.add_option("--rho", f.cfg.pickless_gap, "Pick-less iteration gap");
  app.add_option("--tau", f.cfg.tolerance, "Convergence tolerance");
  app.add_option("--max-iters", f.cfg.max_iterations, "Maximum iterations");
  app.add_option("--degree-threshold", f.cfg.degree_threshold, "Degree at which vertices get partitioned processing");
  app.add_option("--groups", f.cfg.partial_groups, "Adjacency chunks per high-degree vertex");
  app.add_option("--scan", f.scan, "MG label choice: single|double");
  app.add_option("--workers", f.cfg.worker_count, "Parallel workers (0 = sequential)");
  app.add_option("--seed-order", f.seed_order, "Vertex order: ascending|shuffled:SEED");
  app.add_option("--mg-decrement", f.mg_decrement, "MG decrement rule: carry|clamp");
  app.add_option("--bm-rule", f.bm_rule, "BM rival-adoption rule: carry|replace");
  app.add_flag("--shared-sketch", f.cfg.shared_sketch, "One shared sketch per high-degree vertex instead of merged partial sketches");
}

Graph load(const GraphInput& in, std::vector<std::uint64_t>* id_map = nullptr) {
  GraphFormat fmt = in.format.empty() ? format_from_path(in.path)
                  : in.format == "mm" ? GraphFormat::matrix_market : GraphFormat::edge_list;
  LoadOptions options;
  options.remap_ids = in.remap_ids;
  return load_graph(in.path, fmt, options, id_map);
}

std::string graph_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }


int cmd_run(const GraphInput& in, ConfigFlags& flags, const std::string& report, const std::string& out_labels, std::ostream& out) {
  LpaConfig cfg = flags.resolve();
  std::vector<std::uint64_t> ids;
  Graph g = load(in, &ids);
  auto [rep, result] = timed_run(graph_name(in.path), g, cfg);
  if (report == "json") out << report_to_json(rep).dump(2) << '\n';
  else if (report == "csv") out << report_csv_header() << '\n' << report_csv_row(rep) << '\n';
  else write_report_text(out, rep);
  if (!out_labels.empty()) {
    std::ofstream file(out_labels);
    if (!file) throw GraphError("cannot write " + out_labels);
    auto name = [&](Vertex v) -> std::uint64_t { return ids.empty() ? v : ids[v]; };
    for (Vertex i = 0; i < result.labels.size(); ++i) file << name(i) << '\t' << name(result.labels[i]) << '\n';
  }
  return kSuccess;
}


int cmd_bench(const GraphInput& in, ConfigFlags& flags, const std::vector<std::string>& names, std::size_t repeats, const std::string& report, std::ostream& out) {
  LpaConfig cfg = flags.resolve();
  if (repeats == 0) throw ConfigError("--repeats must be >= 1");
  std::vector<Variant> variants;
  for (const auto& n : names) variants.push_back(parse_variant(n));
  if (variants.empty()) throw ConfigError("--variants needs at least one variant");
  Graph g = load(in);
  BenchReport bench = run_bench(graph_name(in.path), g, cfg, variants, repeats);
  if (report == "json") out << bench_to_json(bench).dump(2) << '\n';
  else if (report == "csv") write_bench_csv(out, bench);
  else write_bench_text(out, bench);
  return kSuccess;
}


void write_graph(const Graph& g, const std::string& to, const std::string& output, std::ostream& out) {
  GraphFormat fmt = to == "mm" ? GraphFormat::matrix_market : GraphFormat::edge_list;
  if (output.empty() || output == "-") {
    if (fmt == GraphFormat::matrix_market) write_matrix_market(out, g);
    else write_edge_list(out, g);
  }
  else save_graph(output, fmt, g);
}

}  // namespace


int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Memory-efficient label propagation with Misra-Gries and Boyer-Moore sketches", "mglpa"};
  app.require_subcommand(1);

  GraphInput in;
  ConfigFlags flags;
  std::string report = "text", out_labels, to = "edgelist", output;
  std::vector<std::string> variants{"exact", "bm", "mg"};
  std::size_t repeats = 5;

  auto* run = app.add_subcommand("run", "Detect communities in a graph");
  add_input(*run, in);
  add_config(*run, flags, true);
  run->add_option("--report", report, "Report format: json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  run->add_option("--out-labels", out_labels, "Write vertex<TAB>label lines to this file");

  auto* bench = app.add_subcommand("bench", "Compare variants on a graph");
  add_input(*bench, in);
  add_config(*bench, flags, false);
  bench->add_option("--variants", variants, "Variants to run")->delimiter(',');
  bench->add_option("--repeats", repeats, "Runs per variant");
  bench->add_option("--report", report, "Report format: json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* convert = app.add_subcommand("convert", "Rewrite a graph in canonical form");
  add_input(*convert, in);
  convert->add_option("--to", to, "Output format: edgelist|mm")->check(CLI::IsMember({"mm", "edgelist"}));
  convert->add_option("-o,--output", output, "Output file (default: stdout)");

  std::size_t communities = 10, block = 50, n = 100;
  double p_in = 0.3, p_out = 0.01, p = 0.05;
  std::uint64_t seed = 1;
  unsigned max_weight = 1;
  auto* generate = app.add_subcommand("generate", "Write a synthetic graph");
  generate->require_subcommand(1);
  auto* planted = generate->add_subcommand("planted", "Planted-partition graph");
  planted->add_option("--communities", communities);
  planted->add_option("--size", block, "Vertices per community");
  planted->add_option("--p-in", p_in);
  planted->add_option("--p-out", p_out);
  auto* random = generate->add_subcommand("random", "Erdos-Renyi graph");
  random->add_option("--n", n);
  random->add_option("--p", p);
  random->add_option("--max-weight", max_weight, "Weights drawn from 1..max-weight");
  for (auto* sub : {planted, random}) {
    sub->add_option("--seed", seed);
    sub->add_option("--to", to, "Output format: edgelist|mm")->check(CLI::IsMember({"mm", "edgelist"}));
    sub->add_option("-o,--output", output, "Output file (default: stdout)");
  }

  try {
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*run) return cmd_run(in, flags, report, out_labels, out);
    if (*bench) return cmd_bench(in, flags, variants, repeats, report, out);
    if (*convert) {
      write_graph(load(in), to, output, out);
      return kSuccess;
    }
    if (*planted) {
      if (!(p_in >= 0 && p_in <= 1 && p_out >= 0 && p_out <= 1)) throw ConfigError("probabilities must lie in [0, 1]");
      write_graph(planted_partition(communities, block, p_in, p_out, seed), to, output, out);
      return kSuccess;
    }
    if (*random) {
      if (!(p >= 0 && p <= 1)) throw ConfigError("probability must lie in [0, 1]");
      write_graph(random_graph(n, p, seed, max_weight), to, output, out);
      return kSuccess;
    }
  }
  catch (const ConfigError& e) {
    err << "mglpa: " << e.what() << '\n';
    return kUsageError;
  }
  catch (const std::exception& e) {
    err << "mglpa: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace mglpa::cli
