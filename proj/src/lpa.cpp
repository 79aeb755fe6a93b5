#include "mglpa/lpa.hpp"
#include <algorithm>
#include <numeric>
#include <random>

namespace mglpa {

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::exact: return "exact";
    case Variant::bm:    return "bm";
    case Variant::mg:    return "mg";
  }
  return "?";
}

std::string_view to_string(ScanMode m) noexcept { return m == ScanMode::single ? "single" : "double"; }
std::string_view to_string(DecrementRule r) noexcept { return r == DecrementRule::carry ? "carry" : "clamp"; }
std::string_view to_string(BmRule r) noexcept { return r == BmRule::carry ? "carry" : "replace"; }
std::string_view to_string(VertexOrder o) noexcept { return o == VertexOrder::ascending ? "ascending" : "shuffled"; }

Variant parse_variant(std::string_view s) {
  if (s == "exact") return Variant::exact;
  if (s == "bm") return Variant::bm;
  if (s == "mg") return Variant::mg;
  throw ConfigError("unknown variant '" + std::string(s) + "' (expected exact|bm|mg)");
}

ScanMode parse_scan_mode(std::string_view s) {
  if (s == "single") return ScanMode::single;
  if (s == "double") return ScanMode::double_scan;
  throw ConfigError("unknown scan mode '" + std::string(s) + "' (expected single|double)");
}

DecrementRule parse_decrement_rule(std::string_view s) {
  if (s == "carry") return DecrementRule::carry;
  if (s == "clamp") return DecrementRule::clamp;
  throw ConfigError("unknown decrement rule '" + std::string(s) + "' (expected carry|clamp)");
}

BmRule parse_bm_rule(std::string_view s) {
  if (s == "carry") return BmRule::carry;
  if (s == "replace") return BmRule::replace;
  throw ConfigError("unknown BM rule '" + std::string(s) + "' (expected carry|replace)");
}

VertexOrder parse_vertex_order(std::string_view s) {
  if (s == "ascending") return VertexOrder::ascending;
  if (s == "shuffled") return VertexOrder::shuffled;
  throw ConfigError("unknown vertex order '" + std::string(s) + "' (expected ascending|shuffled)");
}


void LpaConfig::validate() const {
  if (sketch_slots < 1) throw ConfigError("sketch_slots must be >= 1");
  if (pickless_gap < 1) throw ConfigError("pickless_gap must be >= 1");
  if (!(tolerance > 0 && tolerance < 1)) throw ConfigError("tolerance must be in (0, 1)");
  if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (degree_threshold < 1) throw ConfigError("degree_threshold must be >= 1");
  if (partial_groups < 1) throw ConfigError("partial_groups must be >= 1");
}


std::vector<Vertex> evaluation_order(std::size_t num_vertices, const LpaConfig& cfg) {
  std::vector<Vertex> order(num_vertices);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (cfg.order == VertexOrder::shuffled) {
    std::mt19937_64 rng(cfg.order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}


LpaMover::LpaMover(const Graph& g, const LpaConfig& cfg) : graph_(g), cfg_(cfg), order_(evaluation_order(g.num_vertices(), cfg)) {
  cfg_.validate();
  const std::size_t workers = std::max<std::size_t>(1, cfg_.worker_count);
  workspaces_.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) workspaces_.push_back(std::make_unique<SelectorWorkspace>(g, cfg_));
  if (cfg_.variant == Variant::mg && cfg_.shared_sketch)
    shared_ = std::make_unique<SharedMgSketch>(cfg_.sketch_slots, cfg_.mg_decrement);
}

LpaMover::~LpaMover() = default;


std::size_t LpaMover::move(std::span<Vertex> labels, bool pickless, std::span<std::uint8_t> processed) {
  if (labels.size() != graph_.num_vertices() || processed.size() != graph_.num_vertices())
    throw std::invalid_argument("labels and processed flags must have one entry per vertex");
  return cfg_.worker_count == 0 ? move_serial(labels, pickless, processed) : move_parallel(labels, pickless, processed);
}


std::size_t lpa_move(const Graph& g, std::span<Vertex> labels, const LpaConfig& cfg, bool pickless, std::span<std::uint8_t> processed) {
  LpaMover mover(g, cfg);
  return mover.move(labels, pickless, processed);
}


LpaResult lpa_run(const Graph& g, const LpaConfig& cfg, const IterationObserver& observer) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  LpaResult result;
  result.labels.resize(n);
  std::iota(result.labels.begin(), result.labels.end(), Vertex{0});
  result.aux_bytes = aux_memory_estimate(n, cfg);
  std::vector<std::uint8_t> processed(n, 0);
  std::vector<Vertex> before;
  LpaMover mover(g, cfg);
  for (std::size_t iteration = 0; iteration < cfg.max_iterations; ++iteration) {
    const bool pickless = iteration % cfg.pickless_gap == 0;
    if (observer) before = result.labels;
    std::size_t changed = mover.move(result.labels, pickless, processed);
    result.delta_history.push_back(changed);
    result.iterations = iteration + 1;
    if (observer) observer({iteration, pickless, changed, before, result.labels});
    if (!pickless && static_cast<double>(changed) < cfg.tolerance * static_cast<double>(n)) {
      result.converged = true;
      break;
    }
  }
  return result;
}


std::size_t aux_memory_estimate(std::size_t num_vertices, const LpaConfig& cfg) {
  const std::size_t workers = std::max<std::size_t>(1, cfg.worker_count);
  std::size_t bytes = num_vertices * sizeof(Vertex)  // labels
                    + num_vertices * sizeof(std::uint8_t)  // processed flags
                    + num_vertices * sizeof(Vertex)  // evaluation order
                    + workers * SelectorWorkspace::bytes(num_vertices, cfg)
                    + workers * sizeof(std::size_t);  // changed-vertex counters
  if (cfg.variant == Variant::mg && cfg.shared_sketch) bytes += cfg.sketch_slots * MgSketch::bytes_per_slot;
  return bytes;
}

std::size_t aux_memory_estimate(const Graph& g, const LpaConfig& cfg) {
  return aux_memory_estimate(g.num_vertices(), cfg);
}

}  // namespace mglpa
