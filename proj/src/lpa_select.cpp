#include <algorithm>
#include "mglpa/lpa.hpp"
#include "lpa_kernels.hpp"

namespace mglpa {
using detail::load_label;

SelectorWorkspace::SelectorWorkspace(const Graph& g, const LpaConfig& cfg) {
  switch (cfg.variant) {
    case Variant::exact:
      link_weight.assign(g.num_vertices(), Weight());
      touched.reserve(g.num_vertices());
      break;
    case Variant::mg:
      sketches.assign(cfg.partial_groups, MgSketch(cfg.sketch_slots, cfg.mg_decrement));
      break;
    case Variant::bm:
      votes.assign(cfg.partial_groups, BmState{});
      break;
  }
}


std::size_t SelectorWorkspace::bytes(std::size_t num_vertices, const LpaConfig& cfg) {
  switch (cfg.variant) {
    case Variant::exact: return num_vertices * (sizeof(Weight) + sizeof(Vertex));
    case Variant::mg:    return cfg.partial_groups * cfg.sketch_slots * MgSketch::bytes_per_slot;
    case Variant::bm:    return cfg.partial_groups * sizeof(BmState);
  }
  return 0;
}


std::pair<std::size_t, std::size_t> chunk_range(std::size_t degree, std::size_t groups, std::size_t g) noexcept {
  return {degree * g / groups, degree * (g + 1) / groups};
}


Vertex select_label_exact(const Graph& g, std::span<const Vertex> labels, Vertex i, SelectorWorkspace& ws) {
  auto js = g.neighbors(i);
  auto wts = g.neighbor_weights(i);
  for (std::size_t t = 0; t < js.size(); ++t) {
    if (js[t] == i) continue;
    Vertex c = load_label(labels, js[t]);
    if (ws.link_weight[c] == 0) ws.touched.push_back(c);
    ws.link_weight[c] += wts[t];
  }
  Vertex best = load_label(labels, i);
  Weight best_weight = 0;
  for (Vertex c : ws.touched) {
    Weight w = ws.link_weight[c];
    if (w > best_weight || (w == best_weight && c < best)) {
      best = c;
      best_weight = w;
    }
    ws.link_weight[c] = 0;
  }
  ws.touched.clear();
  return best;
}


Vertex select_label_bm(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg, SelectorWorkspace& ws) {
  const std::size_t degree = g.degree(i);
  if (!detail::is_high_degree(g, i, cfg)) return detail::scan_bm_range(g, labels, i, 0, degree, cfg.bm_rule).candidate;
  for (std::size_t p = 0; p < cfg.partial_groups; ++p) {
    auto [begin, end] = chunk_range(degree, cfg.partial_groups, p);
    ws.votes[p] = detail::scan_bm_range(g, labels, i, begin, end, cfg.bm_rule);
  }
  return bm_reduce(ws.votes).candidate;
}


Vertex select_label_mg(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg, SelectorWorkspace& ws) {
  const std::size_t degree = g.degree(i);
  MgSketch& head = ws.sketches.front();
  head.clear();
  if (!detail::is_high_degree(g, i, cfg) || cfg.shared_sketch) {
    // One sketch over the whole adjacency; for the shared-sketch mode this is
    // the sequential linearization of the concurrent updates.
    detail::scan_mg_range(g, labels, i, 0, degree, head);
  }
  else {
    for (std::size_t p = 0; p < cfg.partial_groups; ++p) {
      auto [begin, end] = chunk_range(degree, cfg.partial_groups, p);
      if (p > 0) ws.sketches[p].clear();
      detail::scan_mg_range(g, labels, i, begin, end, ws.sketches[p]);
    }
    // Merge partial sketches into the first.
    for (std::size_t p = 1; p < cfg.partial_groups; ++p) head.merge(ws.sketches[p]);
  }
  return detail::finish_mg(g, labels, i, cfg, head);
}


Vertex select_label_exact(const Graph& g, std::span<const Vertex> labels, Vertex i) {
  LpaConfig cfg;
  cfg.variant = Variant::exact;
  SelectorWorkspace ws(g, cfg);
  return select_label_exact(g, labels, i, ws);
}

Vertex select_label_bm(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg) {
  LpaConfig c = cfg;
  c.variant = Variant::bm;
  SelectorWorkspace ws(g, c);
  return select_label_bm(g, labels, i, c, ws);
}

Vertex select_label_mg(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg) {
  LpaConfig c = cfg;
  c.variant = Variant::mg;
  SelectorWorkspace ws(g, c);
  return select_label_mg(g, labels, i, c, ws);
}

}  // namespace mglpa
