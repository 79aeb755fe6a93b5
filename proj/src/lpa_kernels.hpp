#pragma once
#include <atomic>
#include <span>
#include "mglpa/lpa.hpp"

// Scan primitives shared by the serial and OpenMP move kernels.
namespace mglpa::detail {

// Labels and processed flags are read and written through relaxed atomics so
// that concurrent workers never observe torn values.
inline Vertex load_label(std::span<const Vertex> labels, Vertex j) noexcept {
  return std::atomic_ref<Vertex>(const_cast<Vertex&>(labels[j])).load(std::memory_order_relaxed);
}

inline void store_label(std::span<Vertex> labels, Vertex i, Vertex c) noexcept {
  std::atomic_ref<Vertex>(labels[i]).store(c, std::memory_order_relaxed);
}

inline bool is_processed(std::span<std::uint8_t> processed, Vertex i) noexcept {
  return std::atomic_ref<std::uint8_t>(processed[i]).load(std::memory_order_relaxed) != 0;
}

inline void set_processed(std::span<std::uint8_t> processed, Vertex i, bool value) noexcept {
  std::atomic_ref<std::uint8_t>(processed[i]).store(value ? 1 : 0, std::memory_order_relaxed);
}


template <class Sketch>
inline void scan_mg_range(const Graph& g, std::span<const Vertex> labels, Vertex i, std::size_t begin, std::size_t end, Sketch& sketch) {
  auto js = g.neighbors(i);
  auto ws = g.neighbor_weights(i);
  for (std::size_t t = begin; t < end; ++t) {
    if (js[t] == i) continue;
    sketch.accumulate(load_label(labels, js[t]), ws[t]);
  }
}


inline BmState scan_bm_range(const Graph& g, std::span<const Vertex> labels, Vertex i, std::size_t begin, std::size_t end, BmRule rule) {
  auto js = g.neighbors(i);
  auto ws = g.neighbor_weights(i);
  BmState st{load_label(labels, i), Weight()};
  for (std::size_t t = begin; t < end; ++t) {
    if (js[t] == i) continue;
    st.accumulate(load_label(labels, js[t]), ws[t], rule);
  }
  return st;
}


/** Rescan (if requested) and pick the label from a populated sketch. */
inline Vertex finish_mg(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg, MgSketch& sketch) {
  if (cfg.scan_mode == ScanMode::double_scan) {
    sketch.clear_values();
    auto js = g.neighbors(i);
    auto ws = g.neighbor_weights(i);
    for (std::size_t t = 0; t < js.size(); ++t) {
      if (js[t] == i) continue;
      sketch.rescan_add(load_label(labels, js[t]), ws[t]);
    }
  }
  auto best = sketch.max_key();
  return best ? *best : load_label(labels, i);
}


inline bool is_high_degree(const Graph& g, Vertex i, const LpaConfig& cfg) noexcept {
  return g.degree(i) >= cfg.degree_threshold;
}


/** Select a label for i with the configured variant. */
inline Vertex select_label(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg, SelectorWorkspace& ws) {
  switch (cfg.variant) {
    case Variant::exact: return select_label_exact(g, labels, i, ws);
    case Variant::bm:    return select_label_bm(g, labels, i, cfg, ws);
    case Variant::mg:    return select_label_mg(g, labels, i, cfg, ws);
  }
  return load_label(labels, i);
}


/** Apply a selected label; returns true if the vertex changed. */
inline bool apply_move(const Graph& g, std::span<Vertex> labels, Vertex i, Vertex c, bool pickless, std::span<std::uint8_t> processed) {
  Vertex current = load_label(labels, i);
  if (c == current || (pickless && c > current)) return false;
  store_label(labels, i, c);
  for (Vertex j : g.neighbors(i)) set_processed(processed, j, false);
  return true;
}

}  // namespace mglpa::detail
