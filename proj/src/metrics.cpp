#include "mglpa/metrics.hpp"
#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <omp.h>

namespace mglpa {
namespace {

void check_labels(const Graph& g, std::span<const Vertex> labels) {
  if (labels.size() != g.num_vertices()) throw std::invalid_argument("need one label per vertex");
  for (Vertex c : labels)
    if (c >= g.num_vertices()) throw std::invalid_argument("label out of range");
}

double modularity_from(std::span<const double> internal, std::span<const double> incident, double m) {
  double q = 0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    if (incident[c] == 0) continue;
    double a = incident[c] / (2 * m);
    q += internal[c] / (2 * m) - a * a;
  }
  return q;
}

}  // namespace


CommunityStats community_stats(const Graph& g, std::span<const Vertex> labels) {
  check_labels(g, labels);
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> sizes(n, 0);
  std::vector<double> internal(n, 0), incident(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    const Vertex c = labels[i];
    ++sizes[c];
    auto js = g.neighbors(i);
    auto ws = g.neighbor_weights(i);
    for (std::size_t t = 0; t < js.size(); ++t) {
      incident[c] += ws[t];
      if (labels[js[t]] == c) internal[c] += ws[t];
    }
  }
  CommunityStats stats;
  for (Vertex c = 0; c < n; ++c) {
    if (sizes[c] == 0) continue;
    stats.labels.push_back(c);
    stats.sizes.push_back(sizes[c]);
    stats.internal.push_back(internal[c]);
    stats.incident.push_back(incident[c]);
  }
  stats.num_communities = stats.labels.size();
  return stats;
}


double modularity(const Graph& g, std::span<const Vertex> labels) {
  const double m = total_weight(g);
  if (!(m > 0)) throw std::domain_error("modularity is undefined for a graph without edges");
  auto stats = community_stats(g, labels);
  return modularity_from(stats.internal, stats.incident, m);
}


double modularity_parallel(const Graph& g, std::span<const Vertex> labels, std::size_t workers) {
  check_labels(g, labels);
  const double m = total_weight(g);
  if (!(m > 0)) throw std::domain_error("modularity is undefined for a graph without edges");
  const std::size_t n = g.num_vertices();
  std::vector<double> internal(n, 0), incident(n, 0);
  #pragma omp parallel for schedule(dynamic, 1024) num_threads(static_cast<int>(std::max<std::size_t>(1, workers)))
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex c = labels[i];
    double in = 0, all = 0;
    auto js = g.neighbors(static_cast<Vertex>(i));
    auto ws = g.neighbor_weights(static_cast<Vertex>(i));
    for (std::size_t t = 0; t < js.size(); ++t) {
      all += ws[t];
      if (labels[js[t]] == c) in += ws[t];
    }
    std::atomic_ref<double>(internal[c]).fetch_add(in, std::memory_order_relaxed);
    std::atomic_ref<double>(incident[c]).fetch_add(all, std::memory_order_relaxed);
  }
  return modularity_from(internal, incident, m);
}

}  // namespace mglpa
