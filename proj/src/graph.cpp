#include "mglpa/graph.hpp"
#include <algorithm>
#include <numeric>
#include <string>

namespace mglpa {

Graph Graph::from_edges(std::size_t num_vertices, std::span<const Edge> edges) {
  if (num_vertices >= kNoLabel) throw GraphError("too many vertices");
  // Count arcs per source, then scatter.
  std::vector<ArcIndex> counts(num_vertices + 1, 0);
  for (const auto& e : edges) {
    if (e.source >= num_vertices || e.target >= num_vertices)
      throw GraphError("edge (" + std::to_string(e.source) + ", " + std::to_string(e.target) + ") out of range");
    if (!(e.weight > 0)) throw GraphError("edge weight must be positive");
    ++counts[e.source + 1];
    if (e.source != e.target) ++counts[e.target + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  std::vector<std::pair<Vertex, Weight>> arcs(counts[num_vertices]);
  std::vector<ArcIndex> fill(counts.begin(), counts.end() - 1);
  for (const auto& e : edges) {
    arcs[fill[e.source]++] = {e.target, e.weight};
    if (e.source != e.target) arcs[fill[e.target]++] = {e.source, e.weight};
  }
  // Sort each neighbor list and merge parallel arcs.
  Graph g;
  g.offsets_.assign(num_vertices + 1, 0);
  g.targets_.reserve(arcs.size());
  g.weights_.reserve(arcs.size());
  for (std::size_t i = 0; i < num_vertices; ++i) {
    auto first = arcs.begin() + counts[i];
    auto last = arcs.begin() + counts[i + 1];
    std::sort(first, last, [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto it = first; it != last; ++it) {
      if (g.targets_.size() > g.offsets_[i] && g.targets_.back() == it->first) g.weights_.back() += it->second;
      else {
        g.targets_.push_back(it->first);
        g.weights_.push_back(it->second);
      }
    }
    g.offsets_[i + 1] = g.targets_.size();
  }
  return g;
}


Graph Graph::from_csr(std::vector<ArcIndex> offsets, std::vector<Vertex> targets, std::vector<Weight> weights) {
  if (offsets.empty() || offsets.front() != 0) throw GraphError("offsets must start at 0");
  if (offsets.back() != targets.size() || targets.size() != weights.size())
    throw GraphError("offsets/targets/weights size mismatch");
  const std::size_t n = offsets.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (offsets[i] > offsets[i + 1]) throw GraphError("offsets must be non-decreasing");
    for (ArcIndex a = offsets[i]; a < offsets[i + 1]; ++a) {
      if (targets[a] >= n) throw GraphError("arc target out of range");
      if (!(weights[a] > 0)) throw GraphError("arc weight must be positive");
      if (a > offsets[i] && targets[a - 1] >= targets[a]) throw GraphError("neighbor list not strictly sorted");
    }
  }
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  g.weights_ = std::move(weights);
  if (!g.is_symmetric()) throw GraphError("graph is not symmetric");
  return g;
}


bool Graph::is_symmetric() const {
  const std::size_t n = num_vertices();
  for (Vertex i = 0; i < n; ++i) {
    auto js = neighbors(i);
    auto ws = neighbor_weights(i);
    for (std::size_t t = 0; t < js.size(); ++t) {
      auto back = neighbors(js[t]);
      auto it = std::lower_bound(back.begin(), back.end(), i);
      if (it == back.end() || *it != i) return false;
      if (neighbor_weights(js[t])[it - back.begin()] != ws[t]) return false;
    }
  }
  return true;
}


double weighted_degree(const Graph& g, Vertex i) {
  double sum = 0;
  for (Weight w : g.neighbor_weights(i)) sum += w;
  return sum;
}


double total_weight(const Graph& g) {
  double sum = 0;
  for (Weight w : g.weights()) sum += w;
  return sum / 2;
}

}  // namespace mglpa
