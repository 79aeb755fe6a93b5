#pragma once
#include <cstddef>
#include <span>
#include <vector>
#include "mglpa/graph.hpp"

namespace mglpa {

/**
 * Per-community aggregates of a labeling, communities in ascending label order.
 */
struct CommunityStats {
  std::size_t num_communities = 0;
  /** Label of each community. */
  std::vector<Vertex> labels;
  /** Vertex count of each community. */
  std::vector<std::size_t> sizes;
  /** Internal arc weight, both directions counted (sigma_c). */
  std::vector<double> internal;
  /** Total arc weight incident to the community (Sigma_c). */
  std::vector<double> incident;
};

/** One pass over the arcs. Labels must lie in [0, N). */
CommunityStats community_stats(const Graph& g, std::span<const Vertex> labels);

/**
 * Modularity Q = sum_c [sigma_c / 2m - (Sigma_c / 2m)^2], accumulated in
 * 64-bit. Throws std::domain_error on a graph without edges.
 */
double modularity(const Graph& g, std::span<const Vertex> labels);

/** Same as modularity(), with the arc pass split over OpenMP workers. */
double modularity_parallel(const Graph& g, std::span<const Vertex> labels, std::size_t workers);

}  // namespace mglpa
