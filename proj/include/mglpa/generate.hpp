#pragma once
#include <cstddef>
#include <cstdint>
#include "mglpa/graph.hpp"

// Synthetic graphs for tests, benchmarks and demos.
namespace mglpa {

/**
 * Planted-partition graph: `communities` blocks of `block_size` consecutive
 * vertices; each pair inside a block is joined with probability p_in, each
 * pair across blocks with probability p_out. Unit weights.
 */
Graph planted_partition(std::size_t communities, std::size_t block_size, double p_in, double p_out, std::uint64_t seed);

/** Erdos-Renyi G(n, p); weights drawn uniformly from {1, ..., max_weight}. */
Graph random_graph(std::size_t n, double p, std::uint64_t seed, unsigned max_weight = 1);

}  // namespace mglpa
