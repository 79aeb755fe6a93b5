#include "mglpa/generate.hpp"
#include <random>
#include <vector>

namespace mglpa {

Graph planted_partition(std::size_t communities, std::size_t block_size, double p_in, double p_out, std::uint64_t seed) {
  const std::size_t n = communities * block_size;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution in(p_in), out(p_out);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      bool same = u / block_size == v / block_size;
      if (same ? in(rng) : out(rng)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), Weight(1)});
    }
  return Graph::from_edges(n, edges);
}


Graph random_graph(std::size_t n, double p, std::uint64_t seed, unsigned max_weight) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<unsigned> weight(1, std::max(1u, max_weight));
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Weight>(weight(rng))});
  return Graph::from_edges(n, edges);
}

}  // namespace mglpa
