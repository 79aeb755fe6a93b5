#pragma once
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>
#include "mglpa/types.hpp"

namespace mglpa {

/** Raised on malformed input, invalid CSR arrays, or unreadable files. */
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};


/** One undirected input edge. */
struct Edge {
  Vertex source;
  Vertex target;
  Weight weight;
};


/**
 * Undirected weighted graph in CSR form.
 * Every arc (i, j, w) has a reverse arc (j, i, w); neighbor lists are sorted
 * by target id; self-loops are stored as a single arc.
 * Immutable after construction, safe for concurrent reads.
 */
class Graph {
 public:
  Graph() : offsets_{0} {}

  /**
   * Build from undirected edges: each edge contributes both directions
   * (one arc for a self-loop), parallel arcs are merged by summing weights.
   * @param num_vertices vertex count; every endpoint must be below it
   * @param edges input edges, weights must be positive
   */
  static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edges);

  /** Adopt CSR arrays as-is after checking shape, sorting and symmetry. */
  static Graph from_csr(std::vector<ArcIndex> offsets, std::vector<Vertex> targets, std::vector<Weight> weights);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_arcs() const noexcept { return targets_.size(); }
  std::size_t degree(Vertex i) const noexcept { return offsets_[i + 1] - offsets_[i]; }

  std::span<const Vertex> neighbors(Vertex i) const noexcept {
    return {targets_.data() + offsets_[i], degree(i)};
  }
  std::span<const Weight> neighbor_weights(Vertex i) const noexcept {
    return {weights_.data() + offsets_[i], degree(i)};
  }

  std::span<const ArcIndex> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> targets() const noexcept { return targets_; }
  std::span<const Weight> weights() const noexcept { return weights_; }

  /** True if every arc has a reverse arc of equal weight. */
  bool is_symmetric() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<ArcIndex> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Weight> weights_;
};


/** Weighted degree K_i, self-loop arcs included. */
double weighted_degree(const Graph& g, Vertex i);

/** Total edge weight m, half the sum of all arc weights. */
double total_weight(const Graph& g);




enum class GraphFormat { matrix_market, edge_list };

struct LoadOptions {
  /** Remap edge-list ids densely in first-seen order. */
  bool remap_ids = false;
};

/** Guess the format from a file extension (.mtx is MatrixMarket). */
GraphFormat format_from_path(const std::filesystem::path& path);

/**
 * Read a whitespace-separated `src dst [weight]` edge list.
 * Lines starting with `#` or `%` are comments; a `# vertices N` comment sets
 * a minimum vertex count.
 * @param id_map original id of each vertex, filled when remapping (optional)
 */
Graph read_edge_list(std::istream& in, const LoadOptions& options = {}, std::vector<std::uint64_t>* id_map = nullptr);

/** Read a MatrixMarket coordinate file (pattern/real/integer, general/symmetric). */
Graph read_matrix_market(std::istream& in);

Graph load_graph(const std::filesystem::path& path, GraphFormat format, const LoadOptions& options = {}, std::vector<std::uint64_t>* id_map = nullptr);

/** Canonical edge list: one line per undirected edge (i <= j), 6 significant digits. */
void write_edge_list(std::ostream& out, const Graph& g);

/** Canonical MatrixMarket: real symmetric, lower triangle, 1-based. */
void write_matrix_market(std::ostream& out, const Graph& g);

void save_graph(const std::filesystem::path& path, GraphFormat format, const Graph& g);

}  // namespace mglpa
