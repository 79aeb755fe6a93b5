#pragma once
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>
#include "mglpa/graph.hpp"
#include "mglpa/sketch.hpp"
#include "mglpa/types.hpp"

namespace mglpa {

/** Raised when an LpaConfig violates its invariants or cannot be parsed. */
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};


enum class Variant { exact, bm, mg };
enum class ScanMode { single, double_scan };
enum class VertexOrder { ascending, shuffled };

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(ScanMode m) noexcept;
std::string_view to_string(DecrementRule r) noexcept;
std::string_view to_string(BmRule r) noexcept;
std::string_view to_string(VertexOrder o) noexcept;
Variant parse_variant(std::string_view s);
ScanMode parse_scan_mode(std::string_view s);
DecrementRule parse_decrement_rule(std::string_view s);
BmRule parse_bm_rule(std::string_view s);
VertexOrder parse_vertex_order(std::string_view s);


/**
 * Options for label propagation.
 */
struct LpaConfig {
  /** Label selector [mg]. */
  Variant variant = Variant::mg;
  /** Pick the sketch max directly, or rescan for exact candidate weights (mg only) [single]. */
  ScanMode scan_mode = ScanMode::single;
  /** Slots per MG sketch, k [8]. */
  std::size_t sketch_slots = 8;
  /** Pick-less mode runs on iterations divisible by this gap, rho [8]. */
  std::size_t pickless_gap = 8;
  /** Converge once fewer than this fraction of vertices change, tau [0.05]. */
  double tolerance = 0.05;
  /** Maximum number of iterations [20]. */
  std::size_t max_iterations = 20;
  /** Vertices with at least this degree get partitioned processing, D_H [128]. */
  std::size_t degree_threshold = 128;
  /** Adjacency chunks (partial sketches / votes) per high-degree vertex, R_H [32]. */
  std::size_t partial_groups = 32;
  /** Parallel workers; 0 runs the sequential deterministic kernel [0]. */
  std::size_t worker_count = 0;
  /** High-degree mg vertices use one shared sketch instead of merged partial sketches [false]. */
  bool shared_sketch = false;
  /** MG decrement rule [carry]. */
  DecrementRule mg_decrement = DecrementRule::carry;
  /** BM rival-adoption rule [carry]. */
  BmRule bm_rule = BmRule::carry;
  /** Vertex evaluation order [ascending]. */
  VertexOrder order = VertexOrder::ascending;
  /** Seed for the shuffled order [0]. */
  std::uint64_t order_seed = 0;

  /** Throws ConfigError if any invariant fails. */
  void validate() const;

  friend bool operator==(const LpaConfig&, const LpaConfig&) = default;
};


struct LpaResult {
  /** Final community label of each vertex. */
  std::vector<Vertex> labels;
  /** Iterations performed. */
  std::size_t iterations = 0;
  /** Changed-vertex count of each iteration. */
  std::vector<std::size_t> delta_history;
  /** Whether the tolerance test ended the run early. */
  bool converged = false;
  /** Auxiliary working-set bytes (graph excluded). */
  std::size_t aux_bytes = 0;
};


/** Snapshot handed to an iteration observer after each move. */
struct IterationTrace {
  std::size_t iteration;
  bool pickless;
  std::size_t changed;
  std::span<const Vertex> before;
  std::span<const Vertex> after;
};

using IterationObserver = std::function<void(const IterationTrace&)>;




/**
 * Per-worker scratch space for label selection. Sized once from the graph
 * and config, reused for every vertex.
 */
class SelectorWorkspace {
 public:
  SelectorWorkspace(const Graph& g, const LpaConfig& cfg);

  /** Bytes this workspace allocates for the configured variant. */
  static std::size_t bytes(std::size_t num_vertices, const LpaConfig& cfg);

  std::vector<Weight> link_weight;   // exact: dense label -> weight map
  std::vector<Vertex> touched;       // exact: labels with non-zero weight
  std::vector<MgSketch> sketches;    // mg: one per adjacency chunk
  std::vector<BmState> votes;        // bm: one per adjacency chunk
};


/** Most weighted neighbor label (exact map), ties to the smaller label; C[i] if no neighbors. */
Vertex select_label_exact(const Graph& g, std::span<const Vertex> labels, Vertex i, SelectorWorkspace& ws);
Vertex select_label_exact(const Graph& g, std::span<const Vertex> labels, Vertex i);

/** Weighted Boyer-Moore majority candidate, partitioned for high-degree vertices. */
Vertex select_label_bm(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg, SelectorWorkspace& ws);
Vertex select_label_bm(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg);

/** Max-residual (single scan) or max-rescanned (double scan) label of the vertex's MG sketch. */
Vertex select_label_mg(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg, SelectorWorkspace& ws);
Vertex select_label_mg(const Graph& g, std::span<const Vertex> labels, Vertex i, const LpaConfig& cfg);

/** Contiguous [begin, end) arc range of chunk g out of `groups` for a vertex of the given degree. */
std::pair<std::size_t, std::size_t> chunk_range(std::size_t degree, std::size_t groups, std::size_t g) noexcept;




/**
 * Runs label-propagation moves over a fixed graph. Owns the evaluation order
 * and one selector workspace per worker.
 */
class LpaMover {
 public:
  LpaMover(const Graph& g, const LpaConfig& cfg);
  ~LpaMover();
  LpaMover(const LpaMover&) = delete;
  LpaMover& operator=(const LpaMover&) = delete;

  /**
   * Evaluate every unprocessed vertex once, adopting its selected label when
   * it differs (and is smaller, in pick-less mode); neighbors of changed
   * vertices are marked unprocessed.
   * @param labels community labels (updated in place)
   * @param pickless only allow moves to smaller labels
   * @param processed per-vertex processed flags (updated)
   * @returns number of vertices that changed label
   */
  std::size_t move(std::span<Vertex> labels, bool pickless, std::span<std::uint8_t> processed);

  std::span<const Vertex> order() const noexcept { return order_; }

 private:
  std::size_t move_serial(std::span<Vertex> labels, bool pickless, std::span<std::uint8_t> processed);
  std::size_t move_parallel(std::span<Vertex> labels, bool pickless, std::span<std::uint8_t> processed);

  const Graph& graph_;
  LpaConfig cfg_;
  std::vector<Vertex> order_;
  std::vector<Vertex> high_degree_;  // in evaluation order
  std::vector<std::unique_ptr<SelectorWorkspace>> workspaces_;
  std::unique_ptr<SharedMgSketch> shared_;
};


/** One move with a temporary mover; see LpaMover::move. */
std::size_t lpa_move(const Graph& g, std::span<Vertex> labels, const LpaConfig& cfg, bool pickless, std::span<std::uint8_t> processed);

/**
 * Label propagation from singleton labels C[i] = i. Pick-less mode runs on
 * every iteration divisible by pickless_gap; the run stops early once a
 * non-pick-less iteration changes fewer than tolerance * N labels.
 */
LpaResult lpa_run(const Graph& g, const LpaConfig& cfg, const IterationObserver& observer = {});

/** Bytes of all auxiliary allocations of lpa_run (graph excluded). */
std::size_t aux_memory_estimate(const Graph& g, const LpaConfig& cfg);
std::size_t aux_memory_estimate(std::size_t num_vertices, const LpaConfig& cfg);

/** Vertex evaluation order for the config. */
std::vector<Vertex> evaluation_order(std::size_t num_vertices, const LpaConfig& cfg);

}  // namespace mglpa
