#include <omp.h>
#include "mglpa/lpa.hpp"
#include "lpa_kernels.hpp"

namespace mglpa {

// OpenMP kernel. Low-degree vertices are spread over workers, one vertex per
// worker at a time. High-degree vertices follow one by one, with their
// adjacency split into partial_groups chunks scanned by all workers.
std::size_t LpaMover::move_parallel(std::span<Vertex> labels, bool pickless, std::span<std::uint8_t> processed) {
  const Graph& g = graph_;
  const LpaConfig& cfg = cfg_;
  const std::size_t n = order_.size();
  const std::size_t groups = cfg.partial_groups;
  const bool shared = cfg.variant == Variant::mg && cfg.shared_sketch;
  SelectorWorkspace& group_ws = *workspaces_.front();
  std::size_t changed = 0;

  #pragma omp parallel num_threads(static_cast<int>(cfg.worker_count))
  {
    SelectorWorkspace& ws = *workspaces_[omp_get_thread_num()];
    std::size_t local = 0;
    #pragma omp for schedule(dynamic, 256) nowait
    for (std::size_t p = 0; p < n; ++p) {
      Vertex i = order_[p];
      if (detail::is_high_degree(g, i, cfg) || detail::is_processed(processed, i)) continue;
      detail::set_processed(processed, i, true);
      Vertex c = detail::select_label(g, labels, i, cfg, ws);
      local += detail::apply_move(g, labels, i, c, pickless, processed);
    }
    #pragma omp atomic
    changed += local;
    #pragma omp barrier

    for (std::size_t p = 0; p < n; ++p) {
      Vertex i = order_[p];
      if (!detail::is_high_degree(g, i, cfg) || detail::is_processed(processed, i)) continue;
      // Every worker read the flag above before the single block writes it.
      #pragma omp barrier
      const std::size_t degree = g.degree(i);
      if (cfg.variant == Variant::exact) {
        #pragma omp single
        {
          detail::set_processed(processed, i, true);
          Vertex c = select_label_exact(g, labels, i, group_ws);
          changed += detail::apply_move(g, labels, i, c, pickless, processed);
        }
        continue;
      }
      if (shared) {
        #pragma omp single
        shared_->clear();
      }
      #pragma omp for schedule(static)
      for (std::size_t q = 0; q < groups; ++q) {
        auto [begin, end] = chunk_range(degree, groups, q);
        if (cfg.variant == Variant::bm) group_ws.votes[q] = detail::scan_bm_range(g, labels, i, begin, end, cfg.bm_rule);
        else if (shared) detail::scan_mg_range(g, labels, i, begin, end, *shared_);
        else {
          group_ws.sketches[q].clear();
          detail::scan_mg_range(g, labels, i, begin, end, group_ws.sketches[q]);
        }
      }
      #pragma omp single
      {
        detail::set_processed(processed, i, true);
        Vertex c;
        if (cfg.variant == Variant::bm) c = bm_reduce(group_ws.votes).candidate;
        else {
          MgSketch& head = shared ? shared_->sketch() : group_ws.sketches.front();
          // Merge partial sketches into the first.
          if (!shared)
            for (std::size_t q = 1; q < groups; ++q) head.merge(group_ws.sketches[q]);
          c = detail::finish_mg(g, labels, i, cfg, head);
        }
        changed += detail::apply_move(g, labels, i, c, pickless, processed);
      }
    }
  }
  return changed;
}

}  // namespace mglpa
