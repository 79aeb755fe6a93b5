#include "mglpa/lpa.hpp"
#include "lpa_kernels.hpp"

namespace mglpa {

// Sequential reference kernel: vertices in evaluation order, labels read in
// place so later vertices see earlier updates.
std::size_t LpaMover::move_serial(std::span<Vertex> labels, bool pickless, std::span<std::uint8_t> processed) {
  SelectorWorkspace& ws = *workspaces_.front();
  std::size_t changed = 0;
  for (Vertex i : order_) {
    if (detail::is_processed(processed, i)) continue;
    detail::set_processed(processed, i, true);
    Vertex c = detail::select_label(graph_, labels, i, cfg_, ws);
    changed += detail::apply_move(graph_, labels, i, c, pickless, processed);
  }
  return changed;
}

}  // namespace mglpa
