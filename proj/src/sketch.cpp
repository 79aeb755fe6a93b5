#include "mglpa/sketch.hpp"
#include <algorithm>
#include <stdexcept>

namespace mglpa {

MgSketch::MgSketch(std::size_t slots, DecrementRule rule) : keys_(slots, kNoLabel), values_(slots, Weight()), rule_(rule) {
  if (slots == 0) throw std::invalid_argument("sketch needs at least one slot");
}


std::size_t MgSketch::occupied() const noexcept {
  return std::count_if(values_.begin(), values_.end(), [](Weight v) { return v > 0; });
}


void MgSketch::clear() noexcept {
  std::fill(keys_.begin(), keys_.end(), kNoLabel);
  std::fill(values_.begin(), values_.end(), Weight());
}


MgSketch::Outcome MgSketch::accumulate(Vertex c, Weight w) {
  if (!(w > 0)) throw std::invalid_argument("accumulated weight must be positive");
  const std::size_t k = slots();
  std::size_t free = k;
  for (std::size_t s = 0; s < k; ++s) {
    if (values_[s] > 0) {
      if (keys_[s] == c) {
        values_[s] += w;
        return Outcome::incremented;
      }
    }
    else if (free == k) free = s;
  }
  if (free < k) {
    keys_[free] = c;
    values_[free] = w;
    return Outcome::inserted;
  }
  if (rule_ == DecrementRule::clamp) {
    for (auto& v : values_) v = v > w ? v - w : Weight();
    return Outcome::decremented;
  }
  Weight d = std::min(w, *std::min_element(values_.begin(), values_.end()));
  for (std::size_t s = 0; s < k; ++s) {
    // v == d leaves exactly zero; v > d stays positive.
    values_[s] -= d;
    if (values_[s] == 0 && free == k) free = s;
  }
  if (w > d) {
    keys_[free] = c;
    values_[free] = w - d;
  }
  return Outcome::decremented;
}


void MgSketch::merge(const MgSketch& src) {
  if (src.slots() != slots()) throw std::invalid_argument("cannot merge sketches with different slot counts");
  for (std::size_t s = 0; s < src.slots(); ++s)
    if (src.values_[s] > 0) accumulate(src.keys_[s], src.values_[s]);
}


std::optional<Vertex> MgSketch::max_key() const noexcept {
  std::optional<Vertex> best;
  Weight best_value = 0;
  for (std::size_t s = 0; s < slots(); ++s) {
    Weight v = values_[s];
    if (!(v > 0)) continue;
    if (!best || v > best_value || (v == best_value && keys_[s] < *best)) {
      best = keys_[s];
      best_value = v;
    }
  }
  return best;
}


void MgSketch::clear_values() noexcept {
  for (std::size_t s = 0; s < slots(); ++s) {
    if (!(values_[s] > 0)) keys_[s] = kNoLabel;
    values_[s] = 0;
  }
}


void MgSketch::rescan_add(Vertex c, Weight w) noexcept {
  if (c == kNoLabel) return;
  for (std::size_t s = 0; s < slots(); ++s)
    if (keys_[s] == c) values_[s] += w;
}


std::optional<Weight> MgSketch::value_of(Vertex c) const noexcept {
  for (std::size_t s = 0; s < slots(); ++s)
    if (values_[s] > 0 && keys_[s] == c) return values_[s];
  return std::nullopt;
}


std::vector<std::pair<Vertex, Weight>> MgSketch::entries() const {
  std::vector<std::pair<Vertex, Weight>> out;
  for (std::size_t s = 0; s < slots(); ++s)
    if (values_[s] > 0) out.emplace_back(keys_[s], values_[s]);
  std::sort(out.begin(), out.end());
  return out;
}


BmState bm_reduce(std::span<const BmState> parts) {
  if (parts.empty()) throw std::invalid_argument("bm_reduce needs at least one state");
  BmState best = parts.front();
  for (const auto& p : parts.subspan(1))
    if (p.weight > best.weight || (p.weight == best.weight && p.candidate < best.candidate)) best = p;
  return best;
}


void SharedMgSketch::accumulate(Vertex c, Weight w) {
  while (lock_.test_and_set(std::memory_order_acquire))
    while (lock_.test(std::memory_order_relaxed)) {}
  try {
    sketch_.accumulate(c, w);
    if (trace_) trace_->emplace_back(c, w);
  }
  catch (...) {
    lock_.clear(std::memory_order_release);
    throw;
  }
  lock_.clear(std::memory_order_release);
}

}  // namespace mglpa
