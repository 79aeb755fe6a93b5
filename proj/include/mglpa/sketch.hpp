#pragma once
#include <atomic>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>
#include "mglpa/types.hpp"

namespace mglpa {

/**
 * How a weighted Misra-Gries sketch handles an item that matches no slot
 * while every slot is occupied.
 */
enum class DecrementRule {
  /** Subtract d = min(w, smallest residual) from every slot, then store (c, w - d) in a freed slot if w > d. */
  carry,
  /** Subtract w from every slot, clamped at zero; the item is dropped. */
  clamp,
};


/** How a weighted Boyer-Moore vote handles a rival at least as heavy as the candidate. */
enum class BmRule {
  /** Adopt the rival with the surplus w - weight. Keeps the strict-majority guarantee. */
  carry,
  /** Adopt the rival with its full weight w. */
  replace,
};


/**
 * Fixed-size weighted Misra-Gries heavy-hitter sketch over community labels.
 *
 * A slot is empty iff its value is zero. Non-empty slots hold distinct keys.
 * With the carry rule, any label whose total weight in the stream exceeds
 * W/(k+1) is guaranteed to occupy a slot, and every residual is a lower bound
 * on the label's true weight.
 */
class MgSketch {
 public:
  enum class Outcome { incremented, inserted, decremented };

  explicit MgSketch(std::size_t slots = 8, DecrementRule rule = DecrementRule::carry);

  std::size_t slots() const noexcept { return keys_.size(); }
  DecrementRule rule() const noexcept { return rule_; }
  std::span<const Vertex> keys() const noexcept { return keys_; }
  std::span<const Weight> values() const noexcept { return values_; }

  /** Number of non-empty slots. */
  std::size_t occupied() const noexcept;
  bool empty() const noexcept { return occupied() == 0; }

  /** Empty every slot. */
  void clear() noexcept;

  /** Feed one (label, weight) item, w > 0. */
  Outcome accumulate(Vertex c, Weight w);

  /** Feed every non-empty slot of src, in slot order, through accumulate(). */
  void merge(const MgSketch& src);

  /** Label of the heaviest non-empty slot (ties to the smaller label). */
  std::optional<Vertex> max_key() const noexcept;

  /** Zero all values while keeping the keys of non-empty slots as rescan candidates. */
  void clear_values() noexcept;

  /** Add w to the slot keyed c, if any; other labels are ignored. */
  void rescan_add(Vertex c, Weight w) noexcept;

  /** Residual weight of label c, if it occupies a slot. */
  std::optional<Weight> value_of(Vertex c) const noexcept;

  /** Non-empty (key, value) pairs sorted by key. */
  std::vector<std::pair<Vertex, Weight>> entries() const;

  static constexpr std::size_t bytes_per_slot = sizeof(Vertex) + sizeof(Weight);

 private:
  std::vector<Vertex> keys_;
  std::vector<Weight> values_;
  DecrementRule rule_;
};


/** Weighted Boyer-Moore majority vote state. */
struct BmState {
  Vertex candidate = 0;
  Weight weight = 0;

  /** Increment on match, decrement if still heavier, else adopt the newcomer. */
  void accumulate(Vertex c, Weight w, BmRule rule = BmRule::carry) noexcept {
    if (c == candidate) weight += w;
    else if (weight > w) weight -= w;
    else {
      candidate = c;
      weight = rule == BmRule::carry ? w - weight : w;
    }
  }

  friend bool operator==(const BmState&, const BmState&) = default;
};

/**
 * Pair-max combination of partial BM states: the heaviest state, ties to the
 * smaller candidate. Heuristic, not an exact merge of BM votes.
 * Throws std::invalid_argument on an empty list.
 */
BmState bm_reduce(std::span<const BmState> parts);




/**
 * MG sketch that several workers may accumulate into concurrently.
 * Every accumulate is applied under a per-sketch spinlock, so each concurrent
 * execution is equivalent to the sequential execution of the same updates in
 * lock-acquisition order. That order can be recorded for replay.
 */
class SharedMgSketch {
 public:
  explicit SharedMgSketch(std::size_t slots = 8, DecrementRule rule = DecrementRule::carry) : sketch_(slots, rule) {}

  void accumulate(Vertex c, Weight w);
  void clear() noexcept { sketch_.clear(); if (trace_) trace_->clear(); }

  /** Record applied updates in linearization order (nullptr to stop). */
  void set_trace(std::vector<std::pair<Vertex, Weight>>* trace) noexcept { trace_ = trace; }

  /** The underlying sketch; only valid to read when no accumulate is in flight. */
  const MgSketch& sketch() const noexcept { return sketch_; }
  MgSketch& sketch() noexcept { return sketch_; }

 private:
  MgSketch sketch_;
  std::atomic_flag lock_ = ATOMIC_FLAG_INIT;
  std::vector<std::pair<Vertex, Weight>>* trace_ = nullptr;
};

}  // namespace mglpa
