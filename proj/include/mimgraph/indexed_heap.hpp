#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "mimgraph/cost_model.hpp"

namespace mimgraph {

/// Binary min-heap over dense integer ids with decrease-key. Entries are
/// ordered by (key, id), so equal keys pop in id order.
class IndexedHeap {
 public:
  using Id = std::uint32_t;

  explicit IndexedHeap(std::size_t capacity) : pos_(capacity, kAbsent) {}

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(Id id) const { return pos_[id] != kAbsent; }

  Id top() const { return heap_.front().second; }
  Cost top_key() const { return heap_.front().first; }
  Cost key(Id id) const { return heap_[pos_[id]].first; }

  void insert(Id id, Cost key) {
    assert(!contains(id));
    heap_.emplace_back(key, id);
    pos_[id] = static_cast<std::uint32_t>(heap_.size() - 1);
    sift_up(heap_.size() - 1);
  }

  void decrease_key(Id id, Cost key) {
    assert(contains(id) && key <= this->key(id));
    const std::size_t i = pos_[id];
    heap_[i].first = key;
    sift_up(i);
  }

  Id pop() {
    const Id id = heap_.front().second;
    swap_at(0, heap_.size() - 1);
    heap_.pop_back();
    pos_[id] = kAbsent;
    if (!heap_.empty()) sift_down(0);
    return id;
  }

 private:
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
  using Entry = std::pair<Cost, Id>;

  void swap_at(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i].second] = static_cast<std::uint32_t>(i);
    pos_[heap_[j].second] = static_cast<std::uint32_t>(j);
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!(heap_[i] < heap_[parent])) break;
      swap_at(i, parent);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      const std::size_t l = 2 * i + 1;
      const std::size_t r = l + 1;
      std::size_t best = i;
      if (l < heap_.size() && heap_[l] < heap_[best]) best = l;
      if (r < heap_.size() && heap_[r] < heap_[best]) best = r;
      if (best == i) return;
      swap_at(i, best);
      i = best;
    }
  }

  std::vector<Entry> heap_;
  std::vector<std::uint32_t> pos_;
};

}  // namespace mimgraph
