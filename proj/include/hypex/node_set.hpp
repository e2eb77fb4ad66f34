#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace hypex {

using NodeId = std::uint32_t;
using Weight = std::uint64_t;

// A sorted, duplicate-free sequence of node ids. Hyperedges and candidates
// use this form; projected-graph keys use the fixed-width SubsetKey below.
using NodeSet = std::vector<NodeId>;

// Largest subset a SubsetKey can hold. Bounds the maximum projection order.
inline constexpr std::size_t kMaxKeySize = 10;

// Fixed-width sorted id array. Unused slots stay zero so that defaulted
// comparison and hashing only depend on the logical contents.
class SubsetKey {
 public:
  SubsetKey() = default;
  explicit SubsetKey(std::span<const NodeId> sorted_ids);
  SubsetKey(std::initializer_list<NodeId> sorted_ids)
      : SubsetKey(std::span<const NodeId>(sorted_ids.begin(), sorted_ids.size())) {}

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  NodeId operator[](std::size_t i) const noexcept { return ids_[i]; }
  const NodeId* begin() const noexcept { return ids_.data(); }
  const NodeId* end() const noexcept { return ids_.data() + size_; }
  std::span<const NodeId> ids() const noexcept { return {ids_.data(), size_}; }

  // Key with the element at `position` removed.
  SubsetKey without(std::size_t position) const;
  NodeSet to_node_set() const { return NodeSet(begin(), end()); }

  friend bool operator==(const SubsetKey&, const SubsetKey&) = default;
  friend std::strong_ordering operator<=>(const SubsetKey& a, const SubsetKey& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<NodeId, kMaxKeySize> ids_{};
  std::uint8_t size_ = 0;
};

struct SubsetKeyHash {
  std::size_t operator()(const SubsetKey& key) const noexcept;
};

struct NodeSetHash {
  std::size_t operator()(const NodeSet& set) const noexcept;
};

// n choose k; saturates at UINT64_MAX instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

bool is_strictly_sorted(std::span<const NodeId> ids) noexcept;

// |a ∪ b| for two sorted ranges.
std::size_t union_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept;

// Calls fn(span) for every k-combination of `items` in lexicographic order of
// positions. The span is only valid during the call.
template <typename Fn>
void for_each_combination(std::span<const NodeId> items, std::size_t k, Fn&& fn) {
  const std::size_t n = items.size();
  if (k > n) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<NodeId> current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) current[i] = items[pos[i]];
    fn(std::span<const NodeId>(current));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace hypex
