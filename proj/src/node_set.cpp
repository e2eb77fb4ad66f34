#include "hypex/node_set.hpp"

#include <limits>

#include "hypex/error.hpp"

namespace hypex {

namespace {

// splitmix64 finalizer; stable across platforms, unlike std::hash.
std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t hash_ids(std::span<const NodeId> ids) noexcept {
  std::uint64_t h = mix(ids.size());
  for (NodeId id : ids) h = mix(h ^ id);
  return static_cast<std::size_t>(h);
}

}  // namespace

SubsetKey::SubsetKey(std::span<const NodeId> sorted_ids) {
  if (sorted_ids.size() > kMaxKeySize) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset of size " + std::to_string(sorted_ids.size()) +
                    " exceeds the maximum key size " + std::to_string(kMaxKeySize));
  }
  std::copy(sorted_ids.begin(), sorted_ids.end(), ids_.begin());
  size_ = static_cast<std::uint8_t>(sorted_ids.size());
}

SubsetKey SubsetKey::without(std::size_t position) const {
  SubsetKey out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i != position) out.ids_[j++] = ids_[i];
  }
  out.size_ = static_cast<std::uint8_t>(j);
  return out;
}

std::size_t SubsetKeyHash::operator()(const SubsetKey& key) const noexcept {
  return hash_ids(key.ids());
}

std::size_t NodeSetHash::operator()(const NodeSet& set) const noexcept {
  return hash_ids(set);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // result * num / i is exact at every step; guard the multiplication.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

bool is_strictly_sorted(std::span<const NodeId> ids) noexcept {
  return std::adjacent_find(ids.begin(), ids.end(), std::greater_equal<>()) == ids.end();
}

std::size_t union_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    ++count;
  }
  return count + (a.size() - i) + (b.size() - j);
}

}  // namespace hypex
