#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hypex/node_set.hpp"

namespace hypex {

inline constexpr std::size_t kDefaultMaxHyperedgeSize = 10;

// Hyperedges as read from disk, before deduplication. Node ids are already
// remapped to 0..node_count-1; original_ids[i] is the file id of node i.
struct RawHyperedges {
  std::vector<NodeSet> edges;
  std::vector<std::uint64_t> original_ids;

  std::size_t node_count() const noexcept { return original_ids.size(); }
};

struct Hyperedge {
  NodeSet nodes;
  Weight weight = 1;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

// Weighted hypergraph with unique hyperedges. Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates every invariant (sorted, unique, |e| >= 2, weight >= 1,
  // ids < node_count) and throws Error otherwise.
  Hypergraph(std::size_t node_count, std::vector<Hyperedge> edges,
             std::vector<std::uint64_t> original_ids = {});

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_.at(i); }

  // Indices of hyperedges with the given cardinality (ascending).
  std::span<const std::size_t> edges_of_size(std::size_t size) const;
  const std::map<std::size_t, std::vector<std::size_t>>& size_index() const noexcept {
    return size_index_;
  }

  // Original file id of a node; identity when no mapping was recorded.
  std::uint64_t original_id(NodeId node) const;
  const std::vector<std::uint64_t>& original_ids() const noexcept { return original_ids_; }

  Weight total_weight() const noexcept;

 private:
  std::size_t node_count_ = 0;
  std::vector<Hyperedge> edges_;
  std::map<std::size_t, std::vector<std::size_t>> size_index_;
  std::vector<std::uint64_t> original_ids_;
};

// Published simplicial format: one cardinality per line in `nverts`, the
// flattened node ids in `simplices`. Hyperedges outside [2, max_size] are
// dropped; repeated ids inside one simplex are collapsed.
RawHyperedges parse_simplicial_dataset(std::istream& nverts, std::istream& simplices,
                                       std::size_t max_size = kDefaultMaxHyperedgeSize);

// One hyperedge per line, whitespace-separated ids, '#' starts a comment line.
RawHyperedges parse_edge_list(std::istream& in,
                              std::size_t max_size = kDefaultMaxHyperedgeSize);

// Collapses repeated node sets into one hyperedge weighted by multiplicity.
// Hyperedge order follows first occurrence.
Hypergraph dedup_and_weight(const RawHyperedges& raw);

// E minus the indexed hyperedges. The input is left untouched.
Hypergraph remove_hyperedges(const Hypergraph& hg, std::span<const std::size_t> indices);

enum class DatasetFormat { kSimplicial, kEdgeList };

DatasetFormat parse_dataset_format(const std::string& name);
std::string to_string(DatasetFormat format);

// `path` is either an edge-list file or, for the simplicial format, the
// dataset prefix `<dir>/<name>` (the `<name>-nverts.txt` path is accepted
// too). A `<name>-times.txt` file, if present, is ignored.
RawHyperedges read_dataset(const std::filesystem::path& path, DatasetFormat format,
                           std::size_t max_size = kDefaultMaxHyperedgeSize);

Hypergraph load_hypergraph(const std::filesystem::path& path, DatasetFormat format,
                           std::size_t max_size = kDefaultMaxHyperedgeSize);

}  // namespace hypex
