#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hypex/hypergraph.hpp"
#include "hypex/node_set.hpp"

namespace hypex {

struct ProjectionOptions {
  // Refuse to build a projection whose upper bound on active subsets
  // (sum over hyperedges of C(|e|, n)) exceeds this.
  std::uint64_t max_subsets = 100'000'000;
};

// The n-projected graph. Its nodes are (n-1)-subsets ("facets"); every
// active n-subset S induces a clique of identical weight on its n facets,
// so only the active subsets and their weights are stored.
class ProjectedGraph {
 public:
  ProjectedGraph() = default;

  // `subsets` must be strictly increasing, each of size `order`, with a
  // positive weight at the same position.
  ProjectedGraph(std::size_t order, std::size_t node_count, std::vector<SubsetKey> subsets,
                 std::vector<Weight> weights);

  std::size_t order() const noexcept { return order_; }
  std::size_t node_count() const noexcept { return node_count_; }

  std::span<const SubsetKey> subsets() const noexcept { return subsets_; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  std::size_t subset_count() const noexcept { return subsets_.size(); }
  bool empty() const noexcept { return subsets_.empty(); }

  // Weight of an n-subset (0 when inactive). Throws on wrong cardinality.
  Weight subset_weight(std::span<const NodeId> sorted_subset) const;
  Weight subset_weight(const SubsetKey& subset) const { return subset_weight(subset.ids()); }

  // Facets adjacent to `facet`: every (n-1)-subset u with |u ∪ facet| = n
  // and u ∪ facet active. Sorted, duplicate-free.
  std::vector<SubsetKey> facet_neighbors(std::span<const NodeId> sorted_facet) const;
  std::vector<SubsetKey> facet_neighbors(const SubsetKey& facet) const {
    return facet_neighbors(facet.ids());
  }

  // Indices (into subsets()) of the active subsets that contain `facet`.
  std::span<const std::uint32_t> subsets_containing(const SubsetKey& facet) const;

  // Literal facet-pair edge count C(n,2) * |active subsets|.
  std::uint64_t edge_count() const noexcept;

  Weight total_weight() const noexcept;

  friend bool operator==(const ProjectedGraph& a, const ProjectedGraph& b) {
    return a.order_ == b.order_ && a.subsets_ == b.subsets_ && a.weights_ == b.weights_;
  }

 private:
  void build_facet_index();

  std::size_t order_ = 0;
  std::size_t node_count_ = 0;
  std::vector<SubsetKey> subsets_;
  std::vector<Weight> weights_;
  // CSR facet -> containing subsets.
  std::vector<SubsetKey> facets_;
  std::vector<std::size_t> facet_offsets_;
  std::vector<std::uint32_t> facet_members_;
};

// The n-order expansion (G_2, ..., G_n).
class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(std::vector<ProjectedGraph> graphs);

  std::size_t max_order() const noexcept { return graphs_.empty() ? 0 : graphs_.size() + 1; }
  bool empty() const noexcept { return graphs_.empty(); }
  const ProjectedGraph& graph(std::size_t order) const;
  const std::vector<ProjectedGraph>& graphs() const noexcept { return graphs_; }

 private:
  std::vector<ProjectedGraph> graphs_;
};

ProjectedGraph project(const Hypergraph& hg, std::size_t order,
                       const ProjectionOptions& options = {});

// Reference construction straight from the definition: all pairs of
// (n-1)-subsets of V, union size and containment tested directly. Only for
// tiny inputs; throws kResourceLimit when C(|V|, n-1) > max_facets.
ProjectedGraph project_bruteforce(const Hypergraph& hg, std::size_t order,
                                  std::uint64_t max_facets = 20'000);

Expansion expand(const Hypergraph& hg, std::size_t max_order,
                 const ProjectionOptions& options = {});

// Cache file: "n <order> <subset-count>" then "<ids...> <weight>" per line.
void write_projection(std::ostream& out, const ProjectedGraph& pg);
ProjectedGraph read_projection(std::istream& in, std::size_t node_count);

}  // namespace hypex
