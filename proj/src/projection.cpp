#include "hypex/projection.hpp"

#include <tbb/blocked_range.h>
#include <tbb/parallel_reduce.h>

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "hypex/error.hpp"

namespace hypex {

namespace {

using WeightMap = std::unordered_map<SubsetKey, Weight, SubsetKeyHash>;

void check_order(std::size_t order) {
  if (order < 2) throw Error(ErrorCode::kInvalidArgument, "projection order must be >= 2");
  if (order > kMaxKeySize) {
    throw Error(ErrorCode::kInvalidArgument,
                "projection order " + std::to_string(order) + " exceeds the supported maximum " +
                    std::to_string(kMaxKeySize));
  }
}

ProjectedGraph from_map(std::size_t order, std::size_t node_count, const WeightMap& map) {
  std::vector<std::pair<SubsetKey, Weight>> entries(map.begin(), map.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SubsetKey> subsets;
  std::vector<Weight> weights;
  subsets.reserve(entries.size());
  weights.reserve(entries.size());
  for (auto& [key, w] : entries) {
    subsets.push_back(key);
    weights.push_back(w);
  }
  return ProjectedGraph(order, node_count, std::move(subsets), std::move(weights));
}

}  // namespace

ProjectedGraph::ProjectedGraph(std::size_t order, std::size_t node_count,
                               std::vector<SubsetKey> subsets, std::vector<Weight> weights)
    : order_(order), node_count_(node_count), subsets_(std::move(subsets)), weights_(std::move(weights)) {
  check_order(order_);
  if (subsets_.size() != weights_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "subset and weight counts differ");
  }
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    if (subsets_[i].size() != order_ || !is_strictly_sorted(subsets_[i].ids())) {
      throw Error(ErrorCode::kInvalidArgument, "malformed projected subset at position " + std::to_string(i));
    }
    if (subsets_[i].ids().back() >= node_count_) {
      throw Error(ErrorCode::kInvalidArgument, "projected subset references a node >= node_count");
    }
    if (weights_[i] == 0) throw Error(ErrorCode::kInvalidArgument, "projected subset with zero weight");
    if (i > 0 && !(subsets_[i - 1] < subsets_[i])) {
      throw Error(ErrorCode::kInvalidArgument, "projected subsets are not strictly increasing");
    }
  }
  build_facet_index();
}

void ProjectedGraph::build_facet_index() {
  std::vector<std::pair<SubsetKey, std::uint32_t>> incidence;
  incidence.reserve(subsets_.size() * order_);
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    for (std::size_t p = 0; p < order_; ++p) {
      incidence.emplace_back(subsets_[i].without(p), static_cast<std::uint32_t>(i));
    }
  }
  std::sort(incidence.begin(), incidence.end());
  facets_.clear();
  facet_offsets_.assign(1, 0);
  facet_members_.clear();
  facet_members_.reserve(incidence.size());
  for (std::size_t i = 0; i < incidence.size(); ++i) {
    if (i == 0 || incidence[i].first != incidence[i - 1].first) {
      if (i > 0) facet_offsets_.push_back(facet_members_.size());
      facets_.push_back(incidence[i].first);
    }
    facet_members_.push_back(incidence[i].second);
  }
  if (!incidence.empty()) facet_offsets_.push_back(facet_members_.size());
}

Weight ProjectedGraph::subset_weight(std::span<const NodeId> sorted_subset) const {
  if (sorted_subset.size() != order_) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset of size " + std::to_string(sorted_subset.size()) + " queried on a " +
                    std::to_string(order_) + "-projected graph");
  }
  const SubsetKey key(sorted_subset);
  auto it = std::lower_bound(subsets_.begin(), subsets_.end(), key);
  if (it == subsets_.end() || *it != key) return 0;
  return weights_[static_cast<std::size_t>(it - subsets_.begin())];
}

std::span<const std::uint32_t> ProjectedGraph::subsets_containing(const SubsetKey& facet) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), facet);
  if (it == facets_.end() || *it != facet) return {};
  const auto f = static_cast<std::size_t>(it - facets_.begin());
  return std::span<const std::uint32_t>(facet_members_).subspan(
      facet_offsets_[f], facet_offsets_[f + 1] - facet_offsets_[f]);
}

std::vector<SubsetKey> ProjectedGraph::facet_neighbors(std::span<const NodeId> sorted_facet) const {
  if (sorted_facet.size() + 1 != order_) {
    throw Error(ErrorCode::kInvalidArgument,
                "facet of size " + std::to_string(sorted_facet.size()) + " queried on a " +
                    std::to_string(order_) + "-projected graph");
  }
  const SubsetKey facet(sorted_facet);
  std::vector<SubsetKey> out;
  for (auto s : subsets_containing(facet)) {
    const SubsetKey& subset = subsets_[s];
    // The other facets of S drop one of the facet's own nodes.
    for (std::size_t p = 0; p < order_; ++p) {
      if (std::binary_search(facet.begin(), facet.end(), subset[p])) out.push_back(subset.without(p));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t ProjectedGraph::edge_count() const noexcept {
  return binomial(order_, 2) * subsets_.size();
}

Weight ProjectedGraph::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

Expansion::Expansion(std::vector<ProjectedGraph> graphs) : graphs_(std::move(graphs)) {
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].order() != i + 2) {
      throw Error(ErrorCode::kInvalidArgument, "expansion orders must be consecutive from 2");
    }
  }
}

const ProjectedGraph& Expansion::graph(std::size_t order) const {
  if (order < 2 || order > max_order()) {
    throw Error(ErrorCode::kOutOfRange, "expansion has no graph of order " + std::to_string(order));
  }
  return graphs_[order - 2];
}

ProjectedGraph project(const Hypergraph& hg, std::size_t order, const ProjectionOptions& options) {
  check_order(order);
  std::uint64_t bound = 0;
  for (const auto& e : hg.edges()) {
    bound += binomial(e.nodes.size(), order);
    if (bound > options.max_subsets) {
      throw Error(ErrorCode::kResourceLimit,
                  "projection of order " + std::to_string(order) + " may exceed the budget of " +
                      std::to_string(options.max_subsets) + " active subsets");
    }
  }

  const auto& edges = hg.edges();
  WeightMap merged = tbb::parallel_reduce(
      tbb::blocked_range<std::size_t>(0, edges.size(), 256), WeightMap{},
      [&](const tbb::blocked_range<std::size_t>& range, WeightMap acc) {
        for (std::size_t i = range.begin(); i != range.end(); ++i) {
          const auto& e = edges[i];
          for_each_combination(e.nodes, order, [&](std::span<const NodeId> subset) {
            acc[SubsetKey(subset)] += e.weight;
          });
        }
        return acc;
      },
      [](WeightMap a, WeightMap b) {
        if (a.size() < b.size()) std::swap(a, b);
        for (const auto& [key, w] : b) a[key] += w;
        return a;
      });
  return from_map(order, hg.node_count(), merged);
}

ProjectedGraph project_bruteforce(const Hypergraph& hg, std::size_t order, std::uint64_t max_facets) {
  check_order(order);
  const std::size_t n = hg.node_count();
  if (binomial(n, order - 1) > max_facets) {
    throw Error(ErrorCode::kResourceLimit, "brute-force projection would enumerate too many facets");
  }
  std::vector<NodeId> universe(n);
  std::iota(universe.begin(), universe.end(), NodeId{0});
  std::vector<NodeSet> facets;
  for_each_combination(universe, order - 1, [&](std::span<const NodeId> f) {
    facets.emplace_back(f.begin(), f.end());
  });

  WeightMap weights;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (union_size(facets[i], facets[j]) != order) continue;
      NodeSet joined;
      std::set_union(facets[i].begin(), facets[i].end(), facets[j].begin(), facets[j].end(),
                     std::back_inserter(joined));
      Weight w = 0;
      for (const auto& e : hg.edges()) {
        if (std::includes(e.nodes.begin(), e.nodes.end(), joined.begin(), joined.end())) w += e.weight;
      }
      if (w > 0) weights[SubsetKey(joined)] = w;
    }
  }
  return from_map(order, n, weights);
}

Expansion expand(const Hypergraph& hg, std::size_t max_order, const ProjectionOptions& options) {
  if (max_order < 2) throw Error(ErrorCode::kInvalidArgument, "expansion order must be >= 2");
  std::vector<ProjectedGraph> graphs;
  graphs.reserve(max_order - 1);
  for (std::size_t k = 2; k <= max_order; ++k) graphs.push_back(project(hg, k, options));
  return Expansion(std::move(graphs));
}

void write_projection(std::ostream& out, const ProjectedGraph& pg) {
  out << "n " << pg.order() << ' ' << pg.subset_count() << '\n';
  for (std::size_t i = 0; i < pg.subset_count(); ++i) {
    for (auto id : pg.subsets()[i]) out << id << ' ';
    out << pg.weights()[i] << '\n';
  }
}

ProjectedGraph read_projection(std::istream& in, std::size_t node_count) {
  std::string tag;
  std::size_t order = 0;
  std::size_t count = 0;
  if (!(in >> tag >> order >> count) || tag != "n") {
    throw Error(ErrorCode::kParse, "projection cache header must be 'n <order> <subset-count>'");
  }
  check_order(order);
  std::vector<SubsetKey> subsets;
  std::vector<Weight> weights;
  subsets.reserve(count);
  weights.reserve(count);
  std::vector<NodeId> ids(order);
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& id : ids) {
      if (!(in >> id)) throw Error(ErrorCode::kParse, "truncated projection cache at subset " + std::to_string(i));
    }
    Weight w = 0;
    if (!(in >> w)) throw Error(ErrorCode::kParse, "missing weight at subset " + std::to_string(i));
    subsets.emplace_back(ids);
    weights.push_back(w);
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kParse, "trailing data after projection cache entries");
  return ProjectedGraph(order, node_count, std::move(subsets), std::move(weights));
}

}  // namespace hypex
