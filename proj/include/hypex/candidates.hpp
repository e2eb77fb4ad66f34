#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypex/hypergraph.hpp"
#include "hypex/node_set.hpp"
#include "hypex/projection.hpp"
#include "json.hpp"

namespace hypex {

enum class NegativeType { kStar, kClique };

std::string to_string(NegativeType type);
NegativeType parse_negative_type(const std::string& name);

using NodeSetSet = std::unordered_set<NodeSet, NodeSetHash>;

struct PositiveSplit {
  Hypergraph remaining;                      // E'
  std::vector<NodeSet> positives;            // C_p, in removal order
  std::vector<std::size_t> removed_indices;  // into the input hypergraph
};

// Removes target-size hyperedges uniformly at random until
// |E'| = ceil(retain_frac * |E|) or none of that size are left.
PositiveSplit split_positives(const Hypergraph& hg, std::size_t target_size, double retain_frac,
                              std::uint64_t seed);

struct SamplingOptions {
  std::size_t attempts_per_sample = 100;
  bool strict_stars = false;  // star leaves must be pairwise non-adjacent
};

struct SampleResult {
  std::vector<NodeSet> samples;
  bool under_sampled = false;
  std::size_t attempts = 0;
};

// Node adjacency of a 2-projected graph, one sorted list per node.
std::vector<std::vector<NodeId>> adjacency_lists(const ProjectedGraph& pg2);

// Star negatives: a uniformly drawn center with at least k-1 neighbors plus
// k-1 of its neighbors drawn uniformly without replacement. Samples found in
// `forbidden` or already drawn are rejected.
SampleResult sample_star_negatives(const ProjectedGraph& pg2, std::size_t k, std::size_t count,
                                   const NodeSetSet& forbidden, std::uint64_t seed,
                                   const SamplingOptions& options = {});

// Clique negatives: a uniformly drawn seed node, extended one uniformly
// chosen node at a time from the running common neighborhood.
SampleResult sample_clique_negatives(const ProjectedGraph& pg2, std::size_t k, std::size_t count,
                                     const NodeSetSet& forbidden, std::uint64_t seed,
                                     const SamplingOptions& options = {});

struct CandidateSet {
  std::size_t target_size = 0;
  std::vector<NodeSet> positives;
  std::vector<NodeSet> negatives;
  NegativeType neg_type = NegativeType::kClique;
  std::size_t multiplier = 1;
  std::uint64_t seed = 0;
  bool under_sampled = false;

  std::size_t size() const noexcept { return positives.size() + negatives.size(); }
  std::size_t requested_negatives() const noexcept { return multiplier * positives.size(); }
};

// Validates all candidate-set invariants. When `original` is given, every
// positive must be one of its hyperedges and no negative may be.
CandidateSet build_candidate_set(std::size_t target_size, std::vector<NodeSet> positives,
                                 std::vector<NodeSet> negatives, NegativeType neg_type,
                                 std::size_t multiplier, std::uint64_t seed,
                                 const Hypergraph* original = nullptr);

// Stratified split: positives and negatives are shuffled and cut separately.
std::pair<CandidateSet, CandidateSet> train_test_split(const CandidateSet& cs, double train_frac,
                                                       std::uint64_t seed);

nlohmann::json to_json(const CandidateSet& cs);
CandidateSet candidate_set_from_json(const nlohmann::json& j);

}  // namespace hypex
