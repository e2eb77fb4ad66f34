#include "hypex/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "hypex/error.hpp"
#include "hypex/seeding.hpp"

namespace hypex {

namespace {

bool adjacent(const std::vector<std::vector<NodeId>>& adj, NodeId u, NodeId v) {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<NodeId> nodes_with_degree_at_least(const std::vector<std::vector<NodeId>>& adj,
                                               std::size_t min_degree) {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (adj[v].size() >= min_degree) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

void check_sampling_args(const ProjectedGraph& pg2, std::size_t k) {
  if (pg2.order() != 2) throw Error(ErrorCode::kInvalidArgument, "negative sampling needs the 2-projected graph");
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "negative samples need at least 2 nodes");
}

// Shared rejection loop; `draw` returns an empty set when an attempt fails.
template <typename Draw>
SampleResult rejection_sample(std::size_t count, const NodeSetSet& forbidden,
                              const SamplingOptions& options, Draw&& draw) {
  SampleResult result;
  NodeSetSet drawn;
  const std::size_t budget = options.attempts_per_sample * count;
  while (result.samples.size() < count && result.attempts < budget) {
    ++result.attempts;
    NodeSet sample = draw();
    if (sample.empty() || forbidden.contains(sample) || drawn.contains(sample)) continue;
    drawn.insert(sample);
    result.samples.push_back(std::move(sample));
  }
  result.under_sampled = result.samples.size() < count;
  return result;
}

}  // namespace

std::string to_string(NegativeType type) {
  return type == NegativeType::kStar ? "star" : "clique";
}

NegativeType parse_negative_type(const std::string& name) {
  if (name == "star") return NegativeType::kStar;
  if (name == "clique") return NegativeType::kClique;
  throw Error(ErrorCode::kConfig, "unknown negative type '" + name + "' (expected star or clique)");
}

PositiveSplit split_positives(const Hypergraph& hg, std::size_t target_size, double retain_frac,
                              std::uint64_t seed) {
  if (!(retain_frac > 0.0 && retain_frac < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "retain fraction must lie in (0, 1)");
  }
  const auto eligible = hg.edges_of_size(target_size);
  if (eligible.empty()) {
    throw Error(ErrorCode::kEmptyPositives,
                "no hyperedges of size " + std::to_string(target_size) + " to hold out");
  }
  const double scaled = retain_frac * static_cast<double>(hg.edge_count());
  // Guard against 0.6 * 100 landing a hair above 60.
  const auto keep = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
  const std::size_t wanted = hg.edge_count() > keep ? hg.edge_count() - keep : 0;
  const std::size_t take = std::min(wanted, eligible.size());

  std::vector<std::size_t> order(eligible.begin(), eligible.end());
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(take);

  PositiveSplit split;
  split.removed_indices = order;
  split.positives.reserve(take);
  for (auto i : order) split.positives.push_back(hg.edge(i).nodes);
  split.remaining = remove_hyperedges(hg, order);
  return split;
}

std::vector<std::vector<NodeId>> adjacency_lists(const ProjectedGraph& pg2) {
  if (pg2.order() != 2) throw Error(ErrorCode::kInvalidArgument, "adjacency lists need the 2-projected graph");
  std::vector<std::vector<NodeId>> adj(pg2.node_count());
  for (const auto& pair : pg2.subsets()) {
    adj[pair[0]].push_back(pair[1]);
    adj[pair[1]].push_back(pair[0]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

SampleResult sample_star_negatives(const ProjectedGraph& pg2, std::size_t k, std::size_t count,
                                   const NodeSetSet& forbidden, std::uint64_t seed,
                                   const SamplingOptions& options) {
  check_sampling_args(pg2, k);
  const auto adj = adjacency_lists(pg2);
  const auto centers = nodes_with_degree_at_least(adj, k - 1);
  if (centers.empty()) return {{}, count > 0, 0};

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick_center(0, centers.size() - 1);
  return rejection_sample(count, forbidden, options, [&]() -> NodeSet {
    const NodeId center = centers[pick_center(rng)];
    NodeSet members;
    members.reserve(k);
    std::sample(adj[center].begin(), adj[center].end(), std::back_inserter(members), k - 1, rng);
    if (options.strict_stars) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (adjacent(adj, members[i], members[j])) return {};
        }
      }
    }
    members.push_back(center);
    std::sort(members.begin(), members.end());
    return members;
  });
}

SampleResult sample_clique_negatives(const ProjectedGraph& pg2, std::size_t k, std::size_t count,
                                     const NodeSetSet& forbidden, std::uint64_t seed,
                                     const SamplingOptions& options) {
  check_sampling_args(pg2, k);
  const auto adj = adjacency_lists(pg2);
  const auto seeds = nodes_with_degree_at_least(adj, k - 1);
  if (seeds.empty()) return {{}, count > 0, 0};

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick_seed(0, seeds.size() - 1);
  return rejection_sample(count, forbidden, options, [&]() -> NodeSet {
    const NodeId first = seeds[pick_seed(rng)];
    NodeSet members{first};
    std::vector<NodeId> common = adj[first];
    while (members.size() < k) {
      if (common.empty()) return {};
      std::uniform_int_distribution<std::size_t> pick(0, common.size() - 1);
      const NodeId next = common[pick(rng)];
      members.push_back(next);
      std::vector<NodeId> narrowed;
      std::set_intersection(common.begin(), common.end(), adj[next].begin(), adj[next].end(),
                            std::back_inserter(narrowed));
      common = std::move(narrowed);
    }
    std::sort(members.begin(), members.end());
    return members;
  });
}

CandidateSet build_candidate_set(std::size_t target_size, std::vector<NodeSet> positives,
                                 std::vector<NodeSet> negatives, NegativeType neg_type,
                                 std::size_t multiplier, std::uint64_t seed,
                                 const Hypergraph* original) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kAssembly, "candidate set: " + what); };
  if (multiplier == 0) fail("imbalance multiplier must be positive");

  auto check_side = [&](const std::vector<NodeSet>& side, const char* name, NodeSetSet& seen) {
    for (const auto& c : side) {
      if (c.size() != target_size) fail(std::string(name) + " candidate with cardinality != target size");
      if (!is_strictly_sorted(c)) fail(std::string(name) + " candidate is not a sorted node set");
      if (!seen.insert(c).second) fail(std::string("duplicate ") + name + " candidate");
    }
  };
  NodeSetSet pos_seen, neg_seen;
  check_side(positives, "positive", pos_seen);
  check_side(negatives, "negative", neg_seen);
  for (const auto& c : negatives) {
    if (pos_seen.contains(c)) fail("positives and negatives overlap");
  }
  if (original != nullptr) {
    NodeSetSet edges;
    for (const auto& e : original->edges()) {
      if (e.nodes.size() == target_size) edges.insert(e.nodes);
    }
    for (const auto& c : positives) {
      if (!edges.contains(c)) fail("positive candidate is not a hyperedge of E");
    }
    for (const auto& c : negatives) {
      if (edges.contains(c)) fail("negative candidate is a hyperedge of E");
    }
  }

  CandidateSet cs;
  cs.target_size = target_size;
  cs.neg_type = neg_type;
  cs.multiplier = multiplier;
  cs.seed = seed;
  cs.under_sampled = negatives.size() < multiplier * positives.size();
  cs.positives = std::move(positives);
  cs.negatives = std::move(negatives);
  return cs;
}

std::pair<CandidateSet, CandidateSet> train_test_split(const CandidateSet& cs, double train_frac,
                                                       std::uint64_t seed) {
  if (!(train_frac > 0.0 && train_frac < 1.0)) {
    throw Error(ErrorCode::kSplit, "train fraction must lie in (0, 1)");
  }
  if (cs.positives.size() < 2 || cs.negatives.size() < 2) {
    throw Error(ErrorCode::kSplit, "each class needs at least 2 candidates to split (have " +
                                       std::to_string(cs.positives.size()) + " positive, " +
                                       std::to_string(cs.negatives.size()) + " negative)");
  }
  Rng rng(seed);
  CandidateSet train = cs;
  CandidateSet test = cs;
  auto cut = [&](const std::vector<NodeSet>& side, std::vector<NodeSet>& train_side,
                 std::vector<NodeSet>& test_side) {
    std::vector<NodeSet> shuffled = side;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto n_train = static_cast<std::size_t>(std::llround(train_frac * static_cast<double>(side.size())));
    n_train = std::clamp<std::size_t>(n_train, 1, side.size() - 1);
    train_side.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(n_train));
    test_side.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(n_train), shuffled.end());
  };
  cut(cs.positives, train.positives, test.positives);
  cut(cs.negatives, train.negatives, test.negatives);
  return {std::move(train), std::move(test)};
}

nlohmann::json to_json(const CandidateSet& cs) {
  return nlohmann::json{{"target_size", cs.target_size},
                        {"neg_type", to_string(cs.neg_type)},
                        {"multiplier", cs.multiplier},
                        {"seed", cs.seed},
                        {"under_sampled", cs.under_sampled},
                        {"positives", cs.positives},
                        {"negatives", cs.negatives}};
}

CandidateSet candidate_set_from_json(const nlohmann::json& j) {
  try {
    return build_candidate_set(j.at("target_size").get<std::size_t>(),
                               j.at("positives").get<std::vector<NodeSet>>(),
                               j.at("negatives").get<std::vector<NodeSet>>(),
                               parse_negative_type(j.at("neg_type").get<std::string>()),
                               j.at("multiplier").get<std::size_t>(), j.at("seed").get<std::uint64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("candidate set JSON: ") + e.what());
  }
}

}  // namespace hypex
