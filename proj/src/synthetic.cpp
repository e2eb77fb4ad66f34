#include "hypex/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "hypex/error.hpp"
#include "hypex/seeding.hpp"

namespace hypex {

namespace {

NodeSet random_set(Rng& rng, std::size_t nodes, std::size_t size) {
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(nodes - 1));
  NodeSet out;
  while (out.size() < size) {
    const NodeId v = pick(rng);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RawHyperedges planted_dataset(const PlantedConfig& config, std::uint64_t seed) {
  if (config.nodes < 5) throw Error(ErrorCode::kInvalidArgument, "planted dataset needs at least 5 nodes");
  if (config.planted_triples == 0 || config.max_repeats == 0) {
    throw Error(ErrorCode::kInvalidArgument, "planted dataset needs at least one planted triple");
  }
  if (config.planted_triples > binomial(config.nodes, 3) / 2 || config.extended > binomial(config.nodes, 4) / 2) {
    throw Error(ErrorCode::kInvalidArgument, "planted dataset is too dense for its node count");
  }
  Rng rng(seed);
  RawHyperedges raw;
  raw.original_ids.resize(config.nodes);
  std::iota(raw.original_ids.begin(), raw.original_ids.end(), std::uint64_t{0});

  std::set<NodeSet> triples;
  while (triples.size() < config.planted_triples) triples.insert(random_set(rng, config.nodes, 3));
  const std::vector<NodeSet> planted(triples.begin(), triples.end());

  std::uniform_int_distribution<std::size_t> repeats(1, config.max_repeats);
  for (const auto& t : planted) {
    const auto r = repeats(rng);
    for (std::size_t i = 0; i < r; ++i) raw.edges.push_back(t);
  }

  std::uniform_int_distribution<std::size_t> pick_triple(0, planted.size() - 1);
  std::uniform_int_distribution<NodeId> pick_node(0, static_cast<NodeId>(config.nodes - 1));
  std::set<NodeSet> extended;
  while (extended.size() < config.extended) {
    NodeSet e = planted[pick_triple(rng)];
    const NodeId extra = pick_node(rng);
    if (std::find(e.begin(), e.end(), extra) != e.end()) continue;
    e.push_back(extra);
    std::sort(e.begin(), e.end());
    if (extended.insert(e).second) raw.edges.push_back(std::move(e));
  }

  std::uniform_int_distribution<std::size_t> pick_size(2, 3);
  for (std::size_t i = 0; i < config.background; ++i) {
    raw.edges.push_back(random_set(rng, config.nodes, pick_size(rng)));
  }
  return raw;
}

void write_edge_list(std::ostream& out, const RawHyperedges& raw) {
  for (const auto& e : raw.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out << ' ';
      out << raw.original_ids[e[i]];
    }
    out << '\n';
  }
}

}  // namespace hypex
