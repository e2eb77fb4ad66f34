#include "hypex/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "hypex/error.hpp"

namespace hypex {

namespace {

using OriginalEdge = std::vector<std::uint64_t>;

std::uint64_t parse_id(std::string_view token, std::string_view context) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kParse, "non-integer token '" + std::string(token) + "' in " +
                                       std::string(context));
  }
  return value;
}

// Reads every whitespace-separated token of a stream as an integer.
std::vector<std::uint64_t> read_integers(std::istream& in, std::string_view context) {
  std::vector<std::uint64_t> values;
  std::string token;
  while (in >> token) values.push_back(parse_id(token, context));
  return values;
}

// Sorts ids, keeps edges with size in [2, max_size], and remaps the
// surviving ids densely in ascending original order.
RawHyperedges remap(std::vector<OriginalEdge> edges, std::size_t max_size) {
  std::vector<OriginalEdge> kept;
  kept.reserve(edges.size());
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() >= 2 && e.size() <= max_size) kept.push_back(std::move(e));
  }

  RawHyperedges raw;
  for (const auto& e : kept) raw.original_ids.insert(raw.original_ids.end(), e.begin(), e.end());
  std::sort(raw.original_ids.begin(), raw.original_ids.end());
  raw.original_ids.erase(std::unique(raw.original_ids.begin(), raw.original_ids.end()),
                         raw.original_ids.end());

  raw.edges.reserve(kept.size());
  for (const auto& e : kept) {
    NodeSet mapped;
    mapped.reserve(e.size());
    for (auto id : e) {
      auto it = std::lower_bound(raw.original_ids.begin(), raw.original_ids.end(), id);
      mapped.push_back(static_cast<NodeId>(it - raw.original_ids.begin()));
    }
    raw.edges.push_back(std::move(mapped));
  }
  return raw;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t node_count, std::vector<Hyperedge> edges,
                       std::vector<std::uint64_t> original_ids)
    : node_count_(node_count), edges_(std::move(edges)), original_ids_(std::move(original_ids)) {
  if (!original_ids_.empty() && original_ids_.size() != node_count_) {
    throw Error(ErrorCode::kInvalidArgument, "original id mapping does not cover every node");
  }
  std::unordered_map<NodeSet, std::size_t, NodeSetHash> seen;
  seen.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.nodes.size() < 2) {
      throw Error(ErrorCode::kInvalidArgument, "hyperedge " + std::to_string(i) + " has fewer than 2 nodes");
    }
    if (!is_strictly_sorted(e.nodes)) {
      throw Error(ErrorCode::kInvalidArgument, "hyperedge " + std::to_string(i) + " is not strictly sorted");
    }
    if (e.nodes.back() >= node_count_) {
      throw Error(ErrorCode::kInvalidArgument, "hyperedge " + std::to_string(i) + " references node " +
                                                   std::to_string(e.nodes.back()) + " >= node_count");
    }
    if (e.weight == 0) {
      throw Error(ErrorCode::kInvalidArgument, "hyperedge " + std::to_string(i) + " has zero weight");
    }
    if (!seen.emplace(e.nodes, i).second) {
      throw Error(ErrorCode::kInvalidArgument, "hyperedge " + std::to_string(i) + " duplicates an earlier hyperedge");
    }
    size_index_[e.nodes.size()].push_back(i);
  }
}

std::span<const std::size_t> Hypergraph::edges_of_size(std::size_t size) const {
  auto it = size_index_.find(size);
  if (it == size_index_.end()) return {};
  return it->second;
}

std::uint64_t Hypergraph::original_id(NodeId node) const {
  if (node >= node_count_) throw Error(ErrorCode::kOutOfRange, "node id out of range");
  return original_ids_.empty() ? node : original_ids_[node];
}

Weight Hypergraph::total_weight() const noexcept {
  Weight total = 0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

RawHyperedges parse_simplicial_dataset(std::istream& nverts, std::istream& simplices,
                                       std::size_t max_size) {
  const auto sizes = read_integers(nverts, "nverts");
  const auto ids = read_integers(simplices, "simplices");

  std::uint64_t expected = 0;
  for (auto s : sizes) expected += s;
  if (expected != ids.size()) {
    throw Error(ErrorCode::kMalformedDataset,
                "nverts total " + std::to_string(expected) + " does not match the " +
                    std::to_string(ids.size()) + " simplex entries");
  }

  std::vector<OriginalEdge> edges;
  edges.reserve(sizes.size());
  std::size_t offset = 0;
  for (auto s : sizes) {
    edges.emplace_back(ids.begin() + static_cast<std::ptrdiff_t>(offset),
                       ids.begin() + static_cast<std::ptrdiff_t>(offset + s));
    offset += s;
  }
  return remap(std::move(edges), max_size);
}

RawHyperedges parse_edge_list(std::istream& in, std::size_t max_size) {
  std::vector<OriginalEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream tokens(line);
    OriginalEdge edge;
    std::string token;
    const std::string context = "line " + std::to_string(line_no);
    while (tokens >> token) edge.push_back(parse_id(token, context));

    OriginalEdge sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kMalformedLine, "duplicate node id on " + context);
    }
    edges.push_back(std::move(edge));
  }
  return remap(std::move(edges), max_size);
}

Hypergraph dedup_and_weight(const RawHyperedges& raw) {
  if (raw.edges.empty()) {
    throw Error(ErrorCode::kEmptyHypergraph, "no hyperedges left after filtering");
  }
  std::unordered_map<NodeSet, std::size_t, NodeSetHash> position;
  position.reserve(raw.edges.size());
  std::vector<Hyperedge> edges;
  for (const auto& e : raw.edges) {
    auto [it, inserted] = position.emplace(e, edges.size());
    if (inserted) {
      edges.push_back({e, 1});
    } else {
      ++edges[it->second].weight;
    }
  }
  return Hypergraph(raw.node_count(), std::move(edges), raw.original_ids);
}

Hypergraph remove_hyperedges(const Hypergraph& hg, std::span<const std::size_t> indices) {
  std::vector<bool> removed(hg.edge_count(), false);
  for (auto i : indices) {
    if (i >= hg.edge_count()) {
      throw Error(ErrorCode::kOutOfRange, "hyperedge index " + std::to_string(i) + " out of range");
    }
    removed[i] = true;
  }
  std::vector<Hyperedge> kept;
  kept.reserve(hg.edge_count());
  for (std::size_t i = 0; i < hg.edge_count(); ++i) {
    if (!removed[i]) kept.push_back(hg.edges()[i]);
  }
  return Hypergraph(hg.node_count(), std::move(kept), hg.original_ids());
}

DatasetFormat parse_dataset_format(const std::string& name) {
  if (name == "simplicial") return DatasetFormat::kSimplicial;
  if (name == "edgelist" || name == "edge-list") return DatasetFormat::kEdgeList;
  throw Error(ErrorCode::kConfig, "unknown dataset format '" + name + "'");
}

std::string to_string(DatasetFormat format) {
  return format == DatasetFormat::kSimplicial ? "simplicial" : "edgelist";
}

RawHyperedges read_dataset(const std::filesystem::path& path, DatasetFormat format,
                           std::size_t max_size) {
  auto open = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorCode::kIo, "cannot open dataset file " + p.string());
    return in;
  };
  if (format == DatasetFormat::kEdgeList) {
    auto in = open(path);
    return parse_edge_list(in, max_size);
  }
  std::string prefix = path.string();
  constexpr std::string_view kSuffix = "-nverts.txt";
  if (prefix.size() > kSuffix.size() && prefix.ends_with(kSuffix)) {
    prefix.resize(prefix.size() - kSuffix.size());
  }
  auto nverts = open(prefix + "-nverts.txt");
  auto simplices = open(prefix + "-simplices.txt");
  return parse_simplicial_dataset(nverts, simplices, max_size);
}

Hypergraph load_hypergraph(const std::filesystem::path& path, DatasetFormat format,
                           std::size_t max_size) {
  return dedup_and_weight(read_dataset(path, format, max_size));
}

}  // namespace hypex
