#include "hypex/diagnostics.hpp"

#include <tbb/parallel_for.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "hypex/error.hpp"
#include "hypex/seeding.hpp"

namespace hypex {

namespace {

template <typename Map>
double entropy_of(const Map& counts, std::uint64_t total) {
  double h = 0.0;
  const auto n = static_cast<double>(total);
  for (const auto& [key, c] : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

int bin_weight(Weight w) noexcept {
  // ceil(log2(w + 1)) == bit_width(w) for every w >= 0.
  return std::min(static_cast<int>(std::bit_width(w)), 9);
}

void JointHistogram::add(const TripleSample& s, std::uint64_t count) {
  counts_[s] += count;
  total_ += count;
}

void JointHistogram::merge(const JointHistogram& other) {
  for (const auto& [cell, c] : other.counts_) add(cell, c);
}

double JointHistogram::entropy_w2() const {
  std::map<std::array<std::uint8_t, 3>, std::uint64_t> marginal;
  for (const auto& [cell, c] : counts_) marginal[cell.w2] += c;
  return entropy_of(marginal, total_);
}

double JointHistogram::entropy_w3() const {
  std::map<std::uint8_t, std::uint64_t> marginal;
  for (const auto& [cell, c] : counts_) marginal[cell.w3] += c;
  return entropy_of(marginal, total_);
}

double JointHistogram::joint_entropy() const { return entropy_of(counts_, total_); }

double edge_density_3pg(const ProjectedGraph& pg3, std::size_t node_count) {
  if (node_count < 3) throw Error(ErrorCode::kInvalidArgument, "edge density needs at least 3 nodes");
  if (pg3.order() != 3) throw Error(ErrorCode::kInvalidArgument, "edge density needs the 3-projected graph");
  return 100.0 * static_cast<double>(pg3.subset_count()) / static_cast<double>(binomial(node_count, 3));
}

JointHistogram sample_triples(const ProjectedGraph& pg2, const ProjectedGraph& pg3,
                              std::size_t node_count, std::uint64_t num_samples, std::uint64_t seed,
                              const TripleSamplingOptions& options) {
  if (pg2.order() != 2 || pg3.order() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "triple sampling needs the 2- and 3-projected graphs");
  }
  if (node_count < 3) throw Error(ErrorCode::kInvalidArgument, "triple sampling needs at least 3 nodes");
  if (num_samples == 0) throw Error(ErrorCode::kInvalidArgument, "triple sampling needs at least one sample");

  const std::size_t chunks = std::max<std::size_t>(1, options.chunks);
  std::vector<JointHistogram> partial(chunks);
  tbb::parallel_for(std::size_t{0}, chunks, [&](std::size_t chunk) {
    const std::uint64_t quota = num_samples / chunks + (chunk < num_samples % chunks ? 1 : 0);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(chunk)));
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(node_count - 1));
    for (std::uint64_t s = 0; s < quota; ++s) {
      NodeId a = pick(rng), b = pick(rng), c = pick(rng);
      while (b == a) b = pick(rng);
      while (c == a || c == b) c = pick(rng);
      // Pairwise weights in the order (v1,v2), (v2,v3), (v1,v3).
      auto pair = [&](NodeId u, NodeId v) {
        const NodeId key[2] = {std::min(u, v), std::max(u, v)};
        return static_cast<std::uint8_t>(bin_weight(pg2.subset_weight(key)));
      };
      TripleSample sample;
      sample.w2 = {pair(a, b), pair(b, c), pair(a, c)};
      if (options.sort_w2) std::sort(sample.w2.begin(), sample.w2.end());
      NodeId triple[3] = {a, b, c};
      std::sort(std::begin(triple), std::end(triple));
      sample.w3 = static_cast<std::uint8_t>(bin_weight(pg3.subset_weight(triple)));
      partial[chunk].add(sample);
    }
  });
  JointHistogram hist;
  for (const auto& h : partial) hist.merge(h);
  return hist;
}

double mutual_information(const JointHistogram& hist) {
  if (hist.total() == 0) throw Error(ErrorCode::kInvalidArgument, "mutual information of an empty histogram");
  std::map<std::array<std::uint8_t, 3>, std::uint64_t> w2;
  std::map<std::uint8_t, std::uint64_t> w3;
  for (const auto& [cell, c] : hist.cells()) {
    w2[cell.w2] += c;
    w3[cell.w3] += c;
  }
  const auto n = static_cast<double>(hist.total());
  double mi = 0.0;
  for (const auto& [cell, c] : hist.cells()) {
    if (c == 0) continue;
    const double joint = static_cast<double>(c) / n;
    const double pa = static_cast<double>(w2[cell.w2]) / n;
    const double pb = static_cast<double>(w3[cell.w3]) / n;
    mi += joint * std::log2(joint / (pa * pb));
  }
  return std::max(mi, 0.0);
}

double conditional_entropy(const JointHistogram& hist) {
  if (hist.total() == 0) throw Error(ErrorCode::kInvalidArgument, "conditional entropy of an empty histogram");
  return std::max(hist.joint_entropy() - hist.entropy_w2(), 0.0);
}

DiagnosticsReport compute_diagnostics(const ProjectedGraph& pg2, const ProjectedGraph& pg3,
                                      std::size_t node_count, std::uint64_t num_samples,
                                      std::uint64_t seed, const TripleSamplingOptions& options) {
  const auto hist = sample_triples(pg2, pg3, node_count, num_samples, seed, options);
  DiagnosticsReport report;
  report.edge_density_pct = edge_density_3pg(pg3, node_count);
  report.mutual_information_bits = mutual_information(hist);
  report.conditional_entropy_bits = conditional_entropy(hist);
  report.num_samples = num_samples;
  report.seed = seed;
  return report;
}

nlohmann::json to_json(const DiagnosticsReport& report) {
  return nlohmann::json{{"edge_density_pct", report.edge_density_pct},
                        {"mutual_information_bits", report.mutual_information_bits},
                        {"conditional_entropy_bits", report.conditional_entropy_bits},
                        {"num_samples", report.num_samples},
                        {"seed", report.seed}};
}

DiagnosticsReport diagnostics_from_json(const nlohmann::json& j) {
  try {
    DiagnosticsReport r;
    r.edge_density_pct = j.at("edge_density_pct").get<double>();
    r.mutual_information_bits = j.at("mutual_information_bits").get<double>();
    r.conditional_entropy_bits = j.at("conditional_entropy_bits").get<double>();
    r.num_samples = j.at("num_samples").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("diagnostics JSON: ") + e.what());
  }
}

}  // namespace hypex
