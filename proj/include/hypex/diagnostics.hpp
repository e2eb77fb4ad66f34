#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>

#include "hypex/node_set.hpp"
#include "hypex/projection.hpp"
#include "json.hpp"

namespace hypex {

// h(w) = min(ceil(log2(w + 1)), 9)
int bin_weight(Weight w) noexcept;

// One sampled node triple: binned pairwise weights and binned triadic weight.
struct TripleSample {
  std::array<std::uint8_t, 3> w2{};
  std::uint8_t w3 = 0;

  friend auto operator<=>(const TripleSample&, const TripleSample&) = default;
};

class JointHistogram {
 public:
  void add(const TripleSample& s, std::uint64_t count = 1);
  void merge(const JointHistogram& other);

  const std::map<TripleSample, std::uint64_t>& cells() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }

  double entropy_w2() const;  // H(W2), bits
  double entropy_w3() const;  // H(W3), bits
  double joint_entropy() const;  // H(W2, W3), bits

 private:
  std::map<TripleSample, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// 100 * |active 3-subsets| / C(node_count, 3)
double edge_density_3pg(const ProjectedGraph& pg3, std::size_t node_count);

struct TripleSamplingOptions {
  bool sort_w2 = true;  // canonical component order for W2
  std::size_t chunks = 64;  // fixed work split; results do not depend on threads
};

// Uniform unordered node triples; absent edges have weight 0.
JointHistogram sample_triples(const ProjectedGraph& pg2, const ProjectedGraph& pg3,
                              std::size_t node_count, std::uint64_t num_samples, std::uint64_t seed,
                              const TripleSamplingOptions& options = {});

// Plug-in estimators in bits.
double mutual_information(const JointHistogram& hist);
double conditional_entropy(const JointHistogram& hist);  // H(W3 | W2)

struct DiagnosticsReport {
  double edge_density_pct = 0.0;
  double mutual_information_bits = 0.0;
  double conditional_entropy_bits = 0.0;
  std::uint64_t num_samples = 0;
  std::uint64_t seed = 0;
};

DiagnosticsReport compute_diagnostics(const ProjectedGraph& pg2, const ProjectedGraph& pg3,
                                      std::size_t node_count, std::uint64_t num_samples,
                                      std::uint64_t seed, const TripleSamplingOptions& options = {});

nlohmann::json to_json(const DiagnosticsReport& report);
DiagnosticsReport diagnostics_from_json(const nlohmann::json& j);

}  // namespace hypex
