#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypex/candidates.hpp"
#include "hypex/node_set.hpp"
#include "hypex/projection.hpp"

namespace hypex {

enum class FeatureKind { kGM, kHM, kAM, kCN, kJC, kAA };

inline constexpr std::array<FeatureKind, 6> kAllFeatureKinds = {
    FeatureKind::kGM, FeatureKind::kHM, FeatureKind::kAM,
    FeatureKind::kCN, FeatureKind::kJC, FeatureKind::kAA};

std::string to_string(FeatureKind kind);
FeatureKind parse_feature_kind(const std::string& name);
bool is_mean_feature(FeatureKind kind) noexcept;

enum class MeanMode {
  // Every potential inner pair counts; absent edges contribute weight 0.
  kAllPotentialPairs,
  // Only inner pairs that are edges of the projected graph.
  kExistingEdges,
};

struct FeatureOptions {
  MeanMode mean_mode = MeanMode::kAllPotentialPairs;
};

using FacetPair = std::pair<SubsetKey, SubsetKey>;

// All unordered pairs of distinct (n-1)-subsets of c whose union has n
// nodes, present in the graph or not. C(|c|, n) * C(n, 2) pairs.
std::vector<FacetPair> inner_pairs(std::span<const NodeId> candidate, std::size_t order);

// GM / HM / AM of the inner edge weights of `candidate` in `pg`.
double mean_feature(const ProjectedGraph& pg, std::span<const NodeId> candidate, FeatureKind kind,
                    MeanMode mode = MeanMode::kAllPotentialPairs);

// CN / JC / AA over the neighborhoods of the candidate's (n-1)-subsets.
double neighborhood_feature(const ProjectedGraph& pg, std::span<const NodeId> candidate,
                            FeatureKind kind);

double feature_value(const ProjectedGraph& pg, std::span<const NodeId> candidate, FeatureKind kind,
                     const FeatureOptions& options = {});

// [x_2(c), ..., x_n(c)] over the expansion.
std::vector<double> feature_vector(const Expansion& expansion, std::span<const NodeId> candidate,
                                   FeatureKind kind, const FeatureOptions& options = {});

// Row-major candidates x orders matrix for one feature kind.
struct FeatureMatrix {
  FeatureKind kind = FeatureKind::kCN;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<int> labels;
  std::vector<std::string> column_names;  // "x2", "x3", ...

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values).subspan(r * cols, cols);
  }
  // The first `k` columns, i.e. the features of a lower-order expansion.
  FeatureMatrix leading_columns(std::size_t k) const;
};

// Rows are positives then negatives in stored order, labelled 1 then 0.
FeatureMatrix feature_matrix(const Expansion& expansion, const CandidateSet& cs, FeatureKind kind,
                             const FeatureOptions& options = {});

// CSV with header "label,x2,...,xn".
void write_feature_csv(std::ostream& out, const FeatureMatrix& fm);

}  // namespace hypex
