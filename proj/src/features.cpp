#include "hypex/features.hpp"

#include <tbb/parallel_for.h>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <ostream>

#include "hypex/error.hpp"

namespace hypex {

namespace {

std::string describe(std::span<const NodeId> candidate) {
  std::string s = "{";
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(candidate[i]);
  }
  return s + "}";
}

}  // namespace

std::string to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kGM: return "GM";
    case FeatureKind::kHM: return "HM";
    case FeatureKind::kAM: return "AM";
    case FeatureKind::kCN: return "CN";
    case FeatureKind::kJC: return "JC";
    case FeatureKind::kAA: return "AA";
  }
  return "?";
}

FeatureKind parse_feature_kind(const std::string& name) {
  for (auto kind : kAllFeatureKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kConfig, "unknown feature '" + name + "' (expected GM, HM, AM, CN, JC or AA)");
}

bool is_mean_feature(FeatureKind kind) noexcept {
  return kind == FeatureKind::kGM || kind == FeatureKind::kHM || kind == FeatureKind::kAM;
}

std::vector<FacetPair> inner_pairs(std::span<const NodeId> candidate, std::size_t order) {
  std::vector<FacetPair> pairs;
  if (order < 2 || candidate.size() < order) return pairs;
  for_each_combination(candidate, order, [&](std::span<const NodeId> subset) {
    const SubsetKey key(subset);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = i + 1; j < order; ++j) pairs.emplace_back(key.without(j), key.without(i));
    }
  });
  return pairs;
}

double mean_feature(const ProjectedGraph& pg, std::span<const NodeId> candidate, FeatureKind kind,
                    MeanMode mode) {
  if (!is_mean_feature(kind)) {
    throw Error(ErrorCode::kInvalidArgument, to_string(kind) + " is not a mean feature");
  }
  const std::size_t n = pg.order();
  if (candidate.size() < n) return 0.0;

  // Every inner pair of an n-subset S carries S's weight, and each S has the
  // same C(n,2) pairs, so means over distinct subsets equal means over pairs.
  std::size_t count = 0;
  bool any_zero = false;
  double sum = 0.0, inv_sum = 0.0, log_sum = 0.0;
  for_each_combination(candidate, n, [&](std::span<const NodeId> subset) {
    const Weight w = pg.subset_weight(subset);
    if (w == 0) {
      if (mode == MeanMode::kExistingEdges) return;
      any_zero = true;
      ++count;
      return;
    }
    const auto x = static_cast<double>(w);
    ++count;
    sum += x;
    inv_sum += 1.0 / x;
    log_sum += std::log(x);
  });
  if (count == 0) return 0.0;
  const auto m = static_cast<double>(count);
  switch (kind) {
    case FeatureKind::kGM: return any_zero ? 0.0 : std::exp(log_sum / m);
    case FeatureKind::kHM: return any_zero ? 0.0 : m / inv_sum;
    default: return sum / m;
  }
}

double neighborhood_feature(const ProjectedGraph& pg, std::span<const NodeId> candidate,
                            FeatureKind kind) {
  if (is_mean_feature(kind)) {
    throw Error(ErrorCode::kInvalidArgument, to_string(kind) + " is not a neighborhood feature");
  }
  const std::size_t n = pg.order();
  if (candidate.size() < n) return 0.0;

  std::vector<SubsetKey> common, all;
  bool first = true;
  bool empty_neighborhood = false;
  for_each_combination(candidate, n - 1, [&](std::span<const NodeId> facet) {
    if (empty_neighborhood) return;
    auto neighbors = pg.facet_neighbors(facet);
    if (neighbors.empty()) {
      empty_neighborhood = true;
      return;
    }
    if (first) {
      common = neighbors;
      all = std::move(neighbors);
      first = false;
      return;
    }
    std::vector<SubsetKey> narrowed, widened;
    std::set_intersection(common.begin(), common.end(), neighbors.begin(), neighbors.end(),
                          std::back_inserter(narrowed));
    std::set_union(all.begin(), all.end(), neighbors.begin(), neighbors.end(),
                   std::back_inserter(widened));
    common = std::move(narrowed);
    all = std::move(widened);
  });
  if (empty_neighborhood) return 0.0;

  switch (kind) {
    case FeatureKind::kCN: return static_cast<double>(common.size());
    case FeatureKind::kJC:
      return all.empty() ? 0.0 : static_cast<double>(common.size()) / static_cast<double>(all.size());
    default: {
      double score = 0.0;
      for (const auto& u : common) {
        const auto degree = pg.facet_neighbors(u).size();
        if (degree > 1) score += 1.0 / std::log(static_cast<double>(degree));
      }
      return score;
    }
  }
}

double feature_value(const ProjectedGraph& pg, std::span<const NodeId> candidate, FeatureKind kind,
                     const FeatureOptions& options) {
  return is_mean_feature(kind) ? mean_feature(pg, candidate, kind, options.mean_mode)
                               : neighborhood_feature(pg, candidate, kind);
}

std::vector<double> feature_vector(const Expansion& expansion, std::span<const NodeId> candidate,
                                   FeatureKind kind, const FeatureOptions& options) {
  if (expansion.empty()) throw Error(ErrorCode::kInvalidArgument, "feature vector over an empty expansion");
  std::vector<double> out;
  out.reserve(expansion.graphs().size());
  for (const auto& pg : expansion.graphs()) out.push_back(feature_value(pg, candidate, kind, options));
  return out;
}

FeatureMatrix FeatureMatrix::leading_columns(std::size_t k) const {
  if (k == 0 || k > cols) throw Error(ErrorCode::kOutOfRange, "column count out of range");
  FeatureMatrix out;
  out.kind = kind;
  out.rows = rows;
  out.cols = k;
  out.labels = labels;
  out.column_names.assign(column_names.begin(), column_names.begin() + static_cast<std::ptrdiff_t>(k));
  out.values.reserve(rows * k);
  for (std::size_t r = 0; r < rows; ++r) {
    auto src = row(r).first(k);
    out.values.insert(out.values.end(), src.begin(), src.end());
  }
  return out;
}

FeatureMatrix feature_matrix(const Expansion& expansion, const CandidateSet& cs, FeatureKind kind,
                             const FeatureOptions& options) {
  if (expansion.empty()) throw Error(ErrorCode::kInvalidArgument, "feature matrix over an empty expansion");
  FeatureMatrix fm;
  fm.kind = kind;
  fm.rows = cs.size();
  fm.cols = expansion.graphs().size();
  fm.values.assign(fm.rows * fm.cols, 0.0);
  fm.labels.assign(cs.positives.size(), 1);
  fm.labels.resize(fm.rows, 0);
  for (const auto& pg : expansion.graphs()) fm.column_names.push_back("x" + std::to_string(pg.order()));

  auto candidate = [&](std::size_t r) -> const NodeSet& {
    return r < cs.positives.size() ? cs.positives[r] : cs.negatives[r - cs.positives.size()];
  };
  for (std::size_t r = 0; r < fm.rows; ++r) {
    if (candidate(r).size() != cs.target_size) {
      throw Error(ErrorCode::kInvalidArgument, "candidate " + describe(candidate(r)) + " does not have the target size");
    }
  }
  tbb::parallel_for(std::size_t{0}, fm.rows, [&](std::size_t r) {
    const auto& c = candidate(r);
    for (std::size_t k = 0; k < fm.cols; ++k) {
      const double x = feature_value(expansion.graphs()[k], c, kind, options);
      if (!std::isfinite(x)) {
        throw Error(ErrorCode::kComputation, "non-finite " + to_string(kind) + " value for candidate " + describe(c));
      }
      fm.values[r * fm.cols + k] = x;
    }
  });
  return fm;
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& fm) {
  out << "label";
  for (const auto& name : fm.column_names) out << ',' << name;
  out << '\n';
  const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t r = 0; r < fm.rows; ++r) {
    out << fm.labels[r];
    for (double x : fm.row(r)) out << ',' << x;
    out << '\n';
  }
  out.precision(precision);
}

}  // namespace hypex
