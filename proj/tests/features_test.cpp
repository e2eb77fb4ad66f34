#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hypex/error.hpp"
#include "hypex/features.hpp"
#include "test_support.hpp"

namespace hypex {
namespace {

using testing::make_hypergraph;
using testing::oracle_inner_weights;
using testing::oracle_neighbors;
using testing::oracle_weight;
using testing::random_hypergraph;
using testing::subsets_of;

double oracle_mean(const std::vector<double>& w, FeatureKind kind) {
  if (w.empty()) return 0.0;
  const double m = static_cast<double>(w.size());
  if (kind == FeatureKind::kAM) return std::accumulate(w.begin(), w.end(), 0.0) / m;
  if (std::find(w.begin(), w.end(), 0.0) != w.end()) return 0.0;
  if (kind == FeatureKind::kHM) {
    double inv = 0.0;
    for (double x : w) inv += 1.0 / x;
    return m / inv;
  }
  double prod = 1.0;
  for (double x : w) prod *= x;
  return std::pow(prod, 1.0 / m);
}

double oracle_neighborhood(const Hypergraph& hg, const NodeSet& c, std::size_t n, FeatureKind kind) {
  if (c.size() < n) return 0.0;
  std::set<NodeSet> common, all;
  bool first = true;
  for (const auto& f : subsets_of(c, n - 1)) {
    const auto nb = oracle_neighbors(hg, f, n);
    if (nb.empty()) return 0.0;
    all.insert(nb.begin(), nb.end());
    if (first) {
      common = nb;
      first = false;
    } else {
      std::set<NodeSet> kept;
      for (const auto& u : common) {
        if (nb.contains(u)) kept.insert(u);
      }
      common = kept;
    }
  }
  if (kind == FeatureKind::kCN) return static_cast<double>(common.size());
  if (kind == FeatureKind::kJC) return all.empty() ? 0.0 : static_cast<double>(common.size()) / all.size();
  double aa = 0.0;
  for (const auto& u : common) {
    const auto d = oracle_neighbors(hg, u, n).size();
    if (d > 1) aa += 1.0 / std::log(static_cast<double>(d));
  }
  return aa;
}

NodeSet random_candidate(std::mt19937_64& rng, std::size_t node_count, std::size_t size) {
  std::vector<NodeId> all(node_count);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  NodeSet c(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(c.begin(), c.end());
  return c;
}

TEST(InnerPairs, Counts) {
  const NodeSet c{0, 1, 2, 3};
  EXPECT_EQ(inner_pairs(c, 2).size(), 6u);
  EXPECT_EQ(inner_pairs(c, 3).size(), 12u);
  EXPECT_TRUE(inner_pairs(c, 5).empty());
  for (const auto& [u, v] : inner_pairs(c, 3)) {
    EXPECT_NE(u, v);
    EXPECT_EQ(union_size(u.ids(), v.ids()), 3u);
  }
}

TEST(MeanFeature, PathExample) {
  const auto pg2 = project(make_hypergraph(3, {{{0, 1}, 1}, {{1, 2}, 1}}), 2);
  const NodeSet c{0, 1, 2};
  EXPECT_EQ(mean_feature(pg2, c, FeatureKind::kGM), 0.0);
  EXPECT_EQ(mean_feature(pg2, c, FeatureKind::kHM), 0.0);
  EXPECT_DOUBLE_EQ(mean_feature(pg2, c, FeatureKind::kAM), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(mean_feature(pg2, c, FeatureKind::kGM, MeanMode::kExistingEdges), 1.0);
  EXPECT_THROW(mean_feature(pg2, c, FeatureKind::kCN), Error);
}

TEST(MeanFeature, EqualWeights) {
  const auto pg2 = project(make_hypergraph(4, {{{0, 1, 2, 3}, 5}}), 2);
  const NodeSet c{0, 1, 2, 3};
  for (auto kind : {FeatureKind::kGM, FeatureKind::kHM, FeatureKind::kAM}) {
    EXPECT_NEAR(mean_feature(pg2, c, kind), 5.0, 1e-12);
  }
}

TEST(MeanFeature, ArithmeticMeanOverSubsets) {
  const NodeSet c{0, 1, 2, 3};
  // {0,1,2} once plus {0,1,2,3}: per-subset weights 2,1,1,1.
  const auto single = make_hypergraph(4, {{{0, 1, 2}, 1}, {{0, 1, 2, 3}, 1}});
  EXPECT_DOUBLE_EQ(mean_feature(project(single, 3), c, FeatureKind::kAM), 1.25);
  EXPECT_DOUBLE_EQ(oracle_mean(oracle_inner_weights(single, c, 3), FeatureKind::kAM), 1.25);
  // With {0,1,2} occurring twice, {0,1,2} weighs 3.
  const auto doubled = make_hypergraph(4, {{{0, 1, 2}, 2}, {{0, 1, 2, 3}, 1}});
  EXPECT_DOUBLE_EQ(mean_feature(project(doubled, 3), c, FeatureKind::kAM), 1.5);
  EXPECT_DOUBLE_EQ(oracle_mean(oracle_inner_weights(doubled, c, 3), FeatureKind::kAM), 1.5);
}

TEST(MeanFeature, SmallCandidateIsZero) {
  const auto pg3 = project(make_hypergraph(4, {{{0, 1, 2}, 1}}), 3);
  const NodeSet c{0, 1};
  EXPECT_EQ(mean_feature(pg3, c, FeatureKind::kAM), 0.0);
  EXPECT_EQ(neighborhood_feature(pg3, c, FeatureKind::kCN), 0.0);
}

TEST(NeighborhoodFeature, CommonNeighborNine) {
  const auto pg2 = project(
      make_hypergraph(10, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}, {{0, 9}, 1}, {{1, 9}, 1}, {{2, 9}, 1}}), 2);
  const NodeSet c{0, 1, 2};
  EXPECT_EQ(neighborhood_feature(pg2, c, FeatureKind::kCN), 1.0);
  EXPECT_DOUBLE_EQ(neighborhood_feature(pg2, c, FeatureKind::kJC), 1.0 / 4.0);
  EXPECT_DOUBLE_EQ(neighborhood_feature(pg2, c, FeatureKind::kAA), 1.0 / std::log(3.0));
  EXPECT_THROW(neighborhood_feature(pg2, c, FeatureKind::kGM), Error);
}

TEST(NeighborhoodFeature, DisconnectedCandidateIsZero) {
  const auto pg2 = project(make_hypergraph(4, {{{0, 1}, 1}}), 2);
  const NodeSet c{2, 3};
  for (auto kind : {FeatureKind::kCN, FeatureKind::kJC, FeatureKind::kAA}) {
    EXPECT_EQ(neighborhood_feature(pg2, c, kind), 0.0);
  }
}

TEST(NeighborhoodFeature, SingleAdamicAdarTerm) {
  const auto pg2 = project(make_hypergraph(10, {{{0, 9}, 1}, {{1, 9}, 1}, {{5, 9}, 1}, {{6, 9}, 1}}), 2);
  const NodeSet c{0, 1};
  EXPECT_EQ(neighborhood_feature(pg2, c, FeatureKind::kCN), 1.0);
  EXPECT_DOUBLE_EQ(neighborhood_feature(pg2, c, FeatureKind::kAA), 1.0 / std::log(4.0));
}

TEST(FeatureVector, LengthAndTrailingZeros) {
  const auto hg = make_hypergraph(3, {{{0, 1}, 1}, {{1, 2}, 1}});
  const auto exp = expand(hg, 3);
  const NodeSet c{0, 1, 2};
  EXPECT_EQ(feature_vector(exp, c, FeatureKind::kGM), (std::vector<double>{0.0, 0.0}));
  const auto exp4 = expand(make_hypergraph(4, {{{0, 1, 2, 3}, 1}}), 4);
  const NodeSet pair{0, 1};
  const auto v = feature_vector(exp4, pair, FeatureKind::kAM);
  EXPECT_EQ(v, (std::vector<double>{1.0, 0.0, 0.0}));
}

TEST(FeatureMatrix, ShapeLabelsAndCsv) {
  const auto hg = make_hypergraph(6, {{{0, 1, 2, 3}, 1}, {{2, 3, 4, 5}, 1}});
  const auto exp = expand(hg, 4);
  const auto cs = build_candidate_set(4, {{0, 1, 2, 3}}, {{1, 2, 3, 4}, {0, 1, 4, 5}}, NegativeType::kClique, 2, 1);
  const auto fm = feature_matrix(exp, cs, FeatureKind::kCN);
  EXPECT_EQ(fm.rows, 3u);
  EXPECT_EQ(fm.cols, 3u);
  EXPECT_EQ(fm.labels, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(fm.column_names, (std::vector<std::string>{"x2", "x3", "x4"}));
  const auto lead = fm.leading_columns(2);
  EXPECT_EQ(lead.cols, 2u);
  EXPECT_EQ(lead.at(2, 1), fm.at(2, 1));
  std::ostringstream out;
  write_feature_csv(out, lead);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "label,x2,x3");

  const auto empty_exp = expand(make_hypergraph(6, {}), 3);
  const auto zero = feature_matrix(empty_exp, cs, FeatureKind::kAM);
  for (double x : zero.values) EXPECT_EQ(x, 0.0);

  const auto one = build_candidate_set(4, {{0, 1, 2, 3}}, {}, NegativeType::kClique, 1, 1);
  EXPECT_EQ(feature_matrix(exp, one, FeatureKind::kJC).rows, 1u);
}

TEST(FeatureMatrix, ManyRowsShape) {
  std::vector<NodeSet> pos, neg;
  for (NodeId i = 0; i < 40; ++i) pos.push_back({4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3});
  for (NodeId i = 0; i < 400; ++i) neg.push_back({1000 + 4 * i, 1001 + 4 * i, 1002 + 4 * i, 1003 + 4 * i});
  const auto cs = build_candidate_set(4, pos, neg, NegativeType::kClique, 10, 0);
  const auto exp = expand(make_hypergraph(3000, {{{0, 1, 2, 3}, 1}}), 4);
  const auto fm = feature_matrix(exp, cs, FeatureKind::kCN);
  EXPECT_EQ(fm.rows, 440u);
  EXPECT_EQ(fm.cols, 3u);
}

TEST(FeatureProperties, MatchOracles) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const auto hg = random_hypergraph(rng, 9, 16, 2, 5);
    const std::size_t size = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const auto c = random_candidate(rng, hg.node_count(), size);
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto pg = project(hg, n);
      const auto weights = oracle_inner_weights(hg, c, n);
      for (auto kind : {FeatureKind::kGM, FeatureKind::kHM, FeatureKind::kAM}) {
        const double want = oracle_mean(weights, kind);
        EXPECT_NEAR(mean_feature(pg, c, kind), want, 1e-9 * std::max(1.0, want));
      }
      for (auto kind : {FeatureKind::kCN, FeatureKind::kJC, FeatureKind::kAA}) {
        EXPECT_NEAR(neighborhood_feature(pg, c, kind), oracle_neighborhood(hg, c, n, kind), 1e-12)
            << to_string(kind) << " n=" << n;
      }
    }
  }
}

TEST(FeatureProperties, ReplicationAndOrdering) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto hg = random_hypergraph(rng, 8, 20, 2, 6);
    const std::size_t size = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const auto c = random_candidate(rng, hg.node_count(), size);
    for (std::size_t n = 2; n <= std::min<std::size_t>(size, 4); ++n) {
      const auto pg = project(hg, n);
      std::vector<double> per_subset;
      for (const auto& s : subsets_of(c, n)) per_subset.push_back(static_cast<double>(oracle_weight(hg, s)));
      const double gm = mean_feature(pg, c, FeatureKind::kGM);
      const double hm = mean_feature(pg, c, FeatureKind::kHM);
      const double am = mean_feature(pg, c, FeatureKind::kAM);
      EXPECT_NEAR(gm, oracle_mean(per_subset, FeatureKind::kGM), 1e-9 * std::max(1.0, gm));
      EXPECT_NEAR(hm, oracle_mean(per_subset, FeatureKind::kHM), 1e-9 * std::max(1.0, hm));
      EXPECT_NEAR(am, oracle_mean(per_subset, FeatureKind::kAM), 1e-9 * std::max(1.0, am));
      const bool any_zero = std::find(per_subset.begin(), per_subset.end(), 0.0) != per_subset.end();
      EXPECT_EQ(gm == 0.0, any_zero);
      if (!any_zero) {
        EXPECT_LE(hm, gm * (1 + 1e-12));
        EXPECT_LE(gm, am * (1 + 1e-12));
      }
      const double jc = neighborhood_feature(pg, c, FeatureKind::kJC);
      EXPECT_GE(jc, 0.0);
      EXPECT_LE(jc, 1.0);
      const double cn = neighborhood_feature(pg, c, FeatureKind::kCN);
      EXPECT_EQ(cn, std::floor(cn));
      EXPECT_GE(neighborhood_feature(pg, c, FeatureKind::kAA), 0.0);
    }
  }
}

TEST(FeatureProperties, PermutationInvariance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto hg = random_hypergraph(rng, 10, 18, 2, 5);
    std::vector<NodeId> perm(hg.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Hyperedge> mapped;
    for (const auto& e : hg.edges()) {
      NodeSet s;
      for (NodeId v : e.nodes) s.push_back(perm[v]);
      std::sort(s.begin(), s.end());
      mapped.push_back({s, e.weight});
    }
    const Hypergraph relabeled(hg.node_count(), mapped);
    const auto c = random_candidate(rng, hg.node_count(), 4);
    NodeSet pc;
    for (NodeId v : c) pc.push_back(perm[v]);
    std::sort(pc.begin(), pc.end());
    const auto a = expand(hg, 3);
    const auto b = expand(relabeled, 3);
    for (auto kind : kAllFeatureKinds) {
      const auto va = feature_vector(a, c, kind);
      const auto vb = feature_vector(b, pc, kind);
      for (std::size_t i = 0; i < va.size(); ++i) EXPECT_NEAR(va[i], vb[i], 1e-9 * std::max(1.0, va[i]));
    }
  }
}

TEST(FeatureProperties, PairwiseMatchesClassicalScores) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto hg = random_hypergraph(rng, 12, 20, 2, 4);
    const auto pg = project(hg, 2);
    const auto c = random_candidate(rng, hg.node_count(), 2);
    std::vector<std::set<NodeId>> adj(hg.node_count());
    for (const auto& e : hg.edges()) {
      for (NodeId u : e.nodes) {
        for (NodeId v : e.nodes) {
          if (u != v) adj[u].insert(v);
        }
      }
    }
    std::set<NodeId> common, uni;
    for (NodeId v : adj[c[0]]) {
      if (adj[c[1]].contains(v)) common.insert(v);
    }
    uni = adj[c[0]];
    uni.insert(adj[c[1]].begin(), adj[c[1]].end());
    const bool empty = adj[c[0]].empty() || adj[c[1]].empty();
    double aa = 0.0;
    for (NodeId v : common) {
      if (adj[v].size() > 1) aa += 1.0 / std::log(static_cast<double>(adj[v].size()));
    }
    EXPECT_EQ(neighborhood_feature(pg, c, FeatureKind::kCN), empty ? 0.0 : common.size());
    EXPECT_NEAR(neighborhood_feature(pg, c, FeatureKind::kJC),
                empty ? 0.0 : static_cast<double>(common.size()) / uni.size(), 1e-12);
    EXPECT_NEAR(neighborhood_feature(pg, c, FeatureKind::kAA), empty ? 0.0 : aa, 1e-12);
  }
}

TEST(FeatureKinds, Names) {
  for (auto kind : kAllFeatureKinds) EXPECT_EQ(parse_feature_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_feature_kind("XX"), Error);
  EXPECT_TRUE(is_mean_feature(FeatureKind::kHM));
  EXPECT_FALSE(is_mean_feature(FeatureKind::kJC));
}

}  // namespace
}  // namespace hypex
