#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "hypex/error.hpp"
#include "hypex/projection.hpp"
#include "test_support.hpp"

namespace hypex {
namespace {

using testing::make_hypergraph;
using testing::oracle_neighbors;
using testing::oracle_weight;
using testing::random_hypergraph;
using testing::subsets_of;

Hypergraph example() { return make_hypergraph(4, {{{0, 1, 2}, 1}, {{0, 1, 2, 3}, 1}}); }

TEST(Project, WorkedExampleOrder3) {
  const auto pg = project(example(), 3);
  EXPECT_EQ(pg.subset_count(), 4u);
  EXPECT_EQ(pg.subset_weight(SubsetKey{0, 1, 2}), 2u);
  EXPECT_EQ(pg.subset_weight(SubsetKey{0, 1, 3}), 1u);
  EXPECT_EQ(pg.subset_weight(SubsetKey{0, 2, 3}), 1u);
  EXPECT_EQ(pg.subset_weight(SubsetKey{1, 2, 3}), 1u);
  EXPECT_EQ(pg.edge_count(), 12u);
}

TEST(Project, SubsetWeightLookup) {
  const auto pg = project(make_hypergraph(5, {{{0, 1, 2}, 1}}), 3);
  EXPECT_EQ(pg.subset_weight(SubsetKey{0, 1, 3}), 0u);
  EXPECT_THROW(pg.subset_weight(SubsetKey{0, 1}), Error);
}

TEST(Project, PairsOnlyGiveEmptyOrder3) {
  const auto pg = project(make_hypergraph(3, {{{0, 1}, 1}, {{1, 2}, 4}}), 3);
  EXPECT_TRUE(pg.empty());
  EXPECT_EQ(pg.edge_count(), 0u);
}

TEST(Project, OrderBelowTwoIsRejected) {
  EXPECT_THROW(project(example(), 1), Error);
}

TEST(Project, MemoryGuard) {
  ProjectionOptions opts;
  opts.max_subsets = 3;
  try {
    project(example(), 3, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(FacetNeighbors, WorkedExample) {
  const auto pg = project(example(), 3);
  const auto nb = pg.facet_neighbors(SubsetKey{0, 1});
  const std::vector<SubsetKey> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  EXPECT_EQ(nb, expected);
}

TEST(FacetNeighbors, InactiveFacetAndWrongSize) {
  const auto pg = project(make_hypergraph(5, {{{0, 1, 2}, 1}}), 3);
  EXPECT_TRUE(pg.facet_neighbors(SubsetKey{3, 4}).empty());
  EXPECT_THROW(pg.facet_neighbors(SubsetKey{0}), Error);
}

TEST(FacetNeighbors, PairwiseSingleEdge) {
  const auto pg = project(make_hypergraph(2, {{{0, 1}, 1}}), 2);
  const std::vector<SubsetKey> expected{{1}};
  EXPECT_EQ(pg.facet_neighbors(SubsetKey{0}), expected);
}

TEST(ProjectBruteforce, EmptyAndOversizedOrder) {
  const Hypergraph empty(4, {});
  EXPECT_TRUE(project_bruteforce(empty, 2).empty());
  EXPECT_TRUE(project(empty, 2).empty());
  EXPECT_TRUE(project_bruteforce(example(), 5).empty());
  EXPECT_TRUE(project(example(), 5).empty());
}

TEST(ProjectBruteforce, BlowupGuard) {
  const Hypergraph hg(40, {{{0, 1}, 1}});
  EXPECT_THROW(project_bruteforce(hg, 4, 100), Error);
}

TEST(Expand, ConsecutiveOrders) {
  const auto exp2 = expand(example(), 2);
  EXPECT_EQ(exp2.graphs().size(), 1u);
  EXPECT_EQ(exp2.graph(2).order(), 2u);
  const auto exp4 = expand(example(), 4);
  EXPECT_EQ(exp4.max_order(), 4u);
  EXPECT_EQ(exp4.graph(4).subset_count(), 1u);
  EXPECT_THROW(exp4.graph(5), Error);
  EXPECT_THROW(expand(example(), 1), Error);
}

TEST(Expand, NineOrdersForSizeTen) {
  NodeSet e(10);
  for (NodeId v = 0; v < 10; ++v) e[v] = v;
  const auto exp = expand(make_hypergraph(10, {{e, 1}}), 9);
  EXPECT_EQ(exp.graphs().size(), 8u);
  EXPECT_EQ(exp.graph(9).subset_count(), 10u);
}

// Toy hypergraph with the shape used in the classic illustration: one
// 4-node hyperedge and overlapping triangles and pairs.
TEST(Expand, IllustrationIncidence) {
  const auto hg = make_hypergraph(6, {{{0, 1, 2, 3}, 1}, {{2, 3, 4}, 1}, {{4, 5}, 1}});
  const auto exp = expand(hg, 4);
  EXPECT_EQ(exp.graph(2).subset_count(), 6u + 2u + 1u);
  EXPECT_EQ(exp.graph(3).subset_count(), 4u + 1u);
  EXPECT_EQ(exp.graph(3).subset_weight(SubsetKey{2, 3, 4}), 1u);
  EXPECT_EQ(exp.graph(4).subset_count(), 1u);
  EXPECT_EQ(exp.graph(4).edge_count(), 6u);
}

TEST(ProjectProperties, OracleEquivalence) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto hg = random_hypergraph(rng);
    for (std::size_t n = 2; n <= 5; ++n) {
      ASSERT_EQ(project(hg, n), project_bruteforce(hg, n)) << "trial " << trial << " n " << n;
    }
  }
}

TEST(ProjectProperties, WeightsMatchDefinition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto hg = random_hypergraph(rng, 9);
    std::vector<NodeId> all(hg.node_count());
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto pg = project(hg, n);
      std::size_t active = 0;
      for (const auto& s : subsets_of(all, n)) {
        const Weight w = oracle_weight(hg, s);
        EXPECT_EQ(pg.subset_weight(s), w);
        if (w > 0) ++active;
      }
      EXPECT_EQ(pg.subset_count(), active);
    }
  }
}

TEST(ProjectProperties, ConservationDivisibilityMonotoneSupport) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto hg = random_hypergraph(rng, 12, 20, 2, 6);
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto pg = project(hg, n);
      Weight expected = 0;
      for (const auto& e : hg.edges()) {
        if (e.nodes.size() >= n) expected += e.weight * binomial(e.nodes.size(), n);
      }
      EXPECT_EQ(pg.total_weight(), expected);
      EXPECT_EQ(pg.edge_count() % binomial(n, 2), 0u);
      if (n >= 3) {
        const auto lower = project(hg, n - 1);
        for (const auto& s : pg.subsets()) {
          for (std::size_t i = 0; i < n; ++i) EXPECT_GT(lower.subset_weight(s.without(i)), 0u);
        }
      }
    }
  }
}

TEST(ProjectProperties, PairwiseIsCliqueExpansion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto hg = random_hypergraph(rng);
    std::map<std::pair<NodeId, NodeId>, Weight> counts;
    for (const auto& e : hg.edges()) {
      for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < e.nodes.size(); ++j) counts[{e.nodes[i], e.nodes[j]}] += e.weight;
      }
    }
    const auto pg = project(hg, 2);
    ASSERT_EQ(pg.subset_count(), counts.size());
    for (const auto& [pair, w] : counts) EXPECT_EQ(pg.subset_weight(SubsetKey{pair.first, pair.second}), w);
  }
}

TEST(ProjectProperties, NeighborsMatchDefinitionAndIndex) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const auto hg = random_hypergraph(rng, 8, 10, 2, 5);
    std::vector<NodeId> all(hg.node_count());
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto pg = project(hg, n);
      for (const auto& f : subsets_of(all, n - 1)) {
        std::set<NodeSet> got;
        for (const auto& k : pg.facet_neighbors(f)) got.insert(k.to_node_set());
        EXPECT_EQ(got, oracle_neighbors(hg, f, n));

        std::set<NodeSet> containing;
        for (const auto idx : pg.subsets_containing(SubsetKey(f))) {
          containing.insert(pg.subsets()[idx].to_node_set());
        }
        std::set<NodeSet> expected;
        for (const auto& s : pg.subsets()) {
          if (std::includes(s.begin(), s.end(), f.begin(), f.end())) expected.insert(s.to_node_set());
        }
        EXPECT_EQ(containing, expected);
      }
    }
  }
}

TEST(ProjectProperties, Deterministic) {
  std::mt19937_64 rng(3);
  const auto hg = random_hypergraph(rng, 12, 20);
  const auto a = project(hg, 3);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(project(hg, 3), a);
}

TEST(ProjectionCache, RoundTripIsBitExact) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto hg = random_hypergraph(rng);
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto pg = project(hg, n);
      std::stringstream buf;
      write_projection(buf, pg);
      const std::string text = buf.str();
      const auto back = read_projection(buf, hg.node_count());
      EXPECT_EQ(back, pg);
      std::ostringstream again;
      write_projection(again, back);
      EXPECT_EQ(again.str(), text);
    }
  }
}

TEST(ProjectionCache, HeaderFormatAndErrors) {
  std::ostringstream out;
  write_projection(out, project(example(), 3));
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "n 3 4");
  std::istringstream bad("n 3 2\n0 1 2 1\n");
  EXPECT_THROW(read_projection(bad, 4), Error);
  std::istringstream garbage("x y z");
  EXPECT_THROW(read_projection(garbage, 4), Error);
}

}  // namespace
}  // namespace hypex
