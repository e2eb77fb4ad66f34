#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypex/diagnostics.hpp"
#include "hypex/error.hpp"
#include "test_support.hpp"

namespace hypex {
namespace {

using testing::make_hypergraph;
using testing::random_hypergraph;

int oracle_bin(Weight w) {
  // Smallest k with 2^k >= w + 1, capped at 9.
  int k = 0;
  while ((Weight{1} << k) < w + 1) ++k;
  return std::min(k, 9);
}

TripleSample cell(std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t w3) {
  TripleSample s;
  s.w2 = {a, b, c};
  s.w3 = w3;
  return s;
}

JointHistogram random_histogram(std::mt19937_64& rng) {
  JointHistogram h;
  std::uniform_int_distribution<int> bin(0, 9);
  const int cells = std::uniform_int_distribution<int>(1, 40)(rng);
  for (int i = 0; i < cells; ++i) {
    const auto s = cell(bin(rng), bin(rng), bin(rng), bin(rng));
    h.add(s, std::uniform_int_distribution<std::uint64_t>(1, 1000)(rng));
  }
  return h;
}

TEST(BinWeight, Examples) {
  EXPECT_EQ(bin_weight(0), 0);
  EXPECT_EQ(bin_weight(1), 1);
  EXPECT_EQ(bin_weight(7), 3);
  EXPECT_EQ(bin_weight(8), 4);
  EXPECT_EQ(bin_weight(1'000'000), 9);
}

TEST(BinWeight, MatchesFormulaMonotoneSurjective) {
  int prev = 0;
  std::set<int> seen;
  for (Weight w = 0; w <= (1u << 15); ++w) {
    const int b = bin_weight(w);
    ASSERT_EQ(b, oracle_bin(w)) << w;
    ASSERT_GE(b, prev);
    prev = b;
    seen.insert(b);
  }
  EXPECT_EQ(seen.size(), 10u);
}

TEST(EdgeDensity, Examples) {
  EXPECT_DOUBLE_EQ(edge_density_3pg(project(make_hypergraph(3, {{{0, 1, 2}, 1}}), 3), 3), 100.0);
  EXPECT_EQ(edge_density_3pg(project(make_hypergraph(6, {{{0, 1}, 1}}), 3), 6), 0.0);
  const auto four = make_hypergraph(6, {{{0, 1, 2, 3}, 1}});
  EXPECT_DOUBLE_EQ(edge_density_3pg(project(four, 3), 6), 20.0);
  EXPECT_THROW(edge_density_3pg(project(four, 3), 2), Error);
}

TEST(EdgeDensity, WithinBounds) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto hg = random_hypergraph(rng);
    const double d = edge_density_3pg(project(hg, 3), hg.node_count());
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 100.0);
  }
}

TEST(MutualInformation, Examples) {
  JointHistogram product;
  for (std::uint8_t a = 0; a < 3; ++a) {
    for (std::uint8_t w3 = 0; w3 < 2; ++w3) product.add(cell(a, a, a, w3), (a + 1) * (w3 + 2));
  }
  EXPECT_NEAR(mutual_information(product), 0.0, 1e-12);

  JointHistogram bijective;
  for (std::uint8_t i = 0; i < 4; ++i) bijective.add(cell(i, 0, 0, i), 25);
  EXPECT_NEAR(mutual_information(bijective), 2.0, 1e-12);
  EXPECT_NEAR(bijective.entropy_w3(), 2.0, 1e-12);
  EXPECT_NEAR(conditional_entropy(bijective), 0.0, 1e-12);

  JointHistogram single;
  single.add(cell(1, 2, 3, 4), 10);
  EXPECT_EQ(mutual_information(single), 0.0);
  EXPECT_EQ(conditional_entropy(single), 0.0);

  JointHistogram coin;
  for (std::uint8_t a = 0; a < 5; ++a) {
    coin.add(cell(a, 0, 0, 0), 3);
    coin.add(cell(a, 0, 0, 1), 3);
  }
  EXPECT_NEAR(conditional_entropy(coin), 1.0, 1e-12);
  EXPECT_THROW(mutual_information(JointHistogram{}), Error);
}

TEST(MutualInformation, IdentitiesOnRandomHistograms) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const auto h = random_histogram(rng);
    const double mi = mutual_information(h);
    const double ce = conditional_entropy(h);
    EXPECT_NEAR(mi + ce, h.entropy_w3(), 1e-12);
    EXPECT_GE(mi, 0.0);
    EXPECT_GE(ce, 0.0);
    EXPECT_LE(mi, std::min(h.entropy_w2(), h.entropy_w3()) + 1e-12);
  }
}

TEST(JointHistogram, MergeIsCellwiseSum) {
  std::mt19937_64 rng(14);
  const auto a = random_histogram(rng);
  const auto b = random_histogram(rng);
  JointHistogram ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab.cells(), ba.cells());
  EXPECT_EQ(ab.total(), a.total() + b.total());
}

TEST(SampleTriples, EmptyGraphGivesZeroCell) {
  const Hypergraph hg(10, {});
  const auto h = sample_triples(project(hg, 2), project(hg, 3), 10, 500, 1);
  ASSERT_EQ(h.cells().size(), 1u);
  EXPECT_EQ(h.cells().begin()->first, cell(0, 0, 0, 0));
  EXPECT_EQ(h.total(), 500u);
}

TEST(SampleTriples, CompleteUniformWeightsGiveOneCell) {
  const auto hg = make_hypergraph(6, {{{0, 1, 2, 3, 4, 5}, 3}});
  const auto h = sample_triples(project(hg, 2), project(hg, 3), 6, 1000, 2);
  ASSERT_EQ(h.cells().size(), 1u);
  EXPECT_EQ(h.cells().begin()->first, cell(2, 2, 2, 2));
}

TEST(SampleTriples, DeterministicAndCanonical) {
  std::mt19937_64 rng(15);
  const auto hg = random_hypergraph(rng, 12, 20);
  const auto pg2 = project(hg, 2), pg3 = project(hg, 3);
  const auto a = sample_triples(pg2, pg3, hg.node_count(), 5000, 9);
  EXPECT_EQ(a.cells(), sample_triples(pg2, pg3, hg.node_count(), 5000, 9).cells());
  for (const auto& [s, c] : a.cells()) EXPECT_TRUE(std::is_sorted(s.w2.begin(), s.w2.end()));
  TripleSamplingOptions unsorted;
  unsorted.sort_w2 = false;
  const auto u = sample_triples(pg2, pg3, hg.node_count(), 5000, 9, unsorted);
  EXPECT_EQ(u.total(), 5000u);
  EXPECT_NEAR(u.entropy_w3(), a.entropy_w3(), 1e-12);
  EXPECT_THROW(sample_triples(pg3, pg2, hg.node_count(), 10, 1), Error);
  EXPECT_THROW(sample_triples(pg2, pg3, hg.node_count(), 0, 1), Error);
}

// Every sampled triple's binned weights must agree with direct lookups.
TEST(SampleTriples, CellsMatchLookups) {
  const auto hg = make_hypergraph(4, {{{0, 1, 2}, 2}, {{0, 1}, 5}, {{2, 3}, 1}});
  const auto h = sample_triples(project(hg, 2), project(hg, 3), 4, 4000, 3);
  // Pair weights 01->7, 02->2, 12->2, 23->1 bin to 3, 2, 2, 1; 012 bins to 2.
  std::set<TripleSample> expected{cell(2, 2, 3, 2), cell(0, 0, 3, 0), cell(0, 1, 2, 0)};
  std::set<TripleSample> got;
  for (const auto& [s, c] : h.cells()) got.insert(s);
  EXPECT_EQ(got, expected);
}

TEST(Diagnostics, ReportJsonRoundTrip) {
  std::mt19937_64 rng(16);
  const auto hg = random_hypergraph(rng, 12, 20);
  const auto r = compute_diagnostics(project(hg, 2), project(hg, 3), hg.node_count(), 2000, 4);
  EXPECT_EQ(r.num_samples, 2000u);
  const auto j = to_json(r);
  EXPECT_EQ(to_json(diagnostics_from_json(j)).dump(), j.dump());
  EXPECT_THROW(diagnostics_from_json(nlohmann::json::object()), Error);
}

}  // namespace
}  // namespace hypex
