#include <gtest/gtest.h>

#include <set>

#include "ocn/oracle.hpp"

namespace ocn {
namespace {

TEST(NaiveMetrics, Triangle) {
  Graph g = oracle::random_graph(3, 1.0, 0);
  auto r = oracle::naive_metrics(g);
  EXPECT_EQ(r.triangles, 1u);
  EXPECT_EQ(r.wedges, 3u);
  EXPECT_DOUBLE_EQ(*r.average_clustering, 1.0);
  EXPECT_DOUBLE_EQ(*r.transitivity, 1.0);
  EXPECT_EQ(r.diameter, 1u);
  EXPECT_FALSE(r.assortativity.has_value());
}

TEST(NaiveMetrics, PathOfFour) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}};
  auto r = oracle::naive_metrics(Graph::from_edges(4, edges));
  EXPECT_EQ(r.distance(0, 3), 3);
  EXPECT_EQ(r.distance_counts, (std::map<std::uint32_t, std::uint64_t>{{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_NEAR(*r.mean_path, 5.0 / 3, 1e-12);
  EXPECT_NEAR(*r.assortativity, -0.5, 1e-12);
  EXPECT_EQ(r.diameter, 3u);
}

TEST(NaiveMetrics, Edgeless) {
  auto r = oracle::naive_metrics(Graph::from_edges(3, {}));
  EXPECT_EQ(r.distance(0, 1), oracle::kNoPath);
  EXPECT_FALSE(r.mean_path.has_value());
  EXPECT_FALSE(r.average_clustering.has_value());
  EXPECT_FALSE(r.transitivity.has_value());
  EXPECT_DOUBLE_EQ(r.average_clustering_zero_filled, 0.0);
}

TEST(NaiveMetrics, RefusesLargeGraphs) {
  EXPECT_THROW(oracle::naive_metrics(Graph::from_edges(oracle::kMaxOracleNodes + 1, {})), std::length_error);
}

TEST(RandomGraph, DeterministicPerSeed) {
  EXPECT_EQ(oracle::random_graph(50, 0.1, 5), oracle::random_graph(50, 0.1, 5));
  EXPECT_NE(oracle::random_graph(50, 0.1, 5), oracle::random_graph(50, 0.1, 6));
}

TEST(RandomGraph, Extremes) {
  EXPECT_EQ(oracle::random_graph(5, 1.0, 1).edge_count(), 10u);
  EXPECT_EQ(oracle::random_graph(5, 0.0, 1).edge_count(), 0u);
}

TEST(RandomCover, FixedSizesAreCycled) {
  auto cover = oracle::random_cover(20, 5, oracle::SizeLaw::fixed({2, 4}), 3);
  ASSERT_EQ(cover.community_count(), 5u);
  const std::size_t expected[] = {2, 4, 2, 4, 2};
  for (CommunityId c = 0; c < 5; ++c) {
    EXPECT_EQ(cover.members(c).size(), expected[c]);
    std::set<NodeId> unique(cover.members(c).begin(), cover.members(c).end());
    EXPECT_EQ(unique.size(), expected[c]);
  }
}

TEST(RandomCover, SizesStayInBounds) {
  auto cover = oracle::random_cover(100, 200, oracle::SizeLaw::power_law(2.5, 2, 30), 4);
  for (const auto& members : cover.communities()) {
    EXPECT_GE(members.size(), 2u);
    EXPECT_LE(members.size(), 30u);
  }
  EXPECT_EQ(cover, oracle::random_cover(100, 200, oracle::SizeLaw::power_law(2.5, 2, 30), 4));
}

TEST(RandomCover, OversizedCommunityThrows) {
  EXPECT_THROW(oracle::random_cover(5, 1, oracle::SizeLaw::fixed({6}), 1), std::invalid_argument);
  EXPECT_THROW(oracle::random_cover(5, 1, oracle::SizeLaw::fixed({0}), 1), std::invalid_argument);
}

TEST(BruteForceOverlaps, Toy) {
  auto cover = CommunityCover::from_communities(5, {{0, 1, 2}, {1, 2, 3}, {4}});
  auto pairs = oracle::brute_force_overlaps(cover);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], (OverlapPair{0, 1, 2}));
}

}  // namespace
}  // namespace ocn
