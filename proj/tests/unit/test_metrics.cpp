#include <gtest/gtest.h>

#include <cmath>

#include "ocn/metrics.hpp"
#include "ocn/oracle.hpp"
#include "ocn/rng.hpp"

namespace ocn {
namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return make(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v < n; ++v) e.push_back({v, static_cast<NodeId>((v + 1) % n)});
  return make(n, e);
}

Graph complete(std::size_t n) { return oracle::random_graph(n, 1.0, 0); }

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return make(leaves + 1, e);
}

// two triangles {0,1,2} and {3,4,5} joined by 2-3
Graph barbell() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }

TEST(Degrees, Star) {
  auto s = degree_stats(star(4));
  EXPECT_EQ(s.min, 1u);
  EXPECT_EQ(s.max, 4u);
  EXPECT_DOUBLE_EQ(s.mean, 1.6);
  auto h = degree_histogram(star(4));
  EXPECT_EQ(h.bins(), (std::map<std::uint64_t, std::uint64_t>{{1, 4}, {4, 1}}));
}

TEST(Clustering, SmallCases) {
  EXPECT_DOUBLE_EQ(*local_clustering(complete(3), 0), 1.0);
  EXPECT_DOUBLE_EQ(*local_clustering(path(3), 1), 0.0);
  EXPECT_FALSE(local_clustering(path(3), 0).has_value());
  EXPECT_THROW(local_clustering(path(3), 3), std::out_of_range);
}

TEST(Clustering, CompleteGraph) {
  EXPECT_DOUBLE_EQ(average_local_clustering(complete(4)), 1.0);
  EXPECT_DOUBLE_EQ(transitivity(complete(4)), 1.0);
  EXPECT_EQ(count_triangles(complete(4)).triangles, 4u);
}

TEST(Clustering, StarHasNoTriangles) {
  EXPECT_DOUBLE_EQ(transitivity(star(5)), 0.0);
  EXPECT_DOUBLE_EQ(average_local_clustering(star(5)), 0.0);
}

TEST(Clustering, ZeroFilledAverageCountsLowDegreeNodes) {
  // triangle plus a pendant: c = {1/3, 1, 1, none}
  Graph g = make(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  EXPECT_DOUBLE_EQ(average_local_clustering(g), (1.0 / 3 + 2) / 3);
  EXPECT_DOUBLE_EQ(average_local_clustering_zero_filled(g), (1.0 / 3 + 2) / 4);
}

TEST(Clustering, UndefinedCasesThrow) {
  EXPECT_THROW(average_local_clustering(path(2)), std::domain_error);
  EXPECT_THROW(transitivity(path(2)), std::domain_error);
}

TEST(Clustering, BarbellByDegreeMatchesOracle) {
  Graph g = barbell();
  auto byk = clustering_by_degree(g);
  auto ref = oracle::naive_metrics(g).clustering_by_degree;
  ASSERT_EQ(byk.per_degree.size(), ref.size());
  for (auto [k, c] : ref) EXPECT_NEAR(byk.per_degree.at(k).mean_clustering, c, 1e-12);
  EXPECT_NEAR(byk.per_degree.at(2).mean_clustering, 1.0, 1e-12);
  EXPECT_NEAR(byk.per_degree.at(3).mean_clustering, 1.0 / 3, 1e-12);
  EXPECT_EQ(byk.per_degree.at(2).nodes, 4u);
}

TEST(Hops, PathOfFour) {
  auto h = hop_distribution(path(4), HopMode::all_pairs(), 1);
  EXPECT_DOUBLE_EQ(h.pair_counts[1], 3);
  EXPECT_DOUBLE_EQ(h.pair_counts[2], 2);
  EXPECT_DOUBLE_EQ(h.pair_counts[3], 1);
  EXPECT_DOUBLE_EQ(h.connected_pairs, 6);
  EXPECT_DOUBLE_EQ(h.cumulative[1], 0.5);
  EXPECT_DOUBLE_EQ(h.cumulative[2], 5.0 / 6);
  EXPECT_DOUBLE_EQ(h.cumulative[3], 1.0);
  EXPECT_NEAR(h.mean_distance, 5.0 / 3, 1e-12);
  EXPECT_NEAR(h.direct_mean_distance, 5.0 / 3, 1e-12);
  EXPECT_EQ(h.max_distance_observed, 3u);
}

TEST(Hops, FiveCycle) {
  auto h = hop_distribution(cycle(5), HopMode::all_pairs());
  EXPECT_NEAR(h.mean_distance, 1.5, 1e-12);
  EXPECT_NEAR(h.pmf(1) + h.pmf(2), 1.0, 1e-12);
}

TEST(Hops, DisconnectedPairsAreExcluded) {
  Graph g = make(5, {{0, 1}, {2, 3}});
  auto h = hop_distribution(g, HopMode::all_pairs());
  EXPECT_DOUBLE_EQ(h.connected_pairs, 2);
  EXPECT_DOUBLE_EQ(h.mean_distance, 1.0);
}

TEST(Hops, BadSourceCountThrows) {
  EXPECT_THROW(hop_distribution(path(4), HopMode::sampled(0, 1)), std::invalid_argument);
  EXPECT_THROW(hop_distribution(path(4), HopMode::sampled(5, 1)), std::invalid_argument);
}

TEST(HopProperties, SampledWithAllSourcesEqualsExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::random_graph(40, 0.08, seed);
    auto exact = hop_distribution(g, HopMode::all_pairs(), 1);
    auto sampled = hop_distribution(g, HopMode::sampled(40, seed + 1), 2);
    ASSERT_EQ(exact.pair_counts.size(), sampled.pair_counts.size());
    for (std::size_t d = 0; d < exact.pair_counts.size(); ++d)
      EXPECT_NEAR(exact.pair_counts[d], sampled.pair_counts[d], 1e-9);
    EXPECT_NEAR(exact.mean_distance, sampled.mean_distance, 1e-12);
  }
}

TEST(HopProperties, SampledIsDeterministicPerSeedAndThreadCount) {
  Graph g = oracle::random_graph(300, 0.02, 3);
  auto a = hop_distribution(g, HopMode::sampled(50, 11), 1);
  auto b = hop_distribution(g, HopMode::sampled(50, 11), 3);
  EXPECT_EQ(a.sources, b.sources);
  EXPECT_EQ(a.pair_counts, b.pair_counts);
  EXPECT_DOUBLE_EQ(a.direct_mean_distance, b.direct_mean_distance);
  auto c = hop_distribution(g, HopMode::sampled(50, 12), 1);
  EXPECT_NE(a.sources, c.sources);
}

TEST(HopProperties, BinMeanAgreesWithDirectMean) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::random_graph(200, 0.03, seed);
    auto h = hop_distribution(g, HopMode::sampled(30, seed), 1);
    EXPECT_NEAR(h.mean_distance, h.direct_mean_distance, 1e-9);
  }
}

TEST(Diameter, SmallGraphs) {
  EXPECT_EQ(diameter(cycle(5)).value, 2u);
  EXPECT_EQ(diameter(path(4)).value, 3u);
  EXPECT_EQ(diameter(complete(5)).value, 1u);
  EXPECT_EQ(diameter(star(6)).value, 2u);
  // K4 minus one edge still has diameter 2
  EXPECT_EQ(diameter(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})).value, 2u);
}

TEST(Diameter, DisconnectedTakesLargestComponentDiameter) {
  Graph g = make(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}});
  auto d = diameter(g);
  EXPECT_FALSE(d.connected);
  EXPECT_EQ(d.value, 3u);
}

TEST(Diameter, EmptyGraphThrows) { EXPECT_THROW(diameter(Graph{}), std::domain_error); }

TEST(Assortativity, StarIsPerfectlyDisassortative) { EXPECT_NEAR(assortativity(star(3)), -1.0, 1e-12); }

TEST(Assortativity, PathOfFour) { EXPECT_NEAR(assortativity(path(4)), -0.5, 1e-12); }

TEST(Assortativity, RegularGraphIsUndefined) {
  EXPECT_THROW(assortativity(cycle(6)), std::domain_error);
  EXPECT_THROW(assortativity(make(3, {})), std::domain_error);
}

// Every fast metric against the brute-force oracle on random graphs.
TEST(OracleEquivalence, RandomGraphs) {
  Xoshiro256 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + rng.below(80);
    const double p = 0.02 + 0.3 * rng.uniform();
    Graph g = oracle::random_graph(n, p, 1000 + trial);
    auto ref = oracle::naive_metrics(g);
    SCOPED_TRACE("trial " + std::to_string(trial));

    auto tri = count_triangles(g, 1 + trial % 3);
    EXPECT_EQ(tri.triangles, ref.triangles);
    EXPECT_EQ(tri.wedges, ref.wedges);
    for (NodeId v = 0; v < n; ++v) {
      auto c = local_clustering(g, v);
      ASSERT_EQ(c.has_value(), ref.clustering[v].has_value());
      if (c) EXPECT_NEAR(*c, *ref.clustering[v], 1e-12);
    }
    if (ref.average_clustering) EXPECT_NEAR(average_local_clustering(g), *ref.average_clustering, 1e-12);
    EXPECT_NEAR(average_local_clustering_zero_filled(g), ref.average_clustering_zero_filled, 1e-12);
    if (ref.transitivity) EXPECT_NEAR(transitivity(g), *ref.transitivity, 1e-12);
    if (ref.assortativity) EXPECT_NEAR(assortativity(g), *ref.assortativity, 1e-9);

    if (g.edge_count() == 0) continue;
    EXPECT_EQ(diameter(g).value, ref.diameter);
    auto h = hop_distribution(g, HopMode::all_pairs());
    for (auto [d, count] : ref.distance_counts) EXPECT_DOUBLE_EQ(h.pair_counts.at(d), static_cast<double>(count));
    if (ref.mean_path) {
      EXPECT_NEAR(h.mean_distance, *ref.mean_path, 1e-12);
      EXPECT_NEAR(h.direct_mean_distance, *ref.mean_path, 1e-12);
    }
  }
}

TEST(AnalyzeGraph, SummaryIsConsistent) {
  Graph g = barbell();
  auto m = analyze_graph(g, {});
  EXPECT_EQ(m.summary.nodes, 6u);
  EXPECT_EQ(m.summary.edges, 7u);
  EXPECT_EQ(m.summary.triangles, 2u);
  EXPECT_EQ(m.summary.diameter.value, 3u);
  ASSERT_TRUE(m.summary.density.has_value());
  EXPECT_NEAR(m.summary.density->undirected, 14.0 / 30, 1e-12);
  auto ref = oracle::naive_metrics(g);
  EXPECT_NEAR(m.summary.average_shortest_path, *ref.mean_path, 1e-12);
  EXPECT_NEAR(*m.summary.average_local_clustering, *ref.average_clustering, 1e-12);
  EXPECT_NEAR(*m.summary.assortativity, *ref.assortativity, 1e-12);
  EXPECT_EQ(m.degrees.total(), 6u);
}

}  // namespace
}  // namespace ocn
