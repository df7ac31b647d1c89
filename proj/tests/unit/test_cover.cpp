#include <gtest/gtest.h>

#include <sstream>

#include "ocn/cover.hpp"
#include "ocn/oracle.hpp"

namespace ocn {
namespace {

Graph labelled_path(std::size_t n) {
  // labels 1..n on a path, so cover files can name them
  std::vector<Edge> edges;
  std::vector<Label> labels;
  for (NodeId v = 0; v < n; ++v) {
    labels.push_back(static_cast<Label>(v) + 1);
    if (v + 1 < n) edges.push_back({v, v + 1});
  }
  return Graph::from_edges(n, edges, labels);
}

LoadedCover parse(const std::string& text, const Graph& g, CoverParseOptions opts = {}) {
  std::istringstream in(text);
  return parse_cover(in, g, opts);
}

// A = {1,2,3}, B = {2,3,4}, C = {5}
CommunityCover toy_cover() {
  return CommunityCover::from_communities(5, {{0, 1, 2}, {1, 2, 3}, {4}});
}

TEST(CommunityCover, BuildsBothIndexes) {
  auto cover = toy_cover();
  EXPECT_EQ(cover.community_count(), 3u);
  EXPECT_EQ(cover.memberships(1), (std::vector<CommunityId>{0, 1}));
  EXPECT_EQ(cover.memberships(4), (std::vector<CommunityId>{2}));
  EXPECT_EQ(cover.membership_number(2), 2u);
  EXPECT_EQ(cover.max_membership_number(), 2u);
}

TEST(CommunityCover, DeduplicatesMembers) {
  std::size_t dups = 0;
  auto cover = CommunityCover::from_communities(4, {{3, 1, 1, 3, 2}}, &dups);
  EXPECT_EQ(cover.members(0), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(dups, 2u);
}

TEST(CommunityCover, RejectsEmptyAndOutOfRange) {
  EXPECT_THROW(CommunityCover::from_communities(3, {{}}), std::invalid_argument);
  EXPECT_THROW(CommunityCover::from_communities(3, {{0, 3}}), std::out_of_range);
}

TEST(ParseCover, ResolvesLabels) {
  Graph g = labelled_path(5);
  auto loaded = parse("1 2 3\n2 3 4\n5\n", g);
  EXPECT_EQ(loaded.cover, toy_cover());
  EXPECT_EQ(loaded.summary.communities, 3u);
}

TEST(ParseCover, SkipsCommentsAndEmptyLines) {
  Graph g = labelled_path(3);
  auto loaded = parse("# header\n\n1\t2\n   \n3 3\n", g);
  EXPECT_EQ(loaded.cover.community_count(), 2u);
  EXPECT_EQ(loaded.summary.duplicates_dropped, 1u);
  EXPECT_EQ(loaded.summary.empty_lines_skipped, 2u);
}

TEST(ParseCover, UnknownIdIsAnErrorWithLine) {
  Graph g = labelled_path(3);
  try {
    parse("1 2\n2 99\n", g);
    FAIL() << "expected CoverError";
  } catch (const CoverError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseCover, UnknownIdsCanBeIgnored) {
  Graph g = labelled_path(3);
  auto loaded = parse("1 2 99\n98\n3\n", g, {.ignore_unknown_ids = true});
  EXPECT_EQ(loaded.cover.community_count(), 2u);
  EXPECT_EQ(loaded.summary.unknown_ids_dropped, 2u);
  EXPECT_EQ(loaded.cover.members(0), (std::vector<NodeId>{0, 1}));
}

TEST(ParseCover, MalformedTokenIsAnError) {
  Graph g = labelled_path(3);
  EXPECT_THROW(parse("1 b\n", g), CoverError);
}

TEST(ParseCover, MissingFileIsInputError) {
  Graph g = labelled_path(3);
  EXPECT_THROW(load_cover("/nonexistent/cover.txt", g), InputError);
}

TEST(Histograms, ToyCover) {
  auto cover = toy_cover();
  auto m = membership_histogram(cover);
  EXPECT_EQ(m.histogram.count(1), 3u);
  EXPECT_EQ(m.histogram.count(2), 2u);
  EXPECT_EQ(m.unassigned_nodes, 0u);

  auto sizes = community_size_histogram(cover);
  EXPECT_EQ(sizes.count(3), 2u);
  EXPECT_EQ(sizes.count(1), 1u);
}

TEST(Histograms, UnassignedNodesAreCountedSeparately) {
  auto cover = CommunityCover::from_communities(6, {{0, 1}});
  auto m = membership_histogram(cover);
  EXPECT_EQ(m.histogram.total(), 2u);
  EXPECT_EQ(m.unassigned_nodes, 4u);
}

TEST(Overlaps, ToyCover) {
  auto cover = toy_cover();
  auto pairs = overlap_pairs(cover, 1);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], (OverlapPair{0, 1, 2}));
  auto hist = overlap_size_histogram(cover, 1);
  EXPECT_EQ(hist.bins(), (std::map<std::uint64_t, std::uint64_t>{{2, 1}}));
  EXPECT_EQ(membership_pair_count(cover), 2u);
}

TEST(Overlaps, DisjointCoverHasNone) {
  auto cover = CommunityCover::from_communities(4, {{0, 1}, {2}, {3}});
  EXPECT_TRUE(overlap_pairs(cover).empty());
  EXPECT_TRUE(overlap_size_histogram(cover).empty());
}

TEST(OverlapProperties, CountingIdentityAndBruteForce) {
  const oracle::SizeLaw laws[] = {oracle::SizeLaw::uniform(1, 12), oracle::SizeLaw::power_law(2.2, 2, 40),
                                  oracle::SizeLaw::fixed({3, 5, 8})};
  std::uint64_t seed = 100;
  for (const auto& law : laws) {
    for (int trial = 0; trial < 15; ++trial, ++seed) {
      auto cover = oracle::random_cover(60, 40, law, seed);
      const auto expected = oracle::brute_force_overlaps(cover);
      for (unsigned threads : {1u, 3u}) {
        EXPECT_EQ(overlap_pairs(cover, threads), expected) << "seed " << seed << " threads " << threads;
      }
      // sum over pairs of |Ci ∩ Cj| == sum over nodes of C(m_v, 2)
      std::uint64_t shared = 0;
      for (const auto& p : expected) shared += p.shared;
      std::uint64_t pairs = 0;
      for (NodeId v = 0; v < cover.node_count(); ++v) {
        const std::uint64_t m = cover.membership_number(v);
        pairs += m * (m - (m > 0 ? 1 : 0)) / 2;
      }
      EXPECT_EQ(shared, pairs);
      EXPECT_EQ(membership_pair_count(cover), pairs);

      std::uint64_t hist_sum = 0;
      const auto hist = overlap_size_histogram(cover, 2);
      for (auto [size, count] : hist.bins()) hist_sum += size * count;
      EXPECT_EQ(hist_sum, pairs);
    }
  }
}

TEST(IntegerHistogram, CsvAndExpand) {
  IntegerHistogram h;
  h.add(3, 2);
  h.add(1);
  h.add(7, 0);
  EXPECT_EQ(h.total(), 3u);
  EXPECT_EQ(h.expand(), (std::vector<double>{1, 3, 3}));
  std::ostringstream out;
  h.write_csv(out);
  EXPECT_EQ(out.str(), "value,count\n1,1\n3,2\n");
}

}  // namespace
}  // namespace ocn
