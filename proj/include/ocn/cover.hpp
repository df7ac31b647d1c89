#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocn/graph.hpp"
#include "ocn/histogram.hpp"

namespace ocn {

using CommunityId = std::uint32_t;

/// A set of possibly overlapping communities over the nodes of a graph,
/// indexed both ways: community -> members and node -> communities.
class CommunityCover {
 public:
  CommunityCover() = default;

  /// Members are sorted and deduplicated; `duplicates_dropped` (if given)
  /// receives the number of repeated ids removed. Throws on an empty
  /// community or a member id >= node_count.
  static CommunityCover from_communities(std::size_t node_count,
                                         std::vector<std::vector<NodeId>> communities,
                                         std::size_t* duplicates_dropped = nullptr);

  std::size_t community_count() const { return communities_.size(); }
  std::size_t node_count() const { return memberships_.size(); }

  const std::vector<NodeId>& members(CommunityId c) const { return communities_[c]; }
  const std::vector<CommunityId>& memberships(NodeId v) const { return memberships_[v]; }
  const std::vector<std::vector<NodeId>>& communities() const { return communities_; }

  /// Number of communities containing v.
  std::size_t membership_number(NodeId v) const { return memberships_[v].size(); }
  std::size_t max_membership_number() const;

  friend bool operator==(const CommunityCover&, const CommunityCover&) = default;

 private:
  std::vector<std::vector<NodeId>> communities_;
  std::vector<std::vector<CommunityId>> memberships_;
};

class CoverError : public InputError {
 public:
  CoverError(const std::string& what, std::size_t line) : InputError(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CoverLoadSummary {
  std::size_t communities = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t empty_lines_skipped = 0;
  /// Only nonzero when unknown ids are tolerated.
  std::size_t unknown_ids_dropped = 0;
};

struct LoadedCover {
  CommunityCover cover;
  CoverLoadSummary summary;
};

struct CoverParseOptions {
  /// Drop ids missing from the graph instead of failing. A community left
  /// empty by this is skipped.
  bool ignore_unknown_ids = false;
};

/// One community per line, whitespace-separated external node ids that must
/// resolve through g's labels. Lines starting with '#' are comments.
LoadedCover parse_cover(std::istream& in, const Graph& g, CoverParseOptions options = {});
LoadedCover load_cover(const std::filesystem::path& path, const Graph& g,
                       CoverParseOptions options = {});

struct MembershipHistogram {
  IntegerHistogram histogram;  // over nodes in at least one community
  std::size_t unassigned_nodes = 0;
};

MembershipHistogram membership_histogram(const CommunityCover& cover);
IntegerHistogram community_size_histogram(const CommunityCover& cover);

/// Community pairs with at least one shared member, with the shared count.
struct OverlapPair {
  CommunityId first;
  CommunityId second;  // first < second
  std::uint32_t shared;
  friend bool operator==(const OverlapPair&, const OverlapPair&) = default;
};

/// All nonzero pairwise intersection sizes, sorted by (first, second).
///
/// Computed by joining each node's membership list with itself, so the work
/// is sum over nodes of C(m_v, 2) rather than one intersection per community
/// pair. Sharded over nodes; the result does not depend on `threads`.
std::vector<OverlapPair> overlap_pairs(const CommunityCover& cover, unsigned threads = 0);

/// Histogram of |C_i ∩ C_j| over community pairs that intersect.
IntegerHistogram overlap_size_histogram(const CommunityCover& cover, unsigned threads = 0);

/// Sum over nodes of C(m_v, 2).
std::uint64_t membership_pair_count(const CommunityCover& cover);

}  // namespace ocn
