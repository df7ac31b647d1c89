#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ocn/cover.hpp"
#include "ocn/graph.hpp"
#include "ocn/histogram.hpp"

namespace ocn {

/// The overlapping community network: one node per community, an edge
/// wherever two communities share at least `threshold` members.
struct ProjectedGraph {
  /// Node i is community i; labels are community ids.
  Graph graph;
  /// Shared-member count per CSR slot, aligned with graph's target array,
  /// so overlap[graph.offset(u) + k] belongs to edge (u, neighbors(u)[k]).
  std::vector<std::uint32_t> overlap;
  std::uint32_t threshold = 1;
  /// Largest membership number in the cover; a node in k communities costs
  /// C(k, 2) pair increments during projection.
  std::size_t max_membership = 0;
  std::uint64_t pair_increments = 0;

  std::uint32_t weight(NodeId u, NodeId v) const;

  /// "u v weight" per edge when with_weights, else "u v".
  void write_edge_list(std::ostream& out, bool with_weights = true) const;
};

/// Throws std::invalid_argument when threshold is 0.
ProjectedGraph project(const CommunityCover& cover, std::uint32_t threshold = 1,
                       unsigned threads = 0);

/// Node shares of the giant component, of other non-singleton components
/// and of singletons, plus the giant component's share of edges. When every
/// component is a singleton there is no giant and all nodes count as
/// isolated.
struct ComponentCensus {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t giant_nodes = 0;
  std::size_t giant_edges = 0;
  std::size_t small_component_nodes = 0;
  std::size_t isolated_nodes = 0;
  double giant_node_fraction = 0;
  double small_component_node_fraction = 0;
  double isolated_node_fraction = 0;
  double giant_link_fraction = 0;
};

ComponentCensus component_census(const Graph& g);
inline ComponentCensus component_census(const ProjectedGraph& pg) { return component_census(pg.graph); }

/// Degrees of all communities, zeros included.
IntegerHistogram community_degree_histogram(const ProjectedGraph& pg);

}  // namespace ocn
