#include "ocn/project.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ocn {

std::uint32_t ProjectedGraph::weight(NodeId u, NodeId v) const {
  const auto adj = graph.neighbors(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return 0;
  return overlap[graph.offset(u) + static_cast<std::size_t>(it - adj.begin())];
}

void ProjectedGraph::write_edge_list(std::ostream& out, bool with_weights) const {
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto adj = graph.neighbors(u);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      if (adj[k] < u) continue;
      out << graph.label(u) << ' ' << graph.label(adj[k]);
      if (with_weights) out << ' ' << overlap[graph.offset(u) + k];
      out << '\n';
    }
  }
}

ProjectedGraph project(const CommunityCover& cover, std::uint32_t threshold, unsigned threads) {
  if (threshold == 0) throw std::invalid_argument("projection threshold must be at least 1");
  auto pairs = overlap_pairs(cover, threads);
  std::erase_if(pairs, [&](const OverlapPair& p) { return p.shared < threshold; });

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) edges.emplace_back(p.first, p.second);

  ProjectedGraph pg;
  pg.graph = Graph::from_edges(cover.community_count(), edges);
  pg.threshold = threshold;
  pg.max_membership = cover.max_membership_number();
  pg.pair_increments = membership_pair_count(cover);

  // pairs is sorted by (first, second), which makes it searchable by edge
  pg.overlap.resize(pg.graph.edge_count() * 2);
  for (NodeId u = 0; u < pg.graph.node_count(); ++u) {
    const auto adj = pg.graph.neighbors(u);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      const NodeId a = std::min(u, adj[k]), b = std::max(u, adj[k]);
      const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b),
                                       [](const OverlapPair& p, const std::pair<NodeId, NodeId>& key) {
                                         return p.first != key.first ? p.first < key.first
                                                                     : p.second < key.second;
                                       });
      pg.overlap[pg.graph.offset(u) + k] = it->shared;
    }
  }
  return pg;
}

ComponentCensus component_census(const Graph& g) {
  ComponentCensus census;
  census.nodes = g.node_count();
  census.edges = g.edge_count();
  if (census.nodes == 0) return census;
  const auto labels = connected_components(g);
  census.components = labels.component_count();
  const bool has_giant = labels.giant_size() >= 2;
  for (std::uint32_t c = 0; c < labels.component_count(); ++c) {
    const auto size = labels.component_sizes[c];
    if (size == 1)
      census.isolated_nodes += 1;
    else if (has_giant && c == labels.giant_id)
      census.giant_nodes = size;
    else
      census.small_component_nodes += size;
  }
  if (has_giant) {
    std::size_t endpoint_slots = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (labels.component_of[v] == labels.giant_id) endpoint_slots += g.degree(v);
    census.giant_edges = endpoint_slots / 2;
  }
  const double n = static_cast<double>(census.nodes);
  census.giant_node_fraction = static_cast<double>(census.giant_nodes) / n;
  census.small_component_node_fraction = static_cast<double>(census.small_component_nodes) / n;
  census.isolated_node_fraction = static_cast<double>(census.isolated_nodes) / n;
  census.giant_link_fraction =
      census.edges == 0 ? 0.0 : static_cast<double>(census.giant_edges) / static_cast<double>(census.edges);
  return census;
}

IntegerHistogram community_degree_histogram(const ProjectedGraph& pg) {
  IntegerHistogram out;
  for (NodeId v = 0; v < pg.graph.node_count(); ++v) out.add(pg.graph.degree(v));
  return out;
}

}  // namespace ocn
