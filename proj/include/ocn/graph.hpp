#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ocn {

using NodeId = std::uint32_t;
using Label = std::int64_t;
using Edge = std::pair<NodeId, NodeId>;

/// Counts of what graph construction kept and discarded.
struct BuildSummary {
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Neighbor lists are sorted ascending, duplicate-free and loop-free, and
/// every edge is stored in both endpoint lists. Each internal node carries an
/// external label (the identifier used in input files); when none is given
/// the label equals the internal id.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from an arbitrary edge multiset over [0, node_count). Self-loops
  /// and repeated edges (in either orientation) are dropped and counted.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<Label> labels = {}, BuildSummary* summary = nullptr);

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Offset of v's first neighbor in the flat target array; edge-aligned
  /// sidecar arrays index with this.
  std::size_t offset(NodeId v) const { return offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const;

  Label label(NodeId v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }
  /// Internal id carrying `label`, if any.
  std::optional<NodeId> find_label(Label label) const;

  /// Each undirected edge once as (u, v) with u < v, in CSR order.
  std::vector<Edge> edges() const;

  /// SNAP-style text: one "label_u label_v" line per edge.
  void write_edge_list(std::ostream& out) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<Label> labels_;
  // (label, id) sorted by label, for find_label.
  std::vector<std::pair<Label, NodeId>> label_index_;
};

/// Unreadable or malformed input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line) : InputError(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadSummary summary;
};

/// Parses a whitespace-separated integer edge list. Lines starting with '#'
/// and blank lines are ignored. External ids are mapped to dense internal ids
/// in ascending label order, so the result does not depend on line order.
LoadedGraph parse_edge_list(std::istream& in);
LoadedGraph load_edge_list(const std::filesystem::path& path);

struct ComponentLabeling {
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> component_sizes;
  std::uint32_t giant_id = 0;

  std::size_t component_count() const { return component_sizes.size(); }
  std::size_t giant_size() const {
    return component_sizes.empty() ? 0 : component_sizes[giant_id];
  }
};

/// Component ids are assigned in order of each component's smallest node id.
ComponentLabeling connected_components(const Graph& g);

struct Subgraph {
  Graph graph;
  /// original_id[new_id] is the node's id in the source graph.
  std::vector<NodeId> original_id;
};

/// Induced subgraph on nodes with keep[v] true, relabeled densely in
/// ascending original id order. External labels are carried over.
Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

Subgraph extract_giant(const Graph& g, const ComponentLabeling& labels);

struct Density {
  double undirected;           // 2m / (n(n-1))
  double directed_convention;  // m / (n(n-1))
};

/// Throws std::domain_error when the graph has fewer than two nodes.
Density density(const Graph& g);

}  // namespace ocn
