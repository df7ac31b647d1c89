#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "ocn/graph.hpp"
#include "ocn/histogram.hpp"

namespace ocn {

// ---------------------------------------------------------------------------
// Degrees

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0;
};

DegreeStats degree_stats(const Graph& g);
IntegerHistogram degree_histogram(const Graph& g);
/// One entry per node.
std::vector<double> degree_sequence(const Graph& g);

// ---------------------------------------------------------------------------
// Clustering

/// Fraction of v's neighbor pairs that are adjacent; nullopt when
/// deg(v) < 2. Throws std::out_of_range for an invalid node.
std::optional<double> local_clustering(const Graph& g, NodeId v);

struct TriangleCounts {
  std::uint64_t triangles = 0;
  /// Paths of length two, sum over v of C(deg v, 2).
  std::uint64_t wedges = 0;
  /// Triangles through each node.
  std::vector<std::uint64_t> per_node;
};

/// Counts each triangle once on the degree-ordered orientation.
TriangleCounts count_triangles(const Graph& g, unsigned threads = 0);

/// Mean local clustering over nodes of degree >= 2. Throws
/// std::domain_error if there are none.
double average_local_clustering(const Graph& g, unsigned threads = 0);
/// Mean over all nodes with degree < 2 counted as 0.
double average_local_clustering_zero_filled(const Graph& g, unsigned threads = 0);
/// 3 * triangles / wedges. Throws std::domain_error without wedges.
double transitivity(const Graph& g, unsigned threads = 0);

struct ClusteringByDegree {
  struct Entry {
    double mean_clustering = 0;
    std::size_t nodes = 0;
  };
  /// Degree k >= 2 -> mean local clustering of degree-k nodes.
  std::map<std::size_t, Entry> per_degree;

  /// The per-degree means in ascending degree order.
  std::vector<double> values() const;
};

ClusteringByDegree clustering_by_degree(const Graph& g, unsigned threads = 0);

// ---------------------------------------------------------------------------
// Distances

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop distances from source; kUnreachable outside its component.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

struct HopMode {
  bool exact = true;
  std::size_t sources = 0;
  std::uint64_t seed = 0;

  static HopMode all_pairs() { return {}; }
  static HopMode sampled(std::size_t sources, std::uint64_t seed) { return {false, sources, seed}; }
};

/// Distribution of shortest-path lengths over connected unordered pairs.
///
/// In sampled mode BFS runs from `sources` distinct nodes drawn uniformly
/// and the ordered counts are scaled by n / sources, so pair_counts
/// estimates the exact-mode counts. With sources == n both modes agree bin
/// for bin.
struct HopDistribution {
  HopMode mode;
  /// pair_counts[d] for d >= 1; index 0 is unused and always 0.
  std::vector<double> pair_counts;
  /// cumulative[d]: fraction of connected pairs at distance <= d (g(d)).
  std::vector<double> cumulative;
  double connected_pairs = 0;
  /// From the bins: sum d * count(d) / sum count(d).
  double mean_distance = 0;
  /// Population standard deviation of the distance distribution.
  double std_deviation = 0;
  /// Accumulated directly from BFS distances, independent of the bins.
  double direct_mean_distance = 0;
  std::uint32_t max_distance_observed = 0;
  std::vector<NodeId> sources;

  double pmf(std::uint32_t d) const {
    return d < pair_counts.size() && connected_pairs > 0 ? pair_counts[d] / connected_pairs : 0.0;
  }
  /// (distance, weight) pairs forming the multiset of pairwise distances.
  std::vector<std::pair<double, double>> weighted_samples() const;
};

/// Throws std::invalid_argument in sampled mode when sources is 0 or
/// exceeds the node count.
HopDistribution hop_distribution(const Graph& g, const HopMode& mode, unsigned threads = 0);

struct DiameterResult {
  std::uint32_t value = 0;
  /// False when the graph is disconnected; value is then the largest
  /// component diameter.
  bool connected = true;
  std::size_t bfs_runs = 0;
};

/// Exact diameter by iFUB: a double sweep picks a central start vertex,
/// then eccentricities of its BFS fringe levels are computed from the
/// deepest level upward until the lower bound exceeds what any shallower
/// level could reach. Throws std::domain_error on an empty graph.
DiameterResult diameter(const Graph& g, unsigned threads = 0);

// ---------------------------------------------------------------------------
// Degree correlation

/// Newman's r: Pearson correlation of endpoint degrees over the 2m ordered
/// edge endpoints. Throws std::domain_error when the endpoint degree
/// variance is zero (including graphs without edges).
double assortativity(const Graph& g);

// ---------------------------------------------------------------------------
// Summary

struct GlobalSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<Density> density;
  DegreeStats degrees;
  double average_shortest_path = 0;
  DiameterResult diameter;
  std::optional<double> average_local_clustering;
  double average_local_clustering_zero_filled = 0;
  std::optional<double> transitivity;
  std::optional<double> assortativity;
  std::uint64_t triangles = 0;
};

struct MetricsOptions {
  HopMode hops = HopMode::all_pairs();
  unsigned threads = 0;
};

struct GraphMetrics {
  GlobalSummary summary;
  HopDistribution hops;
  ClusteringByDegree clustering;
  IntegerHistogram degrees;
};

/// Everything above for one graph, sharing intermediate passes.
GraphMetrics analyze_graph(const Graph& g, const MetricsOptions& options);

}  // namespace ocn
