#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "ocn/cover.hpp"
#include "ocn/graph.hpp"

// Brute-force references and seeded generators for property tests. Nothing
// here shares code with the metrics or projection paths it checks.
namespace ocn::oracle {

inline constexpr std::uint16_t kNoPath = std::numeric_limits<std::uint16_t>::max();
inline constexpr std::size_t kMaxOracleNodes = 1000;

struct OracleReport {
  std::size_t nodes = 0;
  /// Row-major n x n Floyd-Warshall distances, kNoPath when unreachable.
  std::vector<std::uint16_t> distances;
  std::uint64_t triangles = 0;
  std::uint64_t wedges = 0;
  std::vector<std::optional<double>> clustering;
  std::optional<double> average_clustering;
  double average_clustering_zero_filled = 0;
  std::map<std::size_t, double> clustering_by_degree;
  std::optional<double> transitivity;
  std::optional<double> assortativity;
  std::uint32_t diameter = 0;
  /// Unordered connected pairs by distance.
  std::map<std::uint32_t, std::uint64_t> distance_counts;
  std::optional<double> mean_path;

  std::uint16_t distance(std::size_t u, std::size_t v) const { return distances[u * nodes + v]; }
};

/// Throws std::length_error above kMaxOracleNodes nodes.
OracleReport naive_metrics(const Graph& g);

/// G(n, p): every pair u < v, in lexicographic order, is kept when the next
/// Xoshiro256 unit draw is below p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

struct SizeLaw {
  enum class Kind { fixed, uniform, power_law };
  Kind kind = Kind::fixed;
  std::vector<std::size_t> sizes;  // fixed: cycled through
  std::size_t lo = 1, hi = 1;      // uniform range, or power-law bounds
  double alpha = 2.5;

  static SizeLaw fixed(std::vector<std::size_t> sizes) { return {Kind::fixed, std::move(sizes), 1, 1, 0}; }
  static SizeLaw uniform(std::size_t lo, std::size_t hi) { return {Kind::uniform, {}, lo, hi, 0}; }
  static SizeLaw power_law(double alpha, std::size_t lo, std::size_t hi) {
    return {Kind::power_law, {}, lo, hi, alpha};
  }
};

/// Communities with sizes drawn from `law` and members sampled without
/// replacement. Throws std::invalid_argument when a size exceeds n or is 0.
CommunityCover random_cover(std::size_t n, std::size_t communities, const SizeLaw& law, std::uint64_t seed);

/// Every community pair intersected directly.
std::vector<OverlapPair> brute_force_overlaps(const CommunityCover& cover);

}  // namespace ocn::oracle
