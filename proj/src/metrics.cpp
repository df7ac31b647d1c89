#include "ocn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ocn/parallel.hpp"
#include "ocn/rng.hpp"

namespace ocn {

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.node_count() == 0) return s;
  s.min = g.degree(0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    s.min = std::min(s.min, g.degree(v));
    s.max = std::max(s.max, g.degree(v));
  }
  s.mean = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  return s;
}

IntegerHistogram degree_histogram(const Graph& g) {
  IntegerHistogram h;
  for (NodeId v = 0; v < g.node_count(); ++v) h.add(g.degree(v));
  return h;
}

std::vector<double> degree_sequence(const Graph& g) {
  std::vector<double> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = static_cast<double>(g.degree(v));
  return out;
}

namespace {

std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double pairs_of(std::size_t k) { return static_cast<double>(k) * static_cast<double>(k - 1) / 2.0; }

}  // namespace

std::optional<double> local_clustering(const Graph& g, NodeId v) {
  if (v >= g.node_count()) throw std::out_of_range("node " + std::to_string(v) + " not in graph");
  const auto adj = g.neighbors(v);
  if (adj.size() < 2) return std::nullopt;
  std::size_t links = 0;
  for (NodeId w : adj) links += intersection_size(adj, g.neighbors(w));
  return static_cast<double>(links / 2) / pairs_of(adj.size());
}

TriangleCounts count_triangles(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  TriangleCounts out;
  out.per_node.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    out.wedges += d * (d - (d > 0 ? 1 : 0)) / 2;
  }

  // Orient each edge from lower to higher (degree, id) rank; out-lists stay
  // sorted by id because they are filtered from sorted neighbor lists.
  auto ranks_below = [&](NodeId a, NodeId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<std::size_t> offsets(n + 1, 0);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors(u))
      if (ranks_below(u, v)) ++offsets[u + 1];
  for (std::size_t u = 0; u < n; ++u) offsets[u + 1] += offsets[u];
  std::vector<NodeId> targets(offsets[n]);
  for (NodeId u = 0; u < n; ++u) {
    std::size_t pos = offsets[u];
    for (NodeId v : g.neighbors(u))
      if (ranks_below(u, v)) targets[pos++] = v;
  }
  auto out_of = [&](NodeId u) {
    return std::span<const NodeId>(targets.data() + offsets[u], targets.data() + offsets[u + 1]);
  };

  const unsigned workers = resolve_threads(threads, n);
  std::vector<std::vector<std::uint64_t>> partial(workers);
  parallel_shards(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& counts = partial[w];
    counts.assign(n, 0);
    for (std::size_t ui = begin; ui < end; ++ui) {
      const auto u = static_cast<NodeId>(ui);
      const auto ou = out_of(u);
      for (NodeId v : ou) {
        const auto ov = out_of(v);
        auto i = ou.begin(), j = ov.begin();
        while (i != ou.end() && j != ov.end()) {
          if (*i < *j)
            ++i;
          else if (*j < *i)
            ++j;
          else {
            ++counts[u];
            ++counts[v];
            ++counts[*i];
            ++i;
            ++j;
          }
        }
      }
    }
  });
  for (const auto& counts : partial)
    for (std::size_t v = 0; v < n; ++v) out.per_node[v] += counts[v];
  std::uint64_t corner_total = 0;
  for (auto c : out.per_node) corner_total += c;
  out.triangles = corner_total / 3;
  return out;
}

namespace {

// Local clustering per node from triangle counts; NaN where undefined.
std::vector<double> local_clustering_all(const Graph& g, const TriangleCounts& t) {
  std::vector<double> out(g.node_count(), std::numeric_limits<double>::quiet_NaN());
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) >= 2) out[v] = static_cast<double>(t.per_node[v]) / pairs_of(g.degree(v));
  return out;
}

struct ClusteringMeans {
  std::optional<double> eligible_mean;
  double zero_filled_mean = 0;
};

ClusteringMeans clustering_means(const std::vector<double>& local) {
  ClusteringMeans out;
  double sum = 0;
  std::size_t eligible = 0;
  for (double c : local)
    if (!std::isnan(c)) {
      sum += c;
      ++eligible;
    }
  if (eligible > 0) out.eligible_mean = sum / static_cast<double>(eligible);
  if (!local.empty()) out.zero_filled_mean = sum / static_cast<double>(local.size());
  return out;
}

std::optional<double> transitivity_of(const TriangleCounts& t) {
  if (t.wedges == 0) return std::nullopt;
  return 3.0 * static_cast<double>(t.triangles) / static_cast<double>(t.wedges);
}

ClusteringByDegree group_by_degree(const Graph& g, const std::vector<double>& local) {
  ClusteringByDegree out;
  std::map<std::size_t, double> sums;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (std::isnan(local[v])) continue;
    sums[g.degree(v)] += local[v];
    ++out.per_degree[g.degree(v)].nodes;
  }
  for (auto& [k, entry] : out.per_degree) entry.mean_clustering = sums[k] / static_cast<double>(entry.nodes);
  return out;
}

}  // namespace

double average_local_clustering(const Graph& g, unsigned threads) {
  const auto means = clustering_means(local_clustering_all(g, count_triangles(g, threads)));
  if (!means.eligible_mean) throw std::domain_error("no node has degree >= 2");
  return *means.eligible_mean;
}

double average_local_clustering_zero_filled(const Graph& g, unsigned threads) {
  if (g.node_count() == 0) throw std::domain_error("empty graph");
  return clustering_means(local_clustering_all(g, count_triangles(g, threads))).zero_filled_mean;
}

double transitivity(const Graph& g, unsigned threads) {
  const auto t = transitivity_of(count_triangles(g, threads));
  if (!t) throw std::domain_error("transitivity undefined: graph has no wedge");
  return *t;
}

std::vector<double> ClusteringByDegree::values() const {
  std::vector<double> out;
  out.reserve(per_degree.size());
  for (const auto& [k, entry] : per_degree) out.push_back(entry.mean_clustering);
  return out;
}

ClusteringByDegree clustering_by_degree(const Graph& g, unsigned threads) {
  return group_by_degree(g, local_clustering_all(g, count_triangles(g, threads)));
}

// ---------------------------------------------------------------------------

namespace {

// Reusable BFS state; reset cost is proportional to the nodes visited.
class Bfs {
 public:
  explicit Bfs(const Graph& g) : g_(g), dist_(g.node_count(), kUnreachable) { queue_.reserve(g.node_count()); }

  // Runs from source; returns eccentricity within the source's component.
  std::uint32_t run(NodeId source) {
    for (NodeId v : queue_) dist_[v] = kUnreachable;
    queue_.clear();
    dist_[source] = 0;
    queue_.push_back(source);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId u = queue_[head];
      const std::uint32_t next = dist_[u] + 1;
      for (NodeId w : g_.neighbors(u))
        if (dist_[w] == kUnreachable) {
          dist_[w] = next;
          queue_.push_back(w);
        }
    }
    return dist_[queue_.back()];
  }

  // Visit order of the last run; distances are nondecreasing along it.
  const std::vector<NodeId>& order() const { return queue_; }
  std::uint32_t dist(NodeId v) const { return dist_[v]; }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> queue_;
};

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.node_count()) throw std::out_of_range("source not in graph");
  Bfs bfs(g);
  bfs.run(source);
  std::vector<std::uint32_t> out(g.node_count(), kUnreachable);
  for (NodeId v : bfs.order()) out[v] = bfs.dist(v);
  return out;
}

std::vector<std::pair<double, double>> HopDistribution::weighted_samples() const {
  std::vector<std::pair<double, double>> out;
  for (std::size_t d = 1; d < pair_counts.size(); ++d)
    if (pair_counts[d] > 0) out.emplace_back(static_cast<double>(d), pair_counts[d]);
  return out;
}

HopDistribution hop_distribution(const Graph& g, const HopMode& mode, unsigned threads) {
  const std::size_t n = g.node_count();
  HopDistribution out;
  out.mode = mode;

  if (mode.exact) {
    out.sources.resize(n);
    std::iota(out.sources.begin(), out.sources.end(), NodeId{0});
  } else {
    if (mode.sources == 0 || mode.sources > n)
      throw std::invalid_argument("sampled hop distribution needs 1.." + std::to_string(n) +
                                  " sources, got " + std::to_string(mode.sources));
    // partial Fisher-Yates: the first `sources` slots are a uniform sample
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    Xoshiro256 rng(mode.seed);
    for (std::size_t i = 0; i < mode.sources; ++i) std::swap(perm[i], perm[i + rng.below(n - i)]);
    perm.resize(mode.sources);
    out.sources = std::move(perm);
  }

  struct Partial {
    std::vector<std::uint64_t> counts;
    std::uint64_t distance_sum = 0;
  };
  const unsigned workers = resolve_threads(threads, out.sources.size());
  std::vector<Partial> partial(workers);
  std::vector<std::unique_ptr<Bfs>> bfs(workers);
  parallel_items(out.sources.size(), workers, [&](unsigned w, std::size_t i) {
    if (!bfs[w]) bfs[w] = std::make_unique<Bfs>(g);
    auto& p = partial[w];
    bfs[w]->run(out.sources[i]);
    const auto& order = bfs[w]->order();
    const std::uint32_t ecc = bfs[w]->dist(order.back());
    if (p.counts.size() <= ecc) p.counts.resize(ecc + 1, 0);
    for (std::size_t k = 1; k < order.size(); ++k) {
      const std::uint32_t d = bfs[w]->dist(order[k]);
      ++p.counts[d];
      p.distance_sum += d;
    }
  });

  std::vector<std::uint64_t> ordered;
  std::uint64_t distance_sum = 0;
  for (const auto& p : partial) {
    if (ordered.size() < p.counts.size()) ordered.resize(p.counts.size(), 0);
    for (std::size_t d = 0; d < p.counts.size(); ++d) ordered[d] += p.counts[d];
    distance_sum += p.distance_sum;
  }
  if (ordered.size() < 2) ordered.resize(2, 0);
  while (ordered.size() > 2 && ordered.back() == 0) ordered.pop_back();

  // Ordered (source, target) counts become unordered pair estimates.
  const double scale =
      out.sources.empty() ? 0.0 : static_cast<double>(n) / static_cast<double>(out.sources.size()) / 2.0;
  out.pair_counts.assign(ordered.size(), 0.0);
  std::uint64_t ordered_total = 0;
  for (std::size_t d = 1; d < ordered.size(); ++d) {
    out.pair_counts[d] = static_cast<double>(ordered[d]) * scale;
    ordered_total += ordered[d];
    if (ordered[d] > 0) out.max_distance_observed = static_cast<std::uint32_t>(d);
  }
  out.connected_pairs = static_cast<double>(ordered_total) * scale;

  out.cumulative.assign(ordered.size(), 0.0);
  if (ordered_total > 0) {
    std::uint64_t running = 0;
    long double weighted = 0;
    for (std::size_t d = 1; d < ordered.size(); ++d) {
      running += ordered[d];
      weighted += static_cast<long double>(d) * static_cast<long double>(ordered[d]);
      out.cumulative[d] = static_cast<double>(running) / static_cast<double>(ordered_total);
    }
    const long double mean = weighted / static_cast<long double>(ordered_total);
    long double spread = 0;
    for (std::size_t d = 1; d < ordered.size(); ++d) {
      const long double dev = static_cast<long double>(d) - mean;
      spread += dev * dev * static_cast<long double>(ordered[d]);
    }
    out.mean_distance = static_cast<double>(mean);
    out.std_deviation = static_cast<double>(std::sqrt(spread / static_cast<long double>(ordered_total)));
    out.direct_mean_distance =
        static_cast<double>(static_cast<long double>(distance_sum) / static_cast<long double>(ordered_total));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Largest eccentricity among `nodes`, one BFS each.
std::uint32_t max_eccentricity(const Graph& g, const std::vector<NodeId>& nodes, unsigned threads,
                               std::size_t& bfs_runs) {
  const unsigned workers = resolve_threads(threads, nodes.size());
  std::vector<std::uint32_t> best(workers, 0);
  std::vector<std::unique_ptr<Bfs>> bfs(workers);
  parallel_items(nodes.size(), workers, [&](unsigned w, std::size_t i) {
    if (!bfs[w]) bfs[w] = std::make_unique<Bfs>(g);
    best[w] = std::max(best[w], bfs[w]->run(nodes[i]));
  });
  bfs_runs += nodes.size();
  return *std::max_element(best.begin(), best.end());
}

std::uint32_t ifub_component(const Graph& g, NodeId seed, unsigned threads, std::size_t& bfs_runs) {
  Bfs bfs(g);

  // Double sweep from the seed: a is far from the seed, b is far from a.
  bfs.run(seed);
  const NodeId a = bfs.order().back();
  const std::uint32_t ecc_a = bfs.run(a);
  bfs_runs += 2;
  NodeId walker = bfs.order().back();
  std::uint32_t lower = ecc_a;

  // Start from the midpoint of the a-b path: step back ecc_a / 2 levels.
  for (std::uint32_t steps = 0; steps < ecc_a / 2; ++steps)
    for (NodeId w : g.neighbors(walker))
      if (bfs.dist(w) + 1 == bfs.dist(walker)) {
        walker = w;
        break;
      }
  const NodeId start = walker;

  std::uint32_t level = bfs.run(start);
  ++bfs_runs;
  lower = std::max(lower, level);
  std::uint32_t upper = 2 * level;

  // Nodes grouped by BFS level from start.
  std::vector<std::vector<NodeId>> fringe(level + 1);
  for (NodeId v : bfs.order()) fringe[bfs.dist(v)].push_back(v);

  while (upper > lower && level > 0) {
    lower = std::max(lower, max_eccentricity(g, fringe[level], threads, bfs_runs));
    if (lower > 2 * (level - 1)) return lower;
    upper = 2 * (level - 1);
    --level;
  }
  return lower;
}

}  // namespace

DiameterResult diameter(const Graph& g, unsigned threads) {
  if (g.node_count() == 0) throw std::domain_error("diameter of an empty graph");
  DiameterResult result;
  const auto labels = connected_components(g);
  result.connected = labels.component_count() == 1;

  // Highest-degree node of each component seeds its double sweep.
  std::vector<NodeId> seed(labels.component_count(), 0);
  std::vector<bool> seen(labels.component_count(), false);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto c = labels.component_of[v];
    if (!seen[c] || g.degree(v) > g.degree(seed[c])) {
      seed[c] = v;
      seen[c] = true;
    }
  }
  for (std::uint32_t c = 0; c < labels.component_count(); ++c) {
    if (labels.component_sizes[c] <= result.value) continue;  // cannot beat current value
    result.value = std::max(result.value, ifub_component(g, seed[c], threads, result.bfs_runs));
  }
  return result;
}

// ---------------------------------------------------------------------------

double assortativity(const Graph& g) {
  // Sums over the M = 2m ordered endpoint pairs (j, k):
  //   A = sum j*k, B = sum j, C = sum j^2, and r = (M*A - B^2) / (M*C - B^2).
  using Wide = __int128;
  Wide a = 0, b = 0, c = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const Wide du = static_cast<Wide>(g.degree(u));
    for (NodeId v : g.neighbors(u)) a += du * static_cast<Wide>(g.degree(v));
    b += du * du;
    c += du * du * du;
  }
  const Wide m2 = static_cast<Wide>(2 * g.edge_count());
  const Wide num = m2 * a - b * b;
  const Wide den = m2 * c - b * b;
  if (den == 0) throw std::domain_error("assortativity undefined: endpoint degree variance is zero");
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

// ---------------------------------------------------------------------------

GraphMetrics analyze_graph(const Graph& g, const MetricsOptions& options) {
  GraphMetrics out;
  auto& s = out.summary;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  if (g.node_count() >= 2) s.density = density(g);
  s.degrees = degree_stats(g);
  out.degrees = degree_histogram(g);

  const auto triangles = count_triangles(g, options.threads);
  const auto local = local_clustering_all(g, triangles);
  const auto means = clustering_means(local);
  s.triangles = triangles.triangles;
  s.average_local_clustering = means.eligible_mean;
  s.average_local_clustering_zero_filled = means.zero_filled_mean;
  s.transitivity = transitivity_of(triangles);
  out.clustering = group_by_degree(g, local);

  try {
    s.assortativity = assortativity(g);
  } catch (const std::domain_error&) {
    s.assortativity.reset();
  }

  out.hops = hop_distribution(g, options.hops, options.threads);
  s.average_shortest_path = out.hops.direct_mean_distance;
  if (g.node_count() > 0) s.diameter = diameter(g, options.threads);
  return out;
}

}  // namespace ocn
