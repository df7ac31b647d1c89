#include "ocn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>

#include "ocn/rng.hpp"

namespace ocn::oracle {

OracleReport naive_metrics(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n > kMaxOracleNodes)
    throw std::length_error("oracle limited to " + std::to_string(kMaxOracleNodes) + " nodes");
  OracleReport r;
  r.nodes = n;

  std::vector<char> adj(n * n, 0);
  for (auto [u, v] : g.edges()) adj[u * n + v] = adj[v * n + u] = 1;
  auto linked = [&](std::size_t u, std::size_t v) { return adj[u * n + v] != 0; };

  // Floyd-Warshall
  auto& d = r.distances;
  d.assign(n * n, kNoPath);
  for (std::size_t u = 0; u < n; ++u) {
    d[u * n + u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (linked(u, v)) d[u * n + v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i * n + k] == kNoPath) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k * n + j] == kNoPath) continue;
        const auto via = static_cast<std::uint16_t>(d[i * n + k] + d[k * n + j]);
        if (via < d[i * n + j]) d[i * n + j] = via;
      }
    }
  std::uint64_t pairs = 0, total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i * n + j] != kNoPath) {
        ++r.distance_counts[d[i * n + j]];
        r.diameter = std::max<std::uint32_t>(r.diameter, d[i * n + j]);
        ++pairs;
        total += d[i * n + j];
      }
  if (pairs > 0) r.mean_path = static_cast<double>(total) / static_cast<double>(pairs);

  // triangles by triple enumeration
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!linked(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (linked(a, c) && linked(b, c)) ++r.triangles;
    }

  // local clustering from neighbor pairs
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) deg[u] += linked(u, v);
  r.clustering.assign(n, std::nullopt);
  double sum = 0;
  std::size_t eligible = 0;
  std::map<std::size_t, std::pair<double, std::size_t>> by_degree;
  for (std::size_t u = 0; u < n; ++u) {
    r.wedges += deg[u] * (deg[u] - (deg[u] > 0)) / 2;
    if (deg[u] < 2) continue;
    std::vector<std::size_t> nb;
    for (std::size_t v = 0; v < n; ++v)
      if (linked(u, v)) nb.push_back(v);
    std::size_t links = 0, possible = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++possible;
        links += linked(nb[i], nb[j]);
      }
    const double c = static_cast<double>(links) / static_cast<double>(possible);
    r.clustering[u] = c;
    sum += c;
    ++eligible;
    by_degree[deg[u]].first += c;
    by_degree[deg[u]].second += 1;
  }
  if (eligible > 0) r.average_clustering = sum / static_cast<double>(eligible);
  if (n > 0) r.average_clustering_zero_filled = sum / static_cast<double>(n);
  for (auto& [k, acc] : by_degree) r.clustering_by_degree[k] = acc.first / static_cast<double>(acc.second);
  if (r.wedges > 0) r.transitivity = 3.0 * static_cast<double>(r.triangles) / static_cast<double>(r.wedges);

  // Pearson correlation over the explicit list of ordered endpoint pairs
  std::vector<std::pair<double, double>> ends;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (linked(u, v)) ends.emplace_back(static_cast<double>(deg[u]), static_cast<double>(deg[v]));
  if (!ends.empty()) {
    double mx = 0, my = 0;
    for (auto [x, y] : ends) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(ends.size());
    my /= static_cast<double>(ends.size());
    double sxy = 0, sxx = 0, syy = 0;
    for (auto [x, y] : ends) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
      syy += (y - my) * (y - my);
    }
    if (sxx > 0 && syy > 0) r.assortativity = sxy / std::sqrt(sxx * syy);
  }
  return r;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Xoshiro256 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  return Graph::from_edges(n, edges);
}

CommunityCover random_cover(std::size_t n, std::size_t communities, const SizeLaw& law, std::uint64_t seed) {
  if (communities == 0) throw std::invalid_argument("need at least one community");
  Xoshiro256 rng(seed);
  std::vector<NodeId> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<NodeId>(i);
  std::vector<std::vector<NodeId>> sets;
  sets.reserve(communities);
  for (std::size_t c = 0; c < communities; ++c) {
    std::size_t size = 0;
    switch (law.kind) {
      case SizeLaw::Kind::fixed:
        if (law.sizes.empty()) throw std::invalid_argument("fixed size law needs sizes");
        size = law.sizes[c % law.sizes.size()];
        break;
      case SizeLaw::Kind::uniform:
        size = law.lo + rng.below(law.hi - law.lo + 1);
        break;
      case SizeLaw::Kind::power_law: {
        const double u = rng.uniform();
        const double s = static_cast<double>(law.lo) * std::pow(1.0 - u, -1.0 / (law.alpha - 1.0));
        size = std::min(law.hi, static_cast<std::size_t>(std::floor(s)));
        break;
      }
    }
    if (size == 0 || size > n)
      throw std::invalid_argument("community size " + std::to_string(size) + " outside 1.." + std::to_string(n));
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
    sets.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return CommunityCover::from_communities(n, std::move(sets));
}

std::vector<OverlapPair> brute_force_overlaps(const CommunityCover& cover) {
  std::vector<OverlapPair> out;
  const auto& cs = cover.communities();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::vector<NodeId> shared;
      std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(), std::back_inserter(shared));
      if (!shared.empty())
        out.push_back({static_cast<CommunityId>(i), static_cast<CommunityId>(j),
                       static_cast<std::uint32_t>(shared.size())});
    }
  return out;
}

}  // namespace ocn::oracle
