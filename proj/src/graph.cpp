#include "ocn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace ocn {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<Label> labels, BuildSummary* summary) {
  if (!labels.empty() && labels.size() != node_count)
    throw std::invalid_argument("label count does not match node count");
  if (labels.empty()) {
    labels.resize(node_count);
    for (std::size_t v = 0; v < node_count; ++v) labels[v] = static_cast<Label>(v);
  }

  BuildSummary local;
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw std::out_of_range("edge endpoint outside node range");
    if (u == v) {
      ++local.dropped_self_loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  const auto last = std::unique(canon.begin(), canon.end());
  local.dropped_duplicates = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(canon.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (u, v), so appending v to u's list and u to v's list
  // in this order yields ascending neighbor lists for both.
  for (auto [u, v] : canon) g.targets_[cursor[v]++] = u;
  for (auto [u, v] : canon) g.targets_[cursor[u]++] = v;

  g.labels_ = std::move(labels);
  g.label_index_.reserve(node_count);
  for (std::size_t v = 0; v < node_count; ++v)
    g.label_index_.emplace_back(g.labels_[v], static_cast<NodeId>(v));
  std::sort(g.label_index_.begin(), g.label_index_.end());
  for (std::size_t i = 1; i < g.label_index_.size(); ++i)
    if (g.label_index_[i].first == g.label_index_[i - 1].first)
      throw std::invalid_argument("duplicate node label " + std::to_string(g.label_index_[i].first));

  if (summary) *summary = local;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::find_label(Label label) const {
  auto it = std::lower_bound(label_index_.begin(), label_index_.end(),
                             std::make_pair(label, NodeId{0}));
  if (it == label_index_.end() || it->first != label) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::write_edge_list(std::ostream& out) const {
  for (auto [u, v] : edges()) out << labels_[u] << ' ' << labels_[v] << '\n';
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

// Splits a line into integer tokens. Returns false on a malformed token.
bool tokenize_integers(std::string_view line, std::vector<Label>& out, std::string& bad) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    const std::string_view tok = line.substr(i, j - i);
    Label value{};
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      bad = std::string(tok);
      return false;
    }
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> raw;
  std::vector<Label> tokens;
  std::string line, bad;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;
    if (!tokenize_integers(line, tokens, bad))
      throw ParseError("line " + std::to_string(line_no) + ": not an integer node id '" + bad + "'",
                       line_no);
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 2 node ids, found " +
                           std::to_string(tokens.size()),
                       line_no);
    raw.emplace_back(tokens[0], tokens[1]);
  }
  if (raw.empty()) throw ParseError("edge list contains no edges", line_no);

  std::vector<Label> labels;
  labels.reserve(raw.size() * 2);
  for (auto [a, b] : raw) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > std::numeric_limits<NodeId>::max())
    throw ParseError("too many distinct node ids", line_no);

  auto id_of = [&](Label l) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(id_of(a), id_of(b));
  raw.clear();
  raw.shrink_to_fit();

  BuildSummary build;
  const std::size_t n = labels.size();
  LoadedGraph result{Graph::from_edges(n, edges, std::move(labels), &build), {}};
  result.summary = {result.graph.node_count(), result.graph.edge_count(), build.dropped_duplicates,
                    build.dropped_self_loops};
  return result;
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list " + path.string());
  return parse_edge_list(in);
}

ComponentLabeling connected_components(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  ComponentLabeling out;
  out.component_of.assign(g.node_count(), unset);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (out.component_of[s] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.component_sizes.size());
    queue.clear();
    queue.push_back(s);
    out.component_of[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (NodeId w : g.neighbors(queue[head]))
        if (out.component_of[w] == unset) {
          out.component_of[w] = id;
          queue.push_back(w);
        }
    out.component_sizes.push_back(queue.size());
    // strict comparison keeps the smallest id among equal sizes
    if (queue.size() > out.component_sizes[out.giant_id]) out.giant_id = id;
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  if (keep.size() != g.node_count()) throw std::invalid_argument("keep mask size mismatch");
  constexpr auto absent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> new_id(g.node_count(), absent);
  Subgraph out;
  std::vector<Label> labels;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (keep[v]) {
      new_id[v] = static_cast<NodeId>(out.original_id.size());
      out.original_id.push_back(v);
      labels.push_back(g.label(v));
    }
  std::vector<Edge> edges;
  for (NodeId u : out.original_id)
    for (NodeId v : g.neighbors(u))
      if (u < v && new_id[v] != absent) edges.emplace_back(new_id[u], new_id[v]);
  out.graph = Graph::from_edges(out.original_id.size(), edges, std::move(labels));
  return out;
}

Subgraph extract_giant(const Graph& g, const ComponentLabeling& labels) {
  std::vector<bool> keep(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) keep[v] = labels.component_of[v] == labels.giant_id;
  return induced_subgraph(g, keep);
}

Density density(const Graph& g) {
  const double n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) throw std::domain_error("density undefined for fewer than two nodes");
  const double m = static_cast<double>(g.edge_count());
  return {2.0 * m / (n * (n - 1.0)), m / (n * (n - 1.0))};
}

}  // namespace ocn
