#include "ocn/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>

namespace ocn::report {

#ifndef OCN_VERSION
#define OCN_VERSION "0.0.0"
#endif

std::string tool_version() { return OCN_VERSION; }

HopMode Options::hop_mode(std::size_t nodes) const {
  if (exact_hops || nodes == 0) return HopMode::all_pairs();
  return HopMode::sampled(std::min(hop_sources, nodes), seed);
}

namespace {

std::string number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string two_decimals(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

// ---------------------------------------------------------------------------

json to_json(const LoadSummary& s) {
  return {{"nodes", s.nodes},
          {"edges", s.edges},
          {"dropped_duplicates", s.dropped_duplicates},
          {"dropped_self_loops", s.dropped_self_loops}};
}

json to_json(const CoverLoadSummary& s) {
  return {{"communities", s.communities},
          {"duplicates_dropped", s.duplicates_dropped},
          {"empty_lines_skipped", s.empty_lines_skipped},
          {"unknown_ids_dropped", s.unknown_ids_dropped}};
}

json to_json(const ComponentCensus& c) {
  return {{"nodes", c.nodes},
          {"edges", c.edges},
          {"components", c.components},
          {"giant_nodes", c.giant_nodes},
          {"giant_edges", c.giant_edges},
          {"small_component_nodes", c.small_component_nodes},
          {"isolated_nodes", c.isolated_nodes},
          {"giant_node_fraction", c.giant_node_fraction},
          {"small_component_node_fraction", c.small_component_node_fraction},
          {"isolated_node_fraction", c.isolated_node_fraction},
          {"giant_link_fraction", c.giant_link_fraction}};
}

json to_json(const GlobalSummary& s) {
  json density = nullptr;
  if (s.density)
    density = {{"undirected", s.density->undirected}, {"directed_convention", s.density->directed_convention}};
  return {{"nodes", s.nodes},
          {"edges", s.edges},
          {"density", density},
          {"degree", {{"min", s.degrees.min}, {"max", s.degrees.max}, {"mean", s.degrees.mean}}},
          {"average_shortest_path", s.average_shortest_path},
          {"diameter", s.diameter.value},
          {"diameter_connected", s.diameter.connected},
          {"diameter_bfs_runs", s.diameter.bfs_runs},
          {"average_local_clustering", optional_number(s.average_local_clustering)},
          {"average_local_clustering_zero_filled", s.average_local_clustering_zero_filled},
          {"transitivity", optional_number(s.transitivity)},
          {"assortativity", optional_number(s.assortativity)},
          {"triangles", s.triangles}};
}

json to_json(const HopDistribution& h) {
  json counts = json::array(), cumulative = json::array();
  for (std::size_t d = 1; d < h.pair_counts.size(); ++d) {
    counts.push_back({d, h.pair_counts[d]});
    cumulative.push_back({d, h.cumulative[d]});
  }
  json mode = {{"kind", h.mode.exact ? "exact" : "sampled"}, {"sources", h.sources.size()}};
  if (!h.mode.exact) mode["seed"] = h.mode.seed;
  return {{"mode", mode},
          {"connected_pairs", h.connected_pairs},
          {"mean_distance", h.mean_distance},
          {"direct_mean_distance", h.direct_mean_distance},
          {"std_deviation", h.std_deviation},
          {"max_distance_observed", h.max_distance_observed},
          {"pair_counts", counts},
          {"cumulative", cumulative}};
}

json to_json(const ClusteringByDegree& c) {
  json rows = json::array();
  for (const auto& [k, e] : c.per_degree) rows.push_back({k, e.mean_clustering, e.nodes});
  return rows;
}

json to_json(const IntegerHistogram& h) {
  json rows = json::array();
  for (auto [v, c] : h.bins()) rows.push_back({v, c});
  return rows;
}

json to_json(const FitResult& r) {
  json params = json::object();
  if (r.distribution)
    for (const auto& p : r.distribution->parameters()) params[std::string(p.name)] = p.value;
  json out = {{"family", family_name(r.family)},
              {"code", family_code(r.family)},
              {"applicable", r.applicable()},
              {"ks", r.applicable() ? json(r.ks) : json(nullptr)},
              {"sample_size", r.sample_size},
              {"parameters", params}};
  if (!r.applicable()) out["error"] = r.error;
  return out;
}

json to_json(const std::vector<FitResult>& ranked) {
  json rows = json::array();
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    json row = to_json(ranked[i]);
    row["rank"] = ranked[i].applicable() ? json(i + 1) : json(nullptr);
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const PowerLawScan& s) {
  return {{"xmin", s.xmin}, {"alpha", s.alpha}, {"ks", s.ks}, {"tail_size", s.tail_size}, {"candidates", s.candidates}};
}

// ---------------------------------------------------------------------------

FitInput fit_input(std::vector<std::pair<double, double>> value_weight) {
  FitInput in;
  std::vector<std::pair<double, double>> kept;
  for (auto [v, w] : value_weight) {
    if (v > 0)
      kept.emplace_back(v, w);
    else
      in.zero_values_dropped += w;
  }
  in.sample = Sample::from_weighted(std::move(kept));
  return in;
}

FitInput fit_input(const IntegerHistogram& h) {
  std::vector<std::pair<double, double>> vw;
  for (auto [v, c] : h.bins()) vw.emplace_back(static_cast<double>(v), static_cast<double>(c));
  return fit_input(std::move(vw));
}

FitBlock fit_block(FitInput input, unsigned threads) {
  FitBlock b{std::move(input), {}};
  b.ranked = fit_all(b.input.sample, {}, threads);
  return b;
}

json to_json(const FitBlock& b) {
  const auto& s = b.input.sample;
  return {{"sample",
           {{"items", s.total_weight()},
            {"distinct_values", s.values().size()},
            {"zero_values_dropped", b.input.zero_values_dropped}}},
          {"best", b.ranked.empty() || !b.ranked.front().applicable()
                       ? json(nullptr)
                       : json(family_name(b.ranked.front().family))},
          {"ranked", to_json(b.ranked)}};
}

NetworkAnalysis analyze_network(std::string name, const Graph& g, const Options& options) {
  NetworkAnalysis a;
  a.name = std::move(name);
  a.metrics = analyze_graph(g, {options.hop_mode(g.node_count()), options.threads});
  a.degree_fit = fit_block(fit_input(a.metrics.degrees), options.threads);
  std::vector<std::pair<double, double>> clustering;
  for (double c : a.metrics.clustering.values()) clustering.emplace_back(c, 1.0);
  a.clustering_fit = fit_block(fit_input(std::move(clustering)), options.threads);
  a.hop_fit = fit_block(fit_input(a.metrics.hops.weighted_samples()), options.threads);
  try {
    a.degree_scan = powerlaw_xmin_scan(a.degree_fit.input.sample);
  } catch (const FitError&) {
    a.degree_scan.reset();
  }
  return a;
}

json to_json(const NetworkAnalysis& a) {
  return {{"name", a.name},
          {"summary", to_json(a.metrics.summary)},
          {"degree_histogram", to_json(a.metrics.degrees)},
          {"clustering_by_degree", to_json(a.metrics.clustering)},
          {"hop_distribution", to_json(a.metrics.hops)},
          {"fits",
           {{"degree", to_json(a.degree_fit)},
            {"clustering_by_degree", to_json(a.clustering_fit)},
            {"hop_distance", to_json(a.hop_fit)}}},
          {"degree_powerlaw_scan", a.degree_scan ? to_json(*a.degree_scan) : json(nullptr)}};
}

CoverAnalysis analyze_cover(const CommunityCover& cover, const ProjectedGraph& pg, unsigned threads) {
  CoverAnalysis a;
  a.membership = membership_histogram(cover);
  a.community_size = community_size_histogram(cover);
  const auto pairs = overlap_pairs(cover, threads);
  for (const auto& p : pairs) {
    a.overlap_size.add(p.shared);
    a.overlap_sum += p.shared;
  }
  a.membership_pairs = membership_pair_count(cover);
  a.community_degree = community_degree_histogram(pg);
  a.membership_fit = fit_block(fit_input(a.membership.histogram), threads);
  a.overlap_fit = fit_block(fit_input(a.overlap_size), threads);
  a.community_size_fit = fit_block(fit_input(a.community_size), threads);
  a.community_degree_fit = fit_block(fit_input(a.community_degree), threads);
  return a;
}

json to_json(const CoverAnalysis& a) {
  return {{"membership",
           {{"histogram", to_json(a.membership.histogram)},
            {"unassigned_nodes", a.membership.unassigned_nodes},
            {"fits", to_json(a.membership_fit)}}},
          {"overlap_size", {{"histogram", to_json(a.overlap_size)}, {"fits", to_json(a.overlap_fit)}}},
          {"community_size", {{"histogram", to_json(a.community_size)}, {"fits", to_json(a.community_size_fit)}}},
          {"community_degree",
           {{"histogram", to_json(a.community_degree)}, {"fits", to_json(a.community_degree_fit)}}},
          {"counting_identity",
           {{"overlap_sum", a.overlap_sum},
            {"membership_pairs", a.membership_pairs},
            {"holds", a.overlap_sum == a.membership_pairs}}}};
}

ProjectionResult project_cover(const CommunityCover& cover, const Options& options) {
  ProjectionResult r;
  r.projected = project(cover, options.threshold, options.threads);
  r.census = component_census(r.projected);
  r.giant = extract_giant(r.projected.graph, connected_components(r.projected.graph));
  return r;
}

json to_json(const ProjectionResult& p) {
  return {{"threshold", p.projected.threshold},
          {"communities", p.projected.graph.node_count()},
          {"edges", p.projected.graph.edge_count()},
          {"max_membership", p.projected.max_membership},
          {"pair_increments", p.projected.pair_increments},
          {"census", to_json(p.census)},
          {"giant", {{"nodes", p.giant.graph.node_count()}, {"edges", p.giant.graph.edge_count()}}}};
}

// ---------------------------------------------------------------------------

void write_fit_table(std::ostream& out,
                     const std::vector<std::pair<std::string, const std::vector<FitResult>*>>& rows) {
  out << "dataset";
  for (Family f : kAllFamilies) out << ',' << family_code(f);
  out << '\n';
  for (const auto& [name, results] : rows) {
    out << name;
    for (Family f : kAllFamilies) {
      const FitResult* r = find_fit(*results, f);
      out << ',' << (r && r->applicable() ? two_decimals(r->ks) : std::string("NA"));
    }
    out << '\n';
  }
}

void write_loglog_svg(std::ostream& out, const std::string& title,
                      const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series) {
  constexpr double width = 640, height = 480, margin = 60;
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
  for (const auto& [name, pts] : series)
    for (auto [x, y] : pts)
      if (x > 0 && y > 0) {
        xlo = std::min(xlo, std::log10(x));
        xhi = std::max(xhi, std::log10(x));
        ylo = std::min(ylo, std::log10(y));
        yhi = std::max(yhi, std::log10(y));
      }
  if (!std::isfinite(xlo)) xlo = ylo = 0, xhi = yhi = 1;
  xlo = std::floor(xlo), ylo = std::floor(ylo);
  xhi = std::max(std::ceil(xhi), xlo + 1), yhi = std::max(std::ceil(yhi), ylo + 1);
  auto px = [&](double x) { return margin + (std::log10(x) - xlo) / (xhi - xlo) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (std::log10(y) - ylo) / (yhi - ylo) * (height - 2 * margin); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title << "</text>\n";
  out << "<g stroke=\"black\"><line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin << "\"/><line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\"/></g>\n";
  for (double e = xlo; e <= xhi; ++e)
    out << "<text x=\"" << px(std::pow(10.0, e)) << "\" y=\"" << height - margin + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">1e" << e << "</text>\n";
  for (double e = ylo; e <= yhi; ++e)
    out << "<text x=\"" << margin - 6 << "\" y=\"" << py(std::pow(10.0, e)) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">1e" << e << "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = colors[s % 4];
    out << "<g fill=\"" << color << "\">\n";
    for (auto [x, y] : series[s].second)
      if (x > 0 && y > 0) out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2.5\"/>\n";
    out << "</g>\n";
    out << "<text x=\"" << width - margin << "\" y=\"" << margin + 16.0 * static_cast<double>(s)
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">" << series[s].first << "</text>\n";
  }
  out << "</svg>\n";
}

// ---------------------------------------------------------------------------

namespace {

// Tracks files written into an output directory and deletes them unless
// commit() is reached.
class OutputFiles {
 public:
  explicit OutputFiles(std::filesystem::path dir) : dir_(std::move(dir)) {}
  OutputFiles(const OutputFiles&) = delete;
  OutputFiles& operator=(const OutputFiles&) = delete;
  ~OutputFiles() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : written_) std::filesystem::remove(p, ec);
    if (created_dir_) std::filesystem::remove(dir_, ec);  // only succeeds if empty
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& fn) {
    if (!std::filesystem::exists(dir_)) {
      std::filesystem::create_directories(dir_);
      created_dir_ = true;
    }
    const auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    written_.push_back(path);
    fn(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
  }

  void write_json(const std::string& name, const json& doc) {
    write(name, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  }

  void commit() { committed_ = true; }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> written_;
  bool created_dir_ = false;
  bool committed_ = false;
};

class Provenance {
 public:
  Provenance(std::string command, const Options& options)
      : command_(std::move(command)), options_(options), start_(std::chrono::steady_clock::now()),
        started_at_(std::time(nullptr)) {}

  void input(const std::filesystem::path& p) { inputs_.push_back(p.string()); }

  json finish() const {
    json out = {{"tool", "ocn"},
                {"version", tool_version()},
                {"command", command_},
                {"inputs", inputs_},
                {"seed", options_.seed},
                {"hop_mode", options_.exact_hops ? "exact" : "sampled"},
                {"hop_sources", options_.hop_sources},
                {"threshold", options_.threshold}};
    if (options_.timestamps) {
      char stamp[32];
      std::tm tm{};
      gmtime_r(&started_at_, &tm);
      std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
      out["started_at"] = stamp;
      out["wall_clock_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    return out;
  }

 private:
  std::string command_;
  const Options& options_;
  std::chrono::steady_clock::time_point start_;
  std::time_t started_at_;
  std::vector<std::string> inputs_;
};

json header(const std::string& command, const Options& options) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"dataset", options.dataset}};
}

void write_histogram_csv(OutputFiles& files, const std::string& name, const IntegerHistogram& h) {
  files.write(name, [&](std::ostream& out) { h.write_csv(out); });
}

void write_degree_csv(std::ostream& out, const std::vector<const NetworkAnalysis*>& nets) {
  out << "network,degree,count,fraction\n";
  for (const auto* a : nets) {
    const auto& h = a->metrics.degrees;
    for (auto [k, c] : h.bins())
      out << a->name << ',' << k << ',' << c << ',' << number(static_cast<double>(c) / static_cast<double>(h.total()))
          << '\n';
  }
}

void write_clustering_csv(std::ostream& out, const std::vector<const NetworkAnalysis*>& nets) {
  out << "network,degree,mean_clustering,nodes\n";
  for (const auto* a : nets)
    for (const auto& [k, e] : a->metrics.clustering.per_degree)
      out << a->name << ',' << k << ',' << number(e.mean_clustering) << ',' << e.nodes << '\n';
}

void write_hop_csv(std::ostream& out, const std::vector<const NetworkAnalysis*>& nets) {
  out << "network,distance,pair_count,pmf,cdf\n";
  for (const auto* a : nets) {
    const auto& h = a->metrics.hops;
    for (std::size_t d = 1; d < h.pair_counts.size(); ++d)
      out << a->name << ',' << d << ',' << number(h.pair_counts[d]) << ',' << number(h.pmf(static_cast<std::uint32_t>(d)))
          << ',' << number(h.cumulative[d]) << '\n';
  }
}

std::vector<std::pair<double, double>> histogram_points(const IntegerHistogram& h) {
  std::vector<std::pair<double, double>> pts;
  for (auto [v, c] : h.bins())
    pts.emplace_back(static_cast<double>(v), static_cast<double>(c) / static_cast<double>(h.total()));
  return pts;
}

void write_network_files(OutputFiles& files, const std::vector<const NetworkAnalysis*>& nets,
                         const std::string& prefix_degree, const std::string& prefix_clustering,
                         const std::string& prefix_hops) {
  files.write(prefix_degree, [&](std::ostream& out) { write_degree_csv(out, nets); });
  files.write(prefix_clustering, [&](std::ostream& out) { write_clustering_csv(out, nets); });
  files.write(prefix_hops, [&](std::ostream& out) { write_hop_csv(out, nets); });
}

Subgraph giant_of(const Graph& g) { return extract_giant(g, connected_components(g)); }

}  // namespace

json run_stats(const std::filesystem::path& graph_path, const std::filesystem::path& out_dir,
               const Options& options) {
  Provenance prov("stats", options);
  prov.input(graph_path);
  const auto loaded = load_edge_list(graph_path);
  const auto components = connected_components(loaded.graph);
  const auto giant = extract_giant(loaded.graph, components);
  const auto analysis = analyze_network(options.dataset, giant.graph, options);

  json doc = header("stats", options);
  doc["load"] = to_json(loaded.summary);
  doc["components"] = {{"count", components.component_count()}, {"giant_nodes", components.giant_size()}};
  doc["network"] = to_json(analysis);
  doc["provenance"] = prov.finish();

  OutputFiles files(out_dir);
  files.write_json("stats.json", doc);
  write_network_files(files, {&analysis}, "degree_histogram.csv", "clustering_by_degree.csv", "hop_distance.csv");
  files.write("fit_table.csv", [&](std::ostream& out) {
    write_fit_table(out, {{options.dataset + ":degree", &analysis.degree_fit.ranked},
                          {options.dataset + ":clustering_by_degree", &analysis.clustering_fit.ranked},
                          {options.dataset + ":hop_distance", &analysis.hop_fit.ranked}});
  });
  files.commit();
  return doc;
}

json run_project(const std::filesystem::path& graph_path, const std::filesystem::path& cover_path,
                 const std::filesystem::path& out_dir, const Options& options) {
  Provenance prov("project", options);
  prov.input(graph_path);
  prov.input(cover_path);
  const auto loaded = load_edge_list(graph_path);
  const auto cover = load_cover(cover_path, loaded.graph, {options.ignore_unknown_ids});
  const auto projection = project_cover(cover.cover, options);

  json doc = header("project", options);
  doc["load"] = to_json(loaded.summary);
  doc["cover"] = to_json(cover.summary);
  doc["projection"] = to_json(projection);
  doc["provenance"] = prov.finish();

  OutputFiles files(out_dir);
  files.write("projected_edges.txt", [&](std::ostream& out) {
    out << "# community_u community_v shared_members\n";
    projection.projected.write_edge_list(out, true);
  });
  files.write_json("census.json", doc);
  files.commit();
  return doc;
}

FitInput read_fit_input(std::istream& in, FitInputKind kind) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (kind == FitInputKind::automatic)
    kind = !lines.empty() && lines.front().find(',') != std::string::npos ? FitInputKind::histogram
                                                                          : FitInputKind::samples;
  auto parse_number = [](const std::string& tok, std::size_t line_no) {
    double x{};
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto [ptr, ec] = std::from_chars(b, e, x);
    if (ec != std::errc{} || ptr != e || !std::isfinite(x))
      throw ParseError("line " + std::to_string(line_no) + ": not a number '" + tok + "'", line_no);
    return x;
  };

  std::vector<std::pair<double, double>> vw;
  if (kind == FitInputKind::histogram) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i == 0 && lines[i].find_first_of("0123456789") == std::string::npos) continue;  // header
      std::stringstream ss(lines[i]);
      std::string a, b;
      std::getline(ss, a, ',');
      std::getline(ss, b, ',');
      const double w = parse_number(b, i + 1);
      if (w < 0) throw ParseError("line " + std::to_string(i + 1) + ": negative count", i + 1);
      vw.emplace_back(parse_number(a, i + 1), w);
    }
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::stringstream ss(lines[i]);
      std::string tok;
      while (ss >> tok) vw.emplace_back(parse_number(tok, i + 1), 1.0);
    }
  }
  double total = 0;
  for (auto [v, w] : vw) total += w;
  if (total < kMinFitSampleSize)
    throw InputError("need at least 5 samples to fit, got " + number(total));
  // Raw samples are fitted as given; histogram values keep the
  // positive-only convention used for the figure distributions.
  if (kind == FitInputKind::histogram) return fit_input(std::move(vw));
  return FitInput{Sample::from_weighted(std::move(vw)), 0};
}

json run_fit(const std::filesystem::path& input_path, const std::filesystem::path& out_dir, const Options& options,
             FitInputKind kind) {
  Provenance prov("fit", options);
  prov.input(input_path);
  std::ifstream in(input_path);
  if (!in) throw InputError("cannot open fit input " + input_path.string());
  auto input = read_fit_input(in, kind);
  const auto block = fit_block(std::move(input), options.threads);

  json doc = header("fit", options);
  doc["fits"] = to_json(block);
  try {
    doc["powerlaw_scan"] = to_json(powerlaw_xmin_scan(block.input.sample));
  } catch (const FitError&) {
    doc["powerlaw_scan"] = nullptr;
  }
  doc["provenance"] = prov.finish();

  OutputFiles files(out_dir);
  files.write_json("fit.json", doc);
  files.write("fit_table.csv", [&](std::ostream& out) { write_fit_table(out, {{options.dataset, &block.ranked}}); });
  files.commit();
  return doc;
}

json run_report(const std::filesystem::path& graph_path, const std::filesystem::path& cover_path,
                const std::filesystem::path& out_dir, const Options& options) {
  Provenance prov("report", options);
  prov.input(graph_path);
  prov.input(cover_path);
  const auto loaded = load_edge_list(graph_path);
  const auto cover = load_cover(cover_path, loaded.graph, {options.ignore_unknown_ids});
  const auto projection = project_cover(cover.cover, options);
  const auto base_giant = giant_of(loaded.graph);

  const std::string base_name = options.dataset;
  const std::string projected_name = options.dataset + "*";
  const auto base = analyze_network(base_name, base_giant.graph, options);
  const auto projected = analyze_network(projected_name, projection.giant.graph, options);
  const auto cover_stats = analyze_cover(cover.cover, projection.projected, options.threads);

  json doc = header("report", options);
  doc["load"] = to_json(loaded.summary);
  doc["cover"] = to_json(cover.summary);
  doc["projection"] = to_json(projection);
  doc["networks"] = {{"base", to_json(base)}, {"projected", to_json(projected)}};
  doc["cover_distributions"] = to_json(cover_stats);
  doc["provenance"] = prov.finish();

  OutputFiles files(out_dir);
  files.write_json("report.json", doc);
  write_network_files(files, {&base, &projected}, "fig1_degree.csv", "fig2_clustering_degree.csv",
                      "fig3_hop_distance.csv");
  write_histogram_csv(files, "fig4_membership.csv", cover_stats.membership.histogram);
  write_histogram_csv(files, "fig5_overlap_size.csv", cover_stats.overlap_size);
  write_histogram_csv(files, "fig6_community_degree.csv", cover_stats.community_degree);
  write_histogram_csv(files, "community_size.csv", cover_stats.community_size);
  files.write("table_degree.csv", [&](std::ostream& out) {
    write_fit_table(out, {{base_name, &base.degree_fit.ranked}, {projected_name, &projected.degree_fit.ranked}});
  });
  files.write("table_clustering_degree.csv", [&](std::ostream& out) {
    write_fit_table(out,
                    {{base_name, &base.clustering_fit.ranked}, {projected_name, &projected.clustering_fit.ranked}});
  });
  files.write("table_hop_distance.csv", [&](std::ostream& out) {
    write_fit_table(out, {{base_name, &base.hop_fit.ranked}, {projected_name, &projected.hop_fit.ranked}});
  });
  files.write("table_cover.csv", [&](std::ostream& out) {
    write_fit_table(out, {{"membership", &cover_stats.membership_fit.ranked},
                          {"overlap_size", &cover_stats.overlap_fit.ranked},
                          {"community_size", &cover_stats.community_size_fit.ranked},
                          {"community_degree", &cover_stats.community_degree_fit.ranked}});
  });
  if (options.svg) {
    auto svg = [&](const std::string& name, const std::string& title,
                   std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series) {
      files.write(name, [&](std::ostream& out) { write_loglog_svg(out, title, series); });
    };
    svg("fig1_degree.svg", "Degree distribution",
        {{base_name, histogram_points(base.metrics.degrees)},
         {projected_name, histogram_points(projected.metrics.degrees)}});
    auto clustering_points = [](const NetworkAnalysis& a) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& [k, e] : a.metrics.clustering.per_degree)
        pts.emplace_back(static_cast<double>(k), e.mean_clustering);
      return pts;
    };
    svg("fig2_clustering_degree.svg", "Average clustering by degree",
        {{base_name, clustering_points(base)}, {projected_name, clustering_points(projected)}});
    auto hop_points = [](const NetworkAnalysis& a) {
      std::vector<std::pair<double, double>> pts;
      for (std::size_t d = 1; d < a.metrics.hops.pair_counts.size(); ++d)
        pts.emplace_back(static_cast<double>(d), a.metrics.hops.pmf(static_cast<std::uint32_t>(d)));
      return pts;
    };
    svg("fig3_hop_distance.svg", "Hop distance distribution",
        {{base_name, hop_points(base)}, {projected_name, hop_points(projected)}});
    svg("fig4_membership.svg", "Membership number", {{base_name, histogram_points(cover_stats.membership.histogram)}});
    svg("fig5_overlap_size.svg", "Overlap size", {{base_name, histogram_points(cover_stats.overlap_size)}});
    svg("fig6_community_degree.svg", "Community degree", {{base_name, histogram_points(cover_stats.community_degree)}});
  }
  files.commit();
  return doc;
}

}  // namespace ocn::report
