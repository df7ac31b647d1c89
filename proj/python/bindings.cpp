#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ocn/cover.hpp"
#include "ocn/distfit.hpp"
#include "ocn/graph.hpp"
#include "ocn/metrics.hpp"
#include "ocn/project.hpp"
#include "ocn/report.hpp"

namespace py = pybind11;
using namespace ocn;
using release = py::call_guard<py::gil_scoped_release>;

namespace {

// JSON documents cross the boundary as Python dicts.
py::object to_python(const report::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Family family_arg(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw py::value_error("unknown family '" + name + "'");
}

Sample sample_arg(const std::vector<double>& values, const std::optional<std::vector<double>>& weights) {
  if (!weights) return Sample::from_values(values);
  if (weights->size() != values.size()) throw py::value_error("values and weights differ in length");
  std::vector<std::pair<double, double>> vw;
  vw.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) vw.emplace_back(values[i], (*weights)[i]);
  return Sample::from_weighted(std::move(vw));
}

report::Options options_arg(const std::string& dataset, bool exact_hops, std::size_t hop_sources,
                            std::uint64_t seed, std::uint32_t threshold, unsigned threads, bool ignore_unknown_ids,
                            bool timestamps) {
  report::Options o;
  o.dataset = dataset;
  o.exact_hops = exact_hops;
  o.hop_sources = hop_sources;
  o.seed = seed;
  o.threshold = threshold;
  o.threads = threads;
  o.ignore_unknown_ids = ignore_unknown_ids;
  o.timestamps = timestamps;
  return o;
}

HopMode hop_mode_arg(const Graph& g, std::optional<std::size_t> sources, std::uint64_t seed) {
  if (!sources) return HopMode::all_pairs();
  return HopMode::sampled(std::min(*sources, g.node_count()), seed);
}

}  // namespace

PYBIND11_MODULE(_ocn, m) {
  m.doc() = "Overlapping community network analysis (C++ core)";
  m.attr("__version__") = report::tool_version();

  // ParseError and CoverError derive from InputError and map with it.
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);

  // -- graphs ---------------------------------------------------------------
  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                       std::vector<Label> labels) {
             std::vector<Edge> es;
             es.reserve(edges.size());
             for (auto [u, v] : edges) {
               if (u >= n || v >= n) throw py::index_error("edge endpoint out of range");
               es.push_back({u, v});
             }
             if (!labels.empty() && labels.size() != n) throw py::value_error("labels must have one entry per node");
             return Graph::from_edges(n, es, std::move(labels));
           }),
           py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<Label>{})
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, NodeId v) {
        if (v >= g.node_count()) throw py::index_error("node out of range");
        auto s = g.neighbors(v);
        return std::vector<NodeId>(s.begin(), s.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("label", &Graph::label)
      .def("find_label", &Graph::find_label)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<NodeId, NodeId>> out;
        for (auto [u, v] : g.edges()) out.emplace_back(u, v);
        return out;
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<ocn.Graph n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "load_edge_list",
      [](const std::filesystem::path& path) {
        auto loaded = load_edge_list(path);
        return py::make_tuple(std::move(loaded.graph), to_python(report::to_json(loaded.summary)));
      },
      py::arg("path"), "Reads an edge list; returns (graph, load summary).");

  m.def(
      "extract_giant",
      [](const Graph& g) {
        auto sub = extract_giant(g, connected_components(g));
        return py::make_tuple(std::move(sub.graph), std::move(sub.original_id));
      },
      py::arg("graph"), "Largest connected component; returns (graph, original ids).");

  m.def("component_sizes", [](const Graph& g) { return connected_components(g).component_sizes; });
  m.def("density", [](const Graph& g) {
    auto d = density(g);
    return py::dict(py::arg("undirected") = d.undirected, py::arg("directed_convention") = d.directed_convention);
  });

  // -- covers and projection -------------------------------------------------
  py::class_<CommunityCover>(m, "CommunityCover")
      .def(py::init([](std::size_t n, std::vector<std::vector<NodeId>> communities) {
             return CommunityCover::from_communities(n, std::move(communities));
           }),
           py::arg("n"), py::arg("communities"))
      .def_property_readonly("community_count", &CommunityCover::community_count)
      .def_property_readonly("node_count", &CommunityCover::node_count)
      .def("members", &CommunityCover::members)
      .def("memberships", &CommunityCover::memberships)
      .def("membership_number", &CommunityCover::membership_number);

  m.def(
      "load_cover",
      [](const std::filesystem::path& path, const Graph& g, bool ignore_unknown_ids) {
        auto loaded = load_cover(path, g, {ignore_unknown_ids});
        return py::make_tuple(std::move(loaded.cover), to_python(report::to_json(loaded.summary)));
      },
      py::arg("path"), py::arg("graph"), py::arg("ignore_unknown_ids") = false);

  m.def(
      "overlap_pairs",
      [](const CommunityCover& c, unsigned threads) {
        std::vector<std::tuple<CommunityId, CommunityId, std::uint32_t>> out;
        for (const auto& p : overlap_pairs(c, threads)) out.emplace_back(p.first, p.second, p.shared);
        return out;
      },
      py::arg("cover"), py::arg("threads") = 0, release());

  py::class_<ProjectedGraph>(m, "ProjectedGraph")
      .def_readonly("graph", &ProjectedGraph::graph)
      .def_readonly("threshold", &ProjectedGraph::threshold)
      .def_readonly("max_membership", &ProjectedGraph::max_membership)
      .def("weight", &ProjectedGraph::weight);

  m.def("project", &project, py::arg("cover"), py::arg("threshold") = 1, py::arg("threads") = 0, release());
  m.def("component_census", [](const Graph& g) { return to_python(report::to_json(component_census(g))); });

  // -- metrics ----------------------------------------------------------------
  m.def("local_clustering", &local_clustering);
  m.def("average_local_clustering", &average_local_clustering, py::arg("graph"), py::arg("threads") = 0);
  m.def("average_local_clustering_zero_filled", &average_local_clustering_zero_filled, py::arg("graph"),
        py::arg("threads") = 0);
  m.def("transitivity", &transitivity, py::arg("graph"), py::arg("threads") = 0);
  m.def("triangles", [](const Graph& g) { return count_triangles(g).triangles; });
  m.def("assortativity", &assortativity);
  m.def(
      "diameter", [](const Graph& g, unsigned threads) { return diameter(g, threads).value; }, py::arg("graph"),
      py::arg("threads") = 0, release());
  m.def(
      "hop_distribution",
      [](const Graph& g, std::optional<std::size_t> sources, std::uint64_t seed, unsigned threads) {
        HopDistribution h;
        {
          py::gil_scoped_release nogil;
          h = hop_distribution(g, hop_mode_arg(g, sources, seed), threads);
        }
        return to_python(report::to_json(h));
      },
      py::arg("graph"), py::arg("sources") = py::none(), py::arg("seed") = report::kDefaultSeed,
      py::arg("threads") = 0, "Exact when sources is None, otherwise sampled from min(sources, n) nodes.");
  m.def(
      "summary",
      [](const Graph& g, std::optional<std::size_t> sources, std::uint64_t seed, unsigned threads) {
        GraphMetrics gm;
        {
          py::gil_scoped_release nogil;
          gm = analyze_graph(g, {hop_mode_arg(g, sources, seed), threads});
        }
        return to_python(report::to_json(gm.summary));
      },
      py::arg("graph"), py::arg("sources") = py::none(), py::arg("seed") = report::kDefaultSeed,
      py::arg("threads") = 0);
  m.def("clustering_by_degree", [](const Graph& g) {
    std::map<std::size_t, double> out;
    for (const auto& [k, e] : clustering_by_degree(g).per_degree) out[k] = e.mean_clustering;
    return out;
  });

  // -- fitting ----------------------------------------------------------------
  m.attr("FAMILIES") = [] {
    std::vector<std::string> names;
    for (Family f : kAllFamilies) names.emplace_back(family_name(f));
    return names;
  }();

  py::class_<Distribution>(m, "Distribution")
      .def_property_readonly("family", [](const Distribution& d) { return std::string(family_name(d.family())); })
      .def("cdf", &Distribution::cdf)
      .def_property_readonly("parameters",
                             [](const Distribution& d) {
                               py::dict out;
                               for (const auto& p : d.parameters()) out[py::str(std::string(p.name))] = p.value;
                               return out;
                             })
      .def("__repr__", [](const Distribution& d) { return "<ocn.Distribution " + std::string(family_name(d.family())) + ">"; });

  m.def(
      "fit",
      [](const std::string& family, const std::vector<double>& values, std::optional<std::vector<double>> weights,
         std::optional<double> xmin) {
        FitOptions o;
        o.xmin = xmin;
        return fit(family_arg(family), sample_arg(values, weights), o);
      },
      py::arg("family"), py::arg("values"), py::arg("weights") = py::none(), py::arg("xmin") = py::none());
  m.def(
      "ks_statistic",
      [](const std::vector<double>& values, const Distribution& d, std::optional<std::vector<double>> weights) {
        return ks_statistic(sample_arg(values, weights), d);
      },
      py::arg("values"), py::arg("distribution"), py::arg("weights") = py::none());
  m.def(
      "fit_all",
      [](const std::vector<double>& values, std::optional<std::vector<double>> weights, unsigned threads) {
        std::vector<FitResult> ranked;
        const auto sample = sample_arg(values, weights);
        {
          py::gil_scoped_release nogil;
          ranked = fit_all(sample, {}, threads);
        }
        return to_python(report::to_json(ranked));
      },
      py::arg("values"), py::arg("weights") = py::none(), py::arg("threads") = 1,
      "All ten families ranked by KS distance (inapplicable ones last).");
  m.def(
      "powerlaw_xmin_scan",
      [](const std::vector<double>& values, std::optional<std::vector<double>> weights) {
        return to_python(report::to_json(powerlaw_xmin_scan(sample_arg(values, weights))));
      },
      py::arg("values"), py::arg("weights") = py::none());

  // -- commands ---------------------------------------------------------------
#define OCN_OPTION_ARGS                                                                                      \
  py::kw_only(), py::arg("dataset") = "dataset", py::arg("exact_hops") = false,                           \
      py::arg("hop_sources") = report::kDefaultHopSources, py::arg("seed") = report::kDefaultSeed,         \
      py::arg("threshold") = 1, py::arg("threads") = 0, py::arg("ignore_unknown_ids") = false,             \
      py::arg("timestamps") = true

  m.def(
      "run_stats",
      [](const std::filesystem::path& graph, const std::filesystem::path& out, const std::string& dataset,
         bool exact, std::size_t sources, std::uint64_t seed, std::uint32_t threshold, unsigned threads,
         bool ignore, bool timestamps) {
        auto o = options_arg(dataset, exact, sources, seed, threshold, threads, ignore, timestamps);
        report::json doc;
        {
          py::gil_scoped_release nogil;
          doc = report::run_stats(graph, out, o);
        }
        return to_python(doc);
      },
      py::arg("graph"), py::arg("out"), OCN_OPTION_ARGS);
  m.def(
      "run_project",
      [](const std::filesystem::path& graph, const std::filesystem::path& cover, const std::filesystem::path& out,
         const std::string& dataset, bool exact, std::size_t sources, std::uint64_t seed, std::uint32_t threshold,
         unsigned threads, bool ignore, bool timestamps) {
        auto o = options_arg(dataset, exact, sources, seed, threshold, threads, ignore, timestamps);
        report::json doc;
        {
          py::gil_scoped_release nogil;
          doc = report::run_project(graph, cover, out, o);
        }
        return to_python(doc);
      },
      py::arg("graph"), py::arg("cover"), py::arg("out"), OCN_OPTION_ARGS);
  m.def(
      "run_fit",
      [](const std::filesystem::path& input, const std::filesystem::path& out, const std::string& dataset,
         bool exact, std::size_t sources, std::uint64_t seed, std::uint32_t threshold, unsigned threads,
         bool ignore, bool timestamps) {
        auto o = options_arg(dataset, exact, sources, seed, threshold, threads, ignore, timestamps);
        report::json doc;
        {
          py::gil_scoped_release nogil;
          doc = report::run_fit(input, out, o);
        }
        return to_python(doc);
      },
      py::arg("input"), py::arg("out"), OCN_OPTION_ARGS);
  m.def(
      "run_report",
      [](const std::filesystem::path& graph, const std::filesystem::path& cover, const std::filesystem::path& out,
         const std::string& dataset, bool exact, std::size_t sources, std::uint64_t seed, std::uint32_t threshold,
         unsigned threads, bool ignore, bool timestamps) {
        auto o = options_arg(dataset, exact, sources, seed, threshold, threads, ignore, timestamps);
        report::json doc;
        {
          py::gil_scoped_release nogil;
          doc = report::run_report(graph, cover, out, o);
        }
        return to_python(doc);
      },
      py::arg("graph"), py::arg("cover"), py::arg("out"), OCN_OPTION_ARGS);
#undef OCN_OPTION_ARGS
}
