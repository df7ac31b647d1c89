// ocn: overlapping community network analysis.
//
//   ocn stats   GRAPH            --out DIR
//   ocn project GRAPH COVER      --out DIR [--threshold T]
//   ocn fit     INPUT            --out DIR [--input-kind auto|histogram|samples]
//   ocn report  GRAPH COVER      --out DIR [--svg]
//
// Exit codes: 0 success, 1 computation error, 2 input error.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "ocn/report.hpp"

namespace {

constexpr int kComputationError = 1;
constexpr int kInputError = 2;

void print_summary(const ocn::report::json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  const std::string command = doc.value("command", "");
  if (command == "stats") {
    const auto& s = doc["network"]["summary"];
    std::cout << "nodes," << s["nodes"] << "\nedges," << s["edges"] << "\nmean_degree," << s["degree"]["mean"]
              << "\nmax_degree," << s["degree"]["max"] << "\naverage_shortest_path," << s["average_shortest_path"]
              << "\ndiameter," << s["diameter"] << "\naverage_local_clustering," << s["average_local_clustering"]
              << "\ntransitivity," << s["transitivity"] << "\nassortativity," << s["assortativity"] << '\n';
  } else if (command == "project") {
    const auto& p = doc["projection"];
    std::cout << "communities," << p["communities"] << "\nedges," << p["edges"] << "\ngiant_nodes,"
              << p["giant"]["nodes"] << "\ngiant_edges," << p["giant"]["edges"] << "\ngiant_node_fraction,"
              << p["census"]["giant_node_fraction"] << '\n';
  } else if (command == "fit") {
    std::cout << "family,ks\n";
    for (const auto& r : doc["fits"]["ranked"]) std::cout << r["family"].get<std::string>() << ',' << r["ks"] << '\n';
  } else if (command == "report") {
    for (const char* which : {"base", "projected"}) {
      const auto& n = doc["networks"][which];
      const auto& s = n["summary"];
      std::cout << n["name"].get<std::string>() << ": nodes=" << s["nodes"] << " edges=" << s["edges"]
                << " asp=" << s["average_shortest_path"] << " diameter=" << s["diameter"]
                << " clustering=" << s["average_local_clustering"] << " transitivity=" << s["transitivity"]
                << " assortativity=" << s["assortativity"] << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlapping community network analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ocn::report::tool_version());

  ocn::report::Options options;
  std::filesystem::path out_dir = "ocn-out";
  std::string format = "csv";
  std::size_t sample_sources = ocn::report::kDefaultHopSources;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sub->add_option("--dataset", options.dataset, "Dataset label used in tables")->capture_default_str();
    sub->add_option("--threads", options.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--format", format, "Summary printed to stdout")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_flag("--no-timestamps", "Omit wall-clock fields for byte-identical output")
        ->each([&](const std::string&) { options.timestamps = false; });
  };
  auto add_metrics = [&](CLI::App* sub) {
    sub->add_option("--sample-sources", sample_sources, "BFS sources for sampled hop distances")
        ->capture_default_str();
    sub->add_option("--seed", options.seed, "Seed for source sampling")->capture_default_str();
    sub->add_flag("--exact-hops", options.exact_hops, "All-pairs hop distances");
  };
  auto add_cover = [&](CLI::App* sub) {
    sub->add_option("--threshold", options.threshold, "Minimum shared members for a community link")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--ignore-unknown-ids", options.ignore_unknown_ids,
                  "Drop community members missing from the graph instead of failing");
  };

  std::filesystem::path graph_path, cover_path, fit_path;
  std::string input_kind = "auto";

  auto* stats = app.add_subcommand("stats", "Topological statistics of an edge list");
  stats->add_option("graph", graph_path, "Edge list")->required();
  add_common(stats);
  add_metrics(stats);

  auto* project = app.add_subcommand("project", "Build the overlapping community network");
  project->add_option("graph", graph_path, "Edge list")->required();
  project->add_option("cover", cover_path, "Community file, one community per line")->required();
  add_common(project);
  add_cover(project);

  auto* fit = app.add_subcommand("fit", "Fit the ten candidate families and rank by KS distance");
  fit->add_option("input", fit_path, "Histogram CSV (value,count) or raw samples")->required();
  fit->add_option("--input-kind", input_kind, "auto, histogram or samples")
      ->check(CLI::IsMember({"auto", "histogram", "samples"}))
      ->capture_default_str();
  add_common(fit);

  auto* report = app.add_subcommand("report", "Full analysis of a network and its community network");
  report->add_option("graph", graph_path, "Edge list")->required();
  report->add_option("cover", cover_path, "Community file")->required();
  report->add_flag("--svg", options.svg, "Also write log-log SVG scatter plots");
  add_common(report);
  add_metrics(report);
  add_cover(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  options.hop_sources = sample_sources;

  try {
    ocn::report::json doc;
    if (*stats) {
      doc = ocn::report::run_stats(graph_path, out_dir, options);
    } else if (*project) {
      doc = ocn::report::run_project(graph_path, cover_path, out_dir, options);
    } else if (*fit) {
      const auto kind = input_kind == "histogram" ? ocn::report::FitInputKind::histogram
                        : input_kind == "samples" ? ocn::report::FitInputKind::samples
                                                  : ocn::report::FitInputKind::automatic;
      doc = ocn::report::run_fit(fit_path, out_dir, options, kind);
    } else if (*report) {
      doc = ocn::report::run_report(graph_path, cover_path, out_dir, options);
    }
    print_summary(doc, format);
  } catch (const ocn::InputError& e) {
    std::cerr << "ocn: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "ocn: " << e.what() << '\n';
    return kComputationError;
  }
  return 0;
}
