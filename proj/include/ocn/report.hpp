#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ocn/cover.hpp"
#include "ocn/distfit.hpp"
#include "ocn/graph.hpp"
#include "ocn/metrics.hpp"
#include "ocn/project.hpp"

namespace ocn::report {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kDefaultHopSources = 3000;
inline constexpr std::uint64_t kDefaultSeed = 42;

std::string tool_version();

struct Options {
  std::string dataset = "dataset";
  /// Exact all-pairs hop distances; otherwise min(hop_sources, n) sampled
  /// BFS sources.
  bool exact_hops = false;
  std::size_t hop_sources = kDefaultHopSources;
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t threshold = 1;
  unsigned threads = 0;
  bool ignore_unknown_ids = false;
  /// Omit wall-clock fields so repeated runs give byte-identical JSON.
  bool timestamps = true;
  bool svg = false;

  HopMode hop_mode(std::size_t nodes) const;
};

// ---------------------------------------------------------------------------
// JSON views of the core types

json to_json(const LoadSummary& s);
json to_json(const CoverLoadSummary& s);
json to_json(const ComponentCensus& c);
json to_json(const GlobalSummary& s);
json to_json(const HopDistribution& h);
json to_json(const ClusteringByDegree& c);
json to_json(const IntegerHistogram& h);
json to_json(const FitResult& r);
json to_json(const std::vector<FitResult>& ranked);
json to_json(const PowerLawScan& s);

// ---------------------------------------------------------------------------
// Analyses

/// A fit input: positive values only (zeros cannot appear on a log-log
/// plot and several families need positive support).
struct FitInput {
  Sample sample;
  double zero_values_dropped = 0;
};

FitInput fit_input(const IntegerHistogram& h);
FitInput fit_input(std::vector<std::pair<double, double>> value_weight);

struct FitBlock {
  FitInput input;
  std::vector<FitResult> ranked;
};

FitBlock fit_block(FitInput input, unsigned threads = 1);
json to_json(const FitBlock& b);

/// Metrics and the three distribution fits for one network.
struct NetworkAnalysis {
  std::string name;
  GraphMetrics metrics;
  FitBlock degree_fit;
  FitBlock clustering_fit;
  FitBlock hop_fit;
  std::optional<PowerLawScan> degree_scan;
};

NetworkAnalysis analyze_network(std::string name, const Graph& g, const Options& options);
json to_json(const NetworkAnalysis& a);

/// Overlap distributions of a cover plus the projected network.
struct CoverAnalysis {
  MembershipHistogram membership;
  IntegerHistogram overlap_size;
  IntegerHistogram community_size;
  IntegerHistogram community_degree;
  std::uint64_t overlap_sum = 0;
  std::uint64_t membership_pairs = 0;
  FitBlock membership_fit;
  FitBlock overlap_fit;
  FitBlock community_size_fit;
  FitBlock community_degree_fit;
};

CoverAnalysis analyze_cover(const CommunityCover& cover, const ProjectedGraph& pg, unsigned threads);
json to_json(const CoverAnalysis& a);

/// Projection of a cover and its component census.
struct ProjectionResult {
  ProjectedGraph projected;
  ComponentCensus census;
  Subgraph giant;
};

ProjectionResult project_cover(const CommunityCover& cover, const Options& options);
json to_json(const ProjectionResult& p);

// ---------------------------------------------------------------------------
// Tables and figures

/// Table layout: one row per dataset, one KS column per family in family
/// order, two decimals; "NA" for inapplicable families.
void write_fit_table(std::ostream& out,
                     const std::vector<std::pair<std::string, const std::vector<FitResult>*>>& rows);

/// Minimal log-log scatter plot; points with a nonpositive coordinate are
/// skipped.
void write_loglog_svg(std::ostream& out, const std::string& title,
                      const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series);

// ---------------------------------------------------------------------------
// Commands. Each writes its files into out_dir and returns the main JSON
// document it wrote. On failure every file written so far is removed.

json run_stats(const std::filesystem::path& graph_path, const std::filesystem::path& out_dir,
               const Options& options);
json run_project(const std::filesystem::path& graph_path, const std::filesystem::path& cover_path,
                 const std::filesystem::path& out_dir, const Options& options);

enum class FitInputKind { automatic, histogram, samples };
/// Reads "value,count" histogram CSV or whitespace/newline-separated raw
/// samples. Throws InputError when fewer than 5 samples are present.
FitInput read_fit_input(std::istream& in, FitInputKind kind);
json run_fit(const std::filesystem::path& input_path, const std::filesystem::path& out_dir,
             const Options& options, FitInputKind kind = FitInputKind::automatic);

json run_report(const std::filesystem::path& graph_path, const std::filesystem::path& cover_path,
                const std::filesystem::path& out_dir, const Options& options);

}  // namespace ocn::report
