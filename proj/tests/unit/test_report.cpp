#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ocn/oracle.hpp"
#include "ocn/report.hpp"

namespace ocn {
namespace {

namespace fs = std::filesystem;
using report::json;

const fs::path kFixtures = OCN_FIXTURES;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const fs::path& p) { return json::parse(slurp(p)); }

class ReportTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ocn_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // A synthetic graph with a cover over its nodes, big enough for every fit.
  void write_synthetic(fs::path& graph, fs::path& cover) {
    graph = dir_ / "graph.txt";
    cover = dir_ / "cover.txt";
    Graph g = oracle::random_graph(250, 0.025, 77);
    std::ofstream ge(graph);
    for (auto [u, v] : g.edges()) ge << u + 1000 << '\t' << v + 1000 << '\n';
    ge.close();
    // nodes with an edge only, since isolated ones do not survive the edge list
    std::vector<NodeId> present;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (g.degree(v) > 0) present.push_back(v);
    auto c = oracle::random_cover(present.size(), 120, oracle::SizeLaw::power_law(2.3, 2, 25), 78);
    std::ofstream ce(cover);
    for (const auto& members : c.communities()) {
      for (std::size_t i = 0; i < members.size(); ++i) ce << (i ? " " : "") << present[members[i]] + 1000;
      ce << '\n';
    }
  }

  report::Options options() const {
    report::Options o;
    o.dataset = "synthetic";
    o.timestamps = false;
    o.threads = 2;
    o.hop_sources = 100;
    return o;
  }

  fs::path dir_;
};

TEST_F(ReportTest, StatsOnPathOfFour) {
  auto opts = options();
  opts.exact_hops = true;
  auto doc = report::run_stats(kFixtures / "p4.txt", dir_ / "out", opts);
  const auto& s = doc["network"]["summary"];
  EXPECT_EQ(s["nodes"], 4);
  EXPECT_EQ(s["diameter"], 3);
  EXPECT_NEAR(s["average_shortest_path"].get<double>(), 5.0 / 3, 1e-12);
  EXPECT_NEAR(s["assortativity"].get<double>(), -0.5, 1e-12);
  EXPECT_TRUE(s["average_local_clustering"].is_number());
  for (const char* f : {"stats.json", "degree_histogram.csv", "clustering_by_degree.csv", "hop_distance.csv",
                        "fit_table.csv"})
    EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
  EXPECT_EQ(load_json(dir_ / "out" / "stats.json"), doc);
  EXPECT_EQ(slurp(dir_ / "out" / "degree_histogram.csv"),
            "network,degree,count,fraction\nsynthetic,1,2,0.5\nsynthetic,2,2,0.5\n");
}

TEST_F(ReportTest, ProjectToyFixture) {
  auto doc = report::run_project(kFixtures / "toy_graph.txt", kFixtures / "toy_cover.txt", dir_ / "out", options());
  EXPECT_EQ(doc["projection"]["edges"], 1);
  EXPECT_EQ(doc["projection"]["census"]["isolated_nodes"], 1);
  const auto text = slurp(dir_ / "out" / "projected_edges.txt");
  EXPECT_NE(text.find("\n0 1 2\n"), std::string::npos);
}

TEST_F(ReportTest, ReportIsTheCompositionOfTheCommands) {
  fs::path graph, cover;
  write_synthetic(graph, cover);
  const auto opts = options();
  auto rep = report::run_report(graph, cover, dir_ / "report", opts);
  auto stats = report::run_stats(graph, dir_ / "stats", opts);
  auto proj = report::run_project(graph, cover, dir_ / "project", opts);

  EXPECT_EQ(rep["networks"]["base"], stats["network"]);
  EXPECT_EQ(rep["projection"], proj["projection"]);
  EXPECT_EQ(rep["cover"], proj["cover"]);
  EXPECT_EQ(rep["networks"]["projected"]["name"], "synthetic*");
  EXPECT_TRUE(rep["cover_distributions"]["counting_identity"]["holds"].get<bool>());

  // fitting a figure histogram through the fit command reproduces the report fits
  auto fit = report::run_fit(dir_ / "report" / "fig4_membership.csv", dir_ / "fit", opts);
  EXPECT_EQ(fit["fits"], rep["cover_distributions"]["membership"]["fits"]);

  for (const char* f : {"report.json", "fig1_degree.csv", "fig2_clustering_degree.csv", "fig3_hop_distance.csv",
                        "fig4_membership.csv", "fig5_overlap_size.csv", "fig6_community_degree.csv",
                        "community_size.csv", "table_degree.csv", "table_clustering_degree.csv",
                        "table_hop_distance.csv", "table_cover.csv"})
    EXPECT_TRUE(fs::exists(dir_ / "report" / f)) << f;
}

TEST_F(ReportTest, DeterministicWithoutTimestamps) {
  fs::path graph, cover;
  write_synthetic(graph, cover);
  auto opts = options();
  report::run_report(graph, cover, dir_ / "a", opts);
  opts.threads = 1;
  report::run_report(graph, cover, dir_ / "b", opts);
  for (const auto& entry : fs::directory_iterator(dir_ / "a"))
    EXPECT_EQ(slurp(entry.path()), slurp(dir_ / "b" / entry.path().filename())) << entry.path().filename();
  EXPECT_FALSE(load_json(dir_ / "a" / "report.json")["provenance"].contains("started_at"));
}

TEST_F(ReportTest, FailureLeavesNoPartialOutput) {
  std::ofstream(dir_ / "bad_cover.txt") << "1 2 999999\n";
  EXPECT_THROW(report::run_report(kFixtures / "toy_graph.txt", dir_ / "bad_cover.txt", dir_ / "out", options()),
               InputError);
  EXPECT_TRUE(!fs::exists(dir_ / "out") || fs::is_empty(dir_ / "out"));
}

TEST(FitTable, LayoutAndMissingValues) {
  std::vector<FitResult> ranked = fit_all(Sample::from_values(std::vector<double>{-2, -1, 0.5, 1, 3, 4, 9}));
  std::ostringstream out;
  report::write_fit_table(out, {{"d", &ranked}});
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "dataset,PL,BET,CAU,E,GM,LOG,LN,N,U,WB");
  // exponential (5th column) cannot take negatives
  const auto row = text.substr(text.find("\nd,") + 1);
  std::vector<std::string> cells;
  std::stringstream ss(row.substr(0, row.find('\n')));
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  ASSERT_EQ(cells.size(), 11u);
  EXPECT_EQ(cells[4], "NA");
  EXPECT_EQ(cells[8].find('.'), cells[8].size() - 3);  // normal: two decimals
}

TEST(FitInputReader, HistogramAndSamples) {
  std::istringstream hist("value,count\n1,3\n2,2\n0,4\n");
  auto h = report::read_fit_input(hist, report::FitInputKind::automatic);
  EXPECT_DOUBLE_EQ(h.sample.total_weight(), 5);
  EXPECT_DOUBLE_EQ(h.zero_values_dropped, 4);

  std::istringstream raw("1.5 2\n3\n# comment\n4 5\n");
  auto r = report::read_fit_input(raw, report::FitInputKind::automatic);
  EXPECT_DOUBLE_EQ(r.sample.total_weight(), 5);

  std::istringstream few("1 2 3\n");
  EXPECT_THROW(report::read_fit_input(few, report::FitInputKind::samples), InputError);
  std::istringstream junk("1 2 x 4 5\n");
  EXPECT_THROW(report::read_fit_input(junk, report::FitInputKind::samples), InputError);
}

#ifdef OCN_CLI
int run_cli(const std::string& args) {
  const std::string cmd = std::string(OCN_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(ReportTest, CliExitCodes) {
  const auto toy = (kFixtures / "toy_graph.txt").string();
  const auto cover = (kFixtures / "toy_cover.txt").string();
  EXPECT_EQ(run_cli("stats " + toy + " --out " + (dir_ / "ok").string()), 0);
  EXPECT_EQ(run_cli("stats /nonexistent.txt --out " + (dir_ / "missing").string()), 2);
  EXPECT_FALSE(fs::exists(dir_ / "missing"));
  EXPECT_EQ(run_cli("project " + toy + " " + cover + " --threshold 0 --out " + (dir_ / "t0").string()), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  std::ofstream(dir_ / "few.txt") << "1 2 3\n";
  EXPECT_EQ(run_cli("fit " + (dir_ / "few.txt").string() + " --out " + (dir_ / "few").string()), 2);
}

TEST_F(ReportTest, CliIsDeterministic) {
  fs::path graph, cover;
  write_synthetic(graph, cover);
  for (const char* out : {"x", "y"})
    ASSERT_EQ(run_cli("report " + graph.string() + " " + cover.string() + " --no-timestamps --sample-sources 50 --out " +
                      (dir_ / out).string()),
              0);
  EXPECT_EQ(slurp(dir_ / "x" / "report.json"), slurp(dir_ / "y" / "report.json"));
}
#endif

}  // namespace
}  // namespace ocn
