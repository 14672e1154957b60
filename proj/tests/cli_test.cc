#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twoterm/cli.h"
#include "twoterm/errors.h"
#include "twoterm/io.h"
#include "twoterm/reliability.h"
#include "twoterm/sweep.h"

namespace twoterm {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(TWOTERM_TEST_OUTPUT_DIR) /
           ("cli_" + std::string(::testing::UnitTest::GetInstance()
                                     ->current_test_info()
                                     ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Write(const std::string& name, const std::string& content) const {
    WriteFile(dir_ / name, content);
    return Path(name);
  }

  fs::path dir_;
};

const char* kC4Antipodal =
    R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]],"s":"a","t":"c"})";
const char* kC4Adjacent =
    R"({"vertices":[0,1,2,3],"edges":[[0,1],[1,2],[2,3],[3,0]],"s":0,"t":1})";

TEST(Graph6, HandDecodedC4) {
  // "C" = 67 - 63 = 4 vertices; "l" = 108 - 63 = 101101 over the pairs
  // (0,1) (0,2) (1,2) (0,3) (1,3) (2,3): edges 01, 12, 03, 23.
  SimpleGraph g = ParseGraph6("Cl");
  EXPECT_EQ(g.n, 4);
  std::vector<std::pair<int, int>> expected = {{0, 1}, {1, 2}, {0, 3}, {2, 3}};
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(EncodeGraph6(g), "Cl");
}

TEST(Graph6, HandDecodedK23) {
  // "D" = 5 vertices; "]" = 011110, "o" = 110000, ten pair bits
  // 0 1 1 1 1 0 1 1 0 0: edges 02, 12, 03, 13, 04, 14.
  SimpleGraph g = ParseGraph6(">>graph6<<D]o\n");
  EXPECT_EQ(g.n, 5);
  std::vector<std::pair<int, int>> expected = {{0, 2}, {1, 2}, {0, 3},
                                               {1, 3}, {0, 4}, {1, 4}};
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(TwoTerminalReliability(ToNetwork(g, 0, 2)),
            Polynomial({0, 1, 0, 2, -2, -1, 1}));
}

TEST(Graph6, RejectsMalformedLines) {
  EXPECT_THROW(ParseGraph6(""), InputError);
  EXPECT_THROW(ParseGraph6("Cl!"), InputError);  // '!' below 63
  EXPECT_THROW(ParseGraph6("C"), InputError);    // too short
  EXPECT_THROW(ParseGraph6("D]p"), InputError);  // nonzero padding bits
}

TEST(Graph6, RoundTripsLargerGraphs) {
  SimpleGraph g;
  g.n = 70;  // needs the long size form
  for (int j = 1; j < g.n; ++j) g.edges.emplace_back(j - 1, j);
  SimpleGraph back = ParseGraph6(EncodeGraph6(g));
  EXPECT_EQ(back.n, 70);
  EXPECT_EQ(back.edges, g.edges);
}

TEST(GraphJson, RoundTrip) {
  Network n = ParseGraphJson(kC4Antipodal);
  const std::string emitted = WriteGraphJson(n);
  Network again = ParseGraphJson(emitted);
  EXPECT_EQ(again.graph.Vertices(), n.graph.Vertices());
  EXPECT_EQ(again.graph.Edges(), n.graph.Edges());
  EXPECT_EQ(again.terminals, n.terminals);
  EXPECT_EQ(nlohmann::json::parse(emitted), nlohmann::json::parse(kC4Antipodal));
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(ParseGraphJson("{"), InputError);
  EXPECT_THROW(ParseGraphJson(R"({"vertices":[],"edges":[]})"), InputError);
  EXPECT_THROW(ParseGraphJson(R"({"vertices":["a"],"edges":[["a"]],"s":"a","t":"a"})"),
               InputError);
  EXPECT_THROW(ParseGraphJson(R"({"vertices":["a","b"],"edges":[["a","c"]],"s":"a","t":"b"})"),
               GraphError);
}

TEST_F(Workspace, MemoCacheRoundTrip) {
  ReliabilitySolver solver;
  // The Wheatstone bridge is not series-parallel, so the solver branches.
  Network bridge = FromEdgeList({"s", "a", "b", "t"},
                                {{"s", "a"}, {"s", "b"}, {"a", "b"}, {"a", "t"}, {"b", "t"}},
                                "s", "t");
  Network n = SubstituteGadget(bridge, bridge);
  Polynomial f = solver.Compute(n);
  ASSERT_GT(solver.CacheSize(), 0u);
  SaveMemoCache(solver, Path("memo.bin"));
  ReliabilitySolver fresh;
  EXPECT_EQ(LoadMemoCache(fresh, Path("memo.bin")), solver.CacheSize());
  EXPECT_EQ(fresh.Snapshot(), solver.Snapshot());
  EXPECT_EQ(fresh.Compute(n), f);
  EXPECT_EQ(fresh.Branches(), 0u);
  EXPECT_EQ(LoadMemoCache(fresh, Path("missing.bin")), 0u);
  Write("bad.bin", "TTMEMO garbage");
  EXPECT_THROW(LoadMemoCache(fresh, Path("bad.bin")), InputError);
  Write("foreign.bin", "not a cache at all");
  EXPECT_THROW(LoadMemoCache(fresh, Path("foreign.bin")), InputError);
}

TEST_F(Workspace, ComputeFromJson) {
  std::string c4 = Write("c4.json", kC4Antipodal);
  CliResult r = Cli({"compute", "--graph", c4});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*p^2 - p^4\n");
  r = Cli({"compute", "--graph", c4, "--factored"});
  EXPECT_EQ(r.out, "p^2*(2 - p^2)\n");
  r = Cli({"compute", "--graph", c4, "--s", "a", "--t", "b", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["polynomial"], "p + p^3 - p^4");
  EXPECT_EQ(doc["degree"], 4);
}

TEST_F(Workspace, RootsOfCycleFamily) {
  CliResult r = Cli({"roots", "--family", "cycle", "--n", "4", "--k", "2", "--out",
               Path("roots.csv"), "--svg", Path("roots.svg")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = ReadFile(Path("roots.csv"));
  EXPECT_EQ(csv,
            "graph_id,s,t,re,im,residual,zero_mult\n"
            "0,s,t,-1.4142135623730951,0,4.815e-35,0\n"
            "0,s,t,1.4142135623730951,0,4.815e-35,0\n"
            "0,s,t,0,0,0,2\n");
  const std::string svg = ReadFile(Path("roots.svg"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
}

TEST_F(Workspace, ExitCodes) {
  EXPECT_EQ(Cli({"compute", "--graph", Path("nope.json")}).code, 1);
  EXPECT_EQ(Cli({"compute", "--graph", Write("bad.json", "{")}).code, 1);
  EXPECT_EQ(Cli({"compute", "--bogus"}).code, 2);
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  EXPECT_EQ(Cli({"compute", "--family", "star"}).code, 2);
  EXPECT_EQ(Cli({"compute"}).code, 2);
  EXPECT_EQ(Cli({"compute", "--family", "cycle", "--n", "2", "--k", "1"}).code, 1);
  EXPECT_EQ(Cli({"density", "--re", "0", "--im", "0"}).code, 1);
  CliResult help = Cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("compute"), std::string::npos);
}

TEST_F(Workspace, FamilySubstituteAndAttractor) {
  CliResult fam = Cli({"family", "--family", "theta", "--l", "8", "--k", "2", "--out",
                 Path("theta.json")});
  EXPECT_EQ(fam.code, 0);
  EXPECT_EQ(fam.out, "theta(l=8,k=2): 2*p^8 - p^16\n");
  EXPECT_EQ(Cli({"compute", "--graph", Path("theta.json")}).out, "2*p^8 - p^16\n");

  std::string c4 = Write("c4.json", kC4Antipodal);
  CliResult sub = Cli({"substitute", "--graph", c4, "--gadget", c4, "--out", Path("c4c4.json")});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("12 vertices, 16 edges"), std::string::npos);
  EXPECT_NE(sub.out.find("identity: holds"), std::string::npos);

  std::string adj = Write("adj.json", kC4Adjacent);
  CliResult att = Cli({"attractor", "--graph", adj, "--depth", "6", "--svg", Path("a.svg"),
                 "--out", Path("a.csv")});
  EXPECT_EQ(att.code, 0);
  EXPECT_TRUE(fs::exists(Path("a.svg")));
  EXPECT_EQ(ReadFile(Path("a.csv")).rfind("re,im,depth\n", 0), 0u);
}

TEST_F(Workspace, AnalysisCommands) {
  CliResult conn = Cli({"connectivity", "--coeffs", "0,1,0,2,-2,-1,1"});
  EXPECT_EQ(conn.code, 0);
  EXPECT_NE(conn.out.find("disconnected-certified"), std::string::npos);
  CliResult stab = Cli({"stability", "--family", "cycle", "--n", "8", "--k", "3"});
  EXPECT_EQ(stab.code, 0);
  EXPECT_NE(stab.out.find("numeric cross-check: agrees"), std::string::npos);
  CliResult census = Cli({"census", "--family", "cycle", "--n", "7", "--k", "3",
                    "--format", "json"});
  auto doc = nlohmann::json::parse(census.out);
  EXPECT_EQ(doc["census"]["total_real"], 5);
  CliResult density = Cli({"density", "--re", "0.5", "--im", "0.2", "--m", "2"});
  EXPECT_EQ(density.code, 0) << density.out;
}

TEST_F(Workspace, SweepIsDeterministic) {
  const std::string corpus =
      (fs::path(TWOTERM_TEST_DATA_DIR) / "connected_order5.g6").string();
  CliResult a = Cli({"sweep", corpus, "--out", Path("a.csv"), "--threads", "1"});
  CliResult b = Cli({"sweep", corpus, "--out", Path("b.csv"), "--threads", "3",
               "--cache", Path("cache")});
  CliResult c = Cli({"sweep", corpus, "--out", Path("c.csv"), "--cache", Path("cache")});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(ReadFile(Path("a.csv")), ReadFile(Path("b.csv")));
  EXPECT_EQ(ReadFile(Path("a.csv")), ReadFile(Path("c.csv")));
  EXPECT_NE(a.out.find("graphs: 21"), std::string::npos);
}

TEST(Sweep, SingleC4AllPairs) {
  std::istringstream in("Cl\n");
  std::ostringstream csv, warnings;
  ReliabilitySolver solver;
  SweepSummary s = SweepGraph6(in, csv, solver, {}, warnings);
  EXPECT_EQ(s.graphs, 1u);
  EXPECT_EQ(s.tasks, 6u);
  EXPECT_EQ(s.distinct_polynomials, 2u);
  EXPECT_TRUE(warnings.str().empty());
}

TEST(Sweep, EmptyAndMalformedInput) {
  std::istringstream empty("");
  std::ostringstream csv, warnings;
  ReliabilitySolver solver;
  SweepSummary s = SweepGraph6(empty, csv, solver, {}, warnings);
  EXPECT_EQ(s.graphs, 0u);
  EXPECT_EQ(csv.str(), "graph_id,s,t,re,im,residual,zero_mult\n");

  std::istringstream mixed("Cl\nbad line\nD]o\n");
  std::ostringstream csv2, warnings2;
  SweepOptions options;
  options.terminals = std::pair{0, 1};
  SweepSummary m = SweepGraph6(mixed, csv2, solver, options, warnings2);
  EXPECT_EQ(m.graphs, 2u);
  EXPECT_EQ(m.malformed, 1u);
  EXPECT_EQ(m.tasks, 2u);
  EXPECT_NE(warnings2.str().find("line 2"), std::string::npos);
}

}  // namespace
}  // namespace twoterm
