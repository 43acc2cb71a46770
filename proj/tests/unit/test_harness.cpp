#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "achlioptas/graph.hpp"
#include "achlioptas/harness.hpp"
#include "achlioptas/serialize.hpp"
#include "oracles.hpp"

using namespace achlioptas;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "achlioptas_unit";
  fs::create_directories(dir);
  return dir / name;
}

// Runs the CLI and returns its exit status.
int cli(const std::string& args) {
  const std::string cmd = std::string(ACHLIOPTAS_CLI) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

const fs::path fixtures{ACHLIOPTAS_FIXTURES};

}  // namespace

TEST(Config, Validation) {
  ExperimentConfig c;
  c.n = 100;
  c.k_list = {2};
  EXPECT_NO_THROW(c.validate());
  c.strategy = "nope";
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.strategy = "d-out";
  c.model = SamplingModel::ExactMissing;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.model = SamplingModel::RelaxedPairs;
  EXPECT_NO_THROW(c.validate());
  c.k_list = {0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.k_list = {3};
  c.seeds.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, JsonOverridesAndUnknownKeys) {
  ExperimentConfig c;
  apply_config_json(c, {{"strategy", "first-edge"}, {"n", 50}, {"K", {1, 2}}, {"seeds", 3}});
  EXPECT_EQ(c.strategy, "first-edge");
  EXPECT_EQ(c.n, 50u);
  EXPECT_EQ(c.k_list, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_THROW(apply_config_json(c, {{"bogus", 1}}), std::invalid_argument);
}

TEST(Strategies, FactoryKnowsEveryId) {
  for (const auto& id : strategy_ids()) {
    EXPECT_NO_THROW(make_strategy(id, Preset::Desk, nlohmann::json::object(), 1000, 8)) << id;
  }
  EXPECT_THROW(make_strategy("sublog", Preset::Desk, {{"nonsense", 1}}, 1000, 4),
               std::invalid_argument);
  EXPECT_THROW(make_strategy("other", Preset::Desk, nlohmann::json::object(), 1000, 4),
               std::invalid_argument);
}

TEST(Summary, MedianAndSuccessOnly) {
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2);
  EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
  RunRecord ok, bad;
  ok.total_rounds = 10;
  ok.outcome.kind = OutcomeKind::Hamiltonian;
  bad.total_rounds = 1000;
  bad.outcome.kind = OutcomeKind::BudgetExhausted;
  const auto cell = summarize("x", 10, 2, {&ok, &bad}, 1);
  EXPECT_EQ(cell.runs, 3u);
  EXPECT_EQ(cell.successes, 1u);
  EXPECT_DOUBLE_EQ(*cell.median_total, 10);
  EXPECT_FALSE(cell.stddev_total.has_value());
}

TEST(Sweep, JobsDoNotChangeOutput) {
  ExperimentConfig c;
  c.strategy = "sublog";
  c.n = 200;
  c.k_list = {3, 6};
  c.seeds = {0, 1, 2};
  c.jobs = 1;
  const auto a = sweep(c);
  c.jobs = 3;
  const auto b = sweep(c);
  std::stringstream sa, sb;
  write_sweep_csv(sa, a);
  write_sweep_csv(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(a.cells.size(), 2u);
}

TEST(Sweep, SingleSeedLeavesStddevEmpty) {
  ExperimentConfig c;
  c.strategy = "first-edge";
  c.n = 40;
  c.k_list = {1};
  c.seeds = {5};
  const auto r = sweep(c);
  std::stringstream s;
  write_sweep_csv(s, r);
  std::string line, last;
  while (std::getline(s, line))
    if (!line.empty()) last = line;
  ASSERT_EQ(last.rfind("aggregate,", 0), 0u);
  // stddev_total is the third field from the end.
  std::vector<std::string> fields;
  std::stringstream ls(last);
  for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
  if (last.back() == ',') fields.push_back("");
  ASSERT_GE(fields.size(), 3u);
  EXPECT_EQ(fields[fields.size() - 3], "");
}

TEST(Cli, RunIsReproducible) {
  const auto a = scratch("run_a.json"), b = scratch("run_b.json");
  const std::string args = "run --strategy first-edge --n 64 --k 1 --seed 7 --no-timestamp --out ";
  cli(args + a.string());
  cli(args + b.string());
  ASSERT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, SublogRecordPhasesSum) {
  const auto out = scratch("sublog.json");
  EXPECT_EQ(cli("run --strategy sublog --n 300 --k 4 --seed 1 --out " + out.string()), 0);
  const auto j = nlohmann::json::parse(slurp(out));
  ASSERT_EQ(j.at("phases").size(), 3u);
  std::uint64_t sum = 0;
  for (const auto& p : j.at("phases")) sum += p.at("rounds").get<std::uint64_t>();
  EXPECT_EQ(sum, j.at("total_rounds").get<std::uint64_t>());
  EXPECT_TRUE(j.at("metadata").contains("timestamp"));
}

TEST(Cli, CollectAllOverLedger) {
  const auto ledger = scratch("k1.jsonl"), report = scratch("collect.json");
  const int run_exit = cli("run --strategy first-edge --n 60 --k 1 --seed 3 --max-rounds 2000 --ledger " +
                           ledger.string());
  ASSERT_EQ(run_exit, 0);
  std::size_t lines = 0;
  {
    std::ifstream in(ledger);
    for (std::string l; std::getline(in, l);) lines += l.empty() ? 0 : 1;
  }
  EXPECT_EQ(cli("oracle --n 60 --ledger " + ledger.string() + " --out " + report.string()), 0);
  const auto j = nlohmann::json::parse(slurp(report));
  EXPECT_EQ(j.at("rounds").get<std::uint64_t>(), lines);
  ASSERT_FALSE(j.at("min_degree_2_round").is_null());
  if (!j.at("hamiltonian_round").is_null())
    EXPECT_GE(j.at("hamiltonian_round").get<std::uint64_t>(),
              j.at("min_degree_2_round").get<std::uint64_t>());
}

TEST(Cli, VerifyCertificateRejectsTampering) {
  const auto graph = scratch("c.edges"), good = scratch("good.cycle"), bad = scratch("bad.cycle");
  {
    std::ofstream g(graph);
    write_edge_list(g, cycle_graph(8));
    std::ofstream(good) << "0 1 2 3 4 5 6 7\n";
    std::ofstream(bad) << "0 1 2 3 5 4 6 7\n";
  }
  const std::string base = "verify --lemma certificate --graph " + graph.string() + " --cycle ";
  EXPECT_EQ(cli(base + good.string()), 0);
  EXPECT_NE(cli(base + bad.string()), 0);
}

TEST(Cli, VerifyCoreSizeOnStoredSample) {
  EXPECT_EQ(cli("verify --lemma core-size --D 10 --graph " + (fixtures / "gnp_n500.edges").string()),
            0);
}

TEST(Cli, VerifyExpansionMatchesGolden) {
  const auto out = scratch("expansion.json");
  const fs::path graph = fixtures / "expansion_n24.edges";
  EXPECT_EQ(cli("verify --lemma vertex-expansion --mode exhaustive --s-max 3 --factor 2 --graph " +
                graph.string() + " --out " + out.string()),
            1);
  const auto got = nlohmann::json::parse(slurp(out)).at("vertex-expansion");
  const auto golden = nlohmann::json::parse(slurp(fixtures / "expansion_n24_golden.json"));
  EXPECT_EQ(got.at("sets_checked"), golden.at("sets_checked"));
  ASSERT_EQ(got.at("witnesses").size(), golden.at("violations").size());
  for (std::size_t i = 0; i < golden.at("violations").size(); ++i) {
    EXPECT_EQ(got.at("witnesses")[i].at("vertices"), golden.at("violations")[i].at("set"));
    EXPECT_EQ(got.at("witnesses")[i].at("value"), golden.at("violations")[i].at("neighbors"));
  }

  // The stored file still agrees with a fresh subset enumeration.
  std::ifstream in(graph);
  const Graph g = read_edge_list(in);
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  const std::vector<bool> mask(all.size(), true);
  std::size_t violations = 0;
  for (const auto& s : oracle::all_subsets(all, 3))
    violations += oracle::neighbor_count(g, s, mask) < 2 * s.size() ? 1 : 0;
  EXPECT_EQ(violations, golden.at("violations").size());
}
