// Command-line front end: run, sweep, verify, oracle.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "achlioptas/harness.hpp"
#include "achlioptas/serialize.hpp"
#include "achlioptas/verify.hpp"

using namespace achlioptas;
using nlohmann::json;

namespace {

struct CommonFlags {
  std::string strategy;
  std::size_t n = 0;
  std::vector<std::size_t> k_list;
  std::string model;
  std::vector<std::uint64_t> seeds;
  std::size_t seed_count = 0;
  std::size_t jobs = 0;
  std::uint64_t max_rounds = 0;
  bool fidelity = false;
  bool desk = false;
  std::string params;
  std::string config;
  bool no_timestamp = false;
};

void add_common(CLI::App* app, CommonFlags& f, bool sweep) {
  app->add_option("--strategy", f.strategy, "sublog, superlog, d-out, intermediate, first-edge, skip");
  app->add_option("--n", f.n, "number of vertices");
  if (sweep) {
    app->add_option("--k,--k-list", f.k_list, "candidates per round (list)")->delimiter(',');
    app->add_option("--seeds", f.seeds, "explicit seed list")->delimiter(',');
    app->add_option("--seed-count", f.seed_count, "use seeds 0..N-1");
    app->add_option("--jobs", f.jobs, "parallel runs");
  } else {
    app->add_option("--k", f.k_list, "candidates per round")->expected(1);
    app->add_option("--seed", f.seeds, "seed")->expected(1);
  }
  app->add_option("--model", f.model, "exact or relaxed");
  app->add_option("--max-rounds", f.max_rounds, "round cap (0 = automatic)");
  auto* fid = app->add_flag("--fidelity", f.fidelity, "use the fidelity parameter preset");
  auto* desk = app->add_flag("--desk", f.desk, "use the desk parameter preset (default)");
  fid->excludes(desk);
  app->add_option("--params", f.params, "strategy parameter overrides as a JSON object");
  app->add_option("--config", f.config, "JSON config file; flags override it");
  app->add_flag("--no-timestamp", f.no_timestamp, "omit the timestamp metadata");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

ExperimentConfig build_config(const CommonFlags& f) {
  ExperimentConfig c;
  if (!f.config.empty()) apply_config_json(c, read_json_file(f.config));
  if (!f.strategy.empty()) c.strategy = f.strategy;
  if (f.n != 0) c.n = f.n;
  if (!f.k_list.empty()) c.k_list = f.k_list;
  if (!f.model.empty()) c.model = parse_sampling_model(f.model);
  if (!f.seeds.empty()) c.seeds = f.seeds;
  if (f.seed_count != 0) {
    c.seeds.clear();
    for (std::uint64_t s = 0; s < f.seed_count; ++s) c.seeds.push_back(s);
  }
  if (f.jobs != 0) c.jobs = f.jobs;
  if (f.max_rounds != 0) c.max_rounds = f.max_rounds;
  if (f.fidelity) c.preset = Preset::Fidelity;
  if (f.desk) c.preset = Preset::Desk;
  if (!f.params.empty()) {
    json overrides = json::parse(f.params);
    if (!overrides.is_object()) throw std::invalid_argument("--params must be a JSON object");
    for (auto& [key, value] : overrides.items()) c.params[key] = value;
  }
  return c;
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<LedgerEntry> read_ledger_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_ledger_jsonl(in);
}

int oracle_report(std::size_t n, const std::vector<LedgerEntry>& ledger, const CollectAllOptions& o,
                  const std::string& out) {
  const CollectAllReport report = collect_all_analyze(n, ledger, o);
  emit(out, to_json(report).dump(2) + "\n");
  return report.hamiltonian_round ? 0 : 1;
}

// Fresh first-edge run with a ledger, for oracle analysis.
std::vector<LedgerEntry> record_first_edge(std::size_t n, std::size_t k, SamplingModel model,
                                           std::uint64_t seed, std::uint64_t rounds) {
  EngineConfig ec;
  ec.n = n;
  ec.k = k;
  ec.model = model;
  ec.seed = seed;
  ec.record_ledger = true;
  FirstEdgeStrategy s;
  return run(ec, s, nullptr, rounds).ledger;
}

struct RunFlags {
  std::string out;
  std::string ledger;
  std::string ledger_in;
  std::string graph_out;
  std::string cycle_out;
  bool embed_ledger = false;
};

int cmd_run(const CommonFlags& f, const RunFlags& r) {
  ExperimentConfig c = build_config(f);
  if (c.k_list.empty()) c.k_list = {1};
  const std::uint64_t seed = c.seeds.front();
  const std::size_t k = c.k_list.front();

  if (c.strategy == "collect-all-analyze") {
    CollectAllOptions o;
    o.seed = seed;
    std::vector<LedgerEntry> ledger;
    if (!r.ledger_in.empty()) {
      ledger = read_ledger_file(r.ledger_in);
    } else {
      if (c.n < 4) throw std::invalid_argument("--n must be at least 4");
      ledger = record_first_edge(c.n, k, c.model, seed,
                                 c.max_rounds ? c.max_rounds : default_max_rounds(c.n));
    }
    return oracle_report(c.n, ledger, o, r.out);
  }

  c.seeds = {seed};
  c.k_list = {k};
  c.ledger = c.ledger || !r.ledger.empty() || r.embed_ledger;
  c.validate();
  EngineConfig ec;
  ec.n = c.n;
  ec.k = k;
  ec.model = c.model;
  ec.seed = seed;
  ec.record_ledger = c.ledger;
  Engine engine(ec);
  auto strategy = make_strategy(c.strategy, c.preset, c.params, c.n, k);
  const RunRecord record =
      run(engine, *strategy, nullptr, c.max_rounds ? c.max_rounds : default_max_rounds(c.n));

  std::optional<std::string> stamp;
  if (!f.no_timestamp) stamp = utc_timestamp();
  emit(r.out, to_json(record, r.embed_ledger, stamp).dump(2) + "\n");
  if (!r.ledger.empty()) {
    std::ofstream out(r.ledger);
    write_ledger_jsonl(out, record.ledger);
  }
  if (!r.graph_out.empty()) {
    std::ofstream out(r.graph_out);
    write_edge_list(out, engine.graph());
  }
  if (!r.cycle_out.empty() && record.outcome.kind == OutcomeKind::Hamiltonian) {
    std::ofstream out(r.cycle_out);
    write_cycle(out, record.outcome.cycle);
  }
  if (!r.out.empty() && r.out != "-") {
    std::cerr << record.strategy << " n=" << record.n << " K=" << record.k << " seed=" << record.seed
              << ": " << to_string(record.outcome.kind);
    if (!record.outcome.phase.empty()) std::cerr << " (" << record.outcome.phase << ")";
    std::cerr << " after " << record.total_rounds << " rounds\n";
  }
  return record.outcome.kind == OutcomeKind::Hamiltonian ? 0 : 1;
}

int cmd_sweep(const CommonFlags& f, const std::string& out) {
  const ExperimentConfig c = build_config(f);
  const SweepResult result = sweep(c);
  std::ostringstream csv;
  write_sweep_csv(csv, result);
  emit(out, csv.str());
  for (std::size_t i = 0; i < result.errors.size(); ++i) {
    if (result.errors[i]) std::cerr << "run " << i << " failed: " << *result.errors[i] << '\n';
  }
  return 0;
}

struct VerifyFlags {
  std::string graph;
  std::string cycle;
  std::string record;
  std::vector<std::string> lemmas;
  std::size_t core_degree = 2;
  std::size_t avg_k = 16;
  std::size_t s_max = 3;
  std::string factor = "2";
  bool strict = false;
  std::string mode = "exhaustive";
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  std::size_t split = 0;
  std::size_t d_exp = 3;
  std::size_t bound = 0;
  std::vector<Vertex> removed;
  std::string out;
};

Ratio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  Ratio r;
  try {
    r.num = std::stoull(text.substr(0, slash));
    r.den = slash == std::string::npos ? 1 : std::stoull(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad factor '" + text + "', expected p or p/q");
  }
  if (r.den == 0) throw std::invalid_argument("factor denominator is zero");
  return r;
}

int cmd_verify(const VerifyFlags& v) {
  for (const auto& id : v.lemmas) {
    if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end()) {
      throw std::invalid_argument("unknown lemma id '" + id + "'");
    }
  }
  if (v.graph.empty()) throw std::invalid_argument("--graph is required");
  std::ifstream gin(v.graph);
  if (!gin) throw std::runtime_error("cannot open " + v.graph);
  const Graph g = read_edge_list(gin);
  const std::size_t n = g.vertex_count();

  ExpansionOptions opts;
  if (v.mode == "sampled") {
    opts.mode = CheckMode::Sampled;
  } else if (v.mode != "exhaustive") {
    throw std::invalid_argument("--mode must be exhaustive or sampled");
  }
  opts.samples = v.samples;
  opts.seed = v.seed;

  json reports = json::object();
  bool ok = true;
  for (const auto& id : v.lemmas) {
    LemmaReport rep;
    if (id == "core-size") {
      rep = verify_core_size(g, v.core_degree);
    } else if (id == "avg-degree") {
      rep = verify_avg_degree(g, v.avg_k, v.s_max, opts);
    } else if (id == "vertex-expansion") {
      rep = verify_vertex_expansion(g, VertexSet::full(n), v.s_max, parse_ratio(v.factor), opts,
                                    v.strict ? Inequality::StrictlyMore : Inequality::AtLeast);
    } else if (id == "bipartite-expansion") {
      const std::size_t split = v.split ? v.split : n / 2;
      VertexSet u(n), w(n);
      for (Vertex x = 0; x < n; ++x) (x < split ? u : w).insert(x);
      rep = verify_bipartite_expansion(g, u, w, v.s_max, parse_ratio(v.factor), opts);
    } else if (id == "connectivity") {
      rep = verify_connectivity(g, VertexSet::full(n));
    } else if (id == "resilient-diameter") {
      const std::size_t bound = v.bound ? v.bound : resilient_diameter_bound(n);
      rep = verify_resilient_diameter(g, VertexSet::full(n), VertexSet(n, v.removed), v.d_exp, bound);
    } else {
      Cycle cycle;
      if (!v.cycle.empty()) {
        std::ifstream cin_(v.cycle);
        if (!cin_) throw std::runtime_error("cannot open " + v.cycle);
        cycle = read_cycle(cin_);
      } else if (!v.record.empty()) {
        cycle = run_record_from_json(read_json_file(v.record)).outcome.cycle;
      } else {
        throw std::invalid_argument("certificate needs --cycle or --record");
      }
      rep = certificate_report(g, cycle);
    }
    ok = ok && rep.passed;
    json j = to_json(rep);
    reports[id] = std::move(j);
  }
  emit(v.out, reports.dump(2) + "\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Achlioptas process Hamiltonicity experiments"};
  app.require_subcommand(1);

  CommonFlags run_common;
  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "one seeded run; exit 0 iff a Hamilton cycle was built");
  add_common(run_cmd, run_common, false);
  run_cmd->add_option("--out", run_flags.out, "RunRecord JSON path (default stdout)");
  run_cmd->add_option("--ledger", run_flags.ledger, "write the per-round ledger as JSON lines");
  run_cmd->add_flag("--embed-ledger", run_flags.embed_ledger, "include the ledger in the record");
  run_cmd->add_option("--ledger-in", run_flags.ledger_in, "ledger to analyze (collect-all-analyze)");
  run_cmd->add_option("--graph-out", run_flags.graph_out, "write the final graph as an edge list");
  run_cmd->add_option("--cycle-out", run_flags.cycle_out, "write the certificate cycle");

  CommonFlags sweep_common;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "seed battery over a K list; long-format CSV");
  add_common(sweep_cmd, sweep_common, true);
  sweep_cmd->add_option("--out", sweep_out, "CSV path (default stdout)");

  VerifyFlags vf;
  auto* verify_cmd = app.add_subcommand("verify", "structural checks on a stored graph");
  verify_cmd->add_option("--graph", vf.graph, "edge list file")->required();
  verify_cmd->add_option("--lemma", vf.lemmas, "lemma id (repeatable)")->required();
  verify_cmd->add_option("--cycle", vf.cycle, "cycle certificate file");
  verify_cmd->add_option("--record", vf.record, "RunRecord JSON holding the cycle");
  verify_cmd->add_option("--D,--core-degree", vf.core_degree, "core degree for core-size");
  verify_cmd->add_option("--avg-k", vf.avg_k, "k for avg-degree");
  verify_cmd->add_option("--s-max", vf.s_max, "largest set size checked");
  verify_cmd->add_option("--factor", vf.factor, "expansion factor p or p/q");
  verify_cmd->add_flag("--strict", vf.strict, "vertex expansion demands strictly more neighbors");
  verify_cmd->add_option("--mode", vf.mode, "exhaustive or sampled");
  verify_cmd->add_option("--samples", vf.samples, "sets drawn in sampled mode");
  verify_cmd->add_option("--seed", vf.seed, "sampler seed");
  verify_cmd->add_option("--split", vf.split, "bipartite sides [0,split) and [split,n)");
  verify_cmd->add_option("--D-exp", vf.d_exp, "core degree for resilient-diameter");
  verify_cmd->add_option("--bound", vf.bound, "diameter bound (default floor(3 ln n))");
  verify_cmd->add_option("--remove", vf.removed, "removed set A for resilient-diameter")->delimiter(',');
  verify_cmd->add_option("--out", vf.out, "report JSON path (default stdout)");

  std::size_t oracle_n = 0;
  std::size_t oracle_k = 1;
  std::uint64_t oracle_seed = 0;
  std::uint64_t oracle_rounds = 0;
  std::string oracle_ledger, oracle_out, oracle_model = "relaxed";
  CollectAllOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "collect-all hitting times over a ledger");
  oracle_cmd->add_option("--n", oracle_n, "number of vertices")->required();
  oracle_cmd->add_option("--ledger", oracle_ledger, "ledger JSON lines; default is a fresh first-edge run");
  oracle_cmd->add_option("--k", oracle_k, "K of the fresh run");
  oracle_cmd->add_option("--seed", oracle_seed, "seed of the fresh run and the searches");
  oracle_cmd->add_option("--model", oracle_model, "exact or relaxed");
  oracle_cmd->add_option("--max-rounds", oracle_rounds, "length of the fresh run");
  oracle_cmd->add_option("--check-every", oracle_opts.check_every, "rounds between probes");
  oracle_cmd->add_option("--restarts", oracle_opts.restarts, "search restarts per probe");
  oracle_cmd->add_option("--out", oracle_out, "report JSON path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(run_common, run_flags);
    if (*sweep_cmd) return cmd_sweep(sweep_common, sweep_out);
    if (*verify_cmd) return cmd_verify(vf);
    if (*oracle_cmd) {
      oracle_opts.seed = oracle_seed;
      std::vector<LedgerEntry> ledger;
      if (!oracle_ledger.empty()) {
        ledger = read_ledger_file(oracle_ledger);
      } else {
        if (oracle_n < 4) throw std::invalid_argument("--n must be at least 4");
        ledger = record_first_edge(oracle_n, oracle_k, parse_sampling_model(oracle_model), oracle_seed,
                                   oracle_rounds ? oracle_rounds : default_max_rounds(oracle_n));
      }
      return oracle_report(oracle_n, ledger, oracle_opts, oracle_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
