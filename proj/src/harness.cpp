#include "achlioptas/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace achlioptas {

using nlohmann::json;

namespace {

// Reads known keys from `overrides` into fields; anything else is an error.
class Overrides {
 public:
  Overrides(const json& j, std::string owner) : j_(j), owner_(std::move(owner)) {
    if (!j_.is_object()) throw std::invalid_argument(owner_ + ": parameters must be a JSON object");
  }

  template <typename T>
  void read(const char* key, T& field) {
    seen_.push_back(key);
    if (!j_.contains(key)) return;
    try {
      field = j_.at(key).get<T>();
    } catch (const json::exception&) {
      throw std::invalid_argument(owner_ + ": parameter '" + key + "' has the wrong type");
    }
  }

  template <typename T>
  void read(const char* key, std::optional<T>& field) {
    seen_.push_back(key);
    if (!j_.contains(key)) return;
    if (j_.at(key).is_null()) {
      field.reset();
      return;
    }
    T v{};
    read(key, v);
    field = v;
  }

  void allow(const char* key) { seen_.push_back(key); }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
        throw std::invalid_argument(owner_ + ": unknown parameter '" + key + "'");
      }
    }
  }

 private:
  const json& j_;
  std::string owner_;
  std::vector<std::string> seen_;
};

void read_sublog(const json& j, SublogParams& p, const std::string& owner) {
  Overrides o(j, owner);
  o.read("epsilon", p.epsilon);
  o.read("D", p.core_degree);
  o.read("core_round_factor", p.core_round_factor);
  o.read("core_rounds", p.core_rounds);
  o.read("d", p.bipartite_degree);
  o.read("degree_stage_factor", p.degree_stage_factor);
  o.read("fill_stage_factor", p.fill_stage_factor);
  o.read("boost_rounds", p.boost_rounds);
  o.read("max_trials", p.max_trials);
  o.read("r_cap", p.r_cap);
  o.finish();
}

}  // namespace

const std::vector<std::string>& strategy_ids() {
  static const std::vector<std::string> ids{"sublog",       "superlog",   "d-out",
                                            "intermediate", "first-edge", "skip"};
  return ids;
}

void ExperimentConfig::validate() const {
  if (seeds.empty()) throw std::invalid_argument("config: the seed list is empty");
  if (n < 4) throw std::invalid_argument("config: n must be at least 4");
  if (k_list.empty()) throw std::invalid_argument("config: no K given");
  for (std::size_t k : k_list) {
    if (k < 1) throw std::invalid_argument("config: K must be at least 1");
  }
  if (std::find(strategy_ids().begin(), strategy_ids().end(), strategy) == strategy_ids().end()) {
    throw std::invalid_argument("config: unknown strategy '" + strategy + "'");
  }
  if ((strategy == "d-out" || strategy == "intermediate") && model != SamplingModel::RelaxedPairs) {
    throw std::invalid_argument("config: " + strategy + " needs the relaxed sampling model");
  }
  if (jobs < 1) throw std::invalid_argument("config: jobs must be at least 1");
}

void apply_config_json(ExperimentConfig& c, const json& j) {
  Overrides o(j, "config");
  o.read("strategy", c.strategy);
  if (j.contains("preset")) c.preset = parse_preset(j.at("preset").get<std::string>());
  o.allow("preset");
  if (j.contains("params")) c.params = j.at("params");
  o.allow("params");
  o.read("n", c.n);
  if (j.contains("K")) {
    const json& k = j.at("K");
    c.k_list = k.is_array() ? k.get<std::vector<std::size_t>>()
                            : std::vector<std::size_t>{k.get<std::size_t>()};
  }
  o.allow("K");
  if (j.contains("model")) c.model = parse_sampling_model(j.at("model").get<std::string>());
  o.allow("model");
  if (j.contains("seeds")) {
    const json& s = j.at("seeds");
    if (s.is_array()) {
      c.seeds = s.get<std::vector<std::uint64_t>>();
    } else {
      c.seeds.clear();
      for (std::uint64_t i = 0; i < s.get<std::uint64_t>(); ++i) c.seeds.push_back(i);
    }
  }
  o.allow("seeds");
  o.read("max_rounds", c.max_rounds);
  o.read("jobs", c.jobs);
  o.read("ledger", c.ledger);
  o.finish();
}

std::unique_ptr<Strategy> make_strategy(const std::string& id, Preset preset, const json& params,
                                        std::size_t n, std::size_t k) {
  const double kd = static_cast<double>(k);
  if (id == "sublog") {
    SublogParams p = SublogParams::preset(preset);
    read_sublog(params, p, "sublog");
    p.validate(preset == Preset::Fidelity);
    return std::make_unique<SublogStrategy>(p, n, kd);
  }
  if (id == "superlog") {
    SuperlogParams p = SuperlogParams::preset(preset);
    Overrides o(params, "superlog");
    o.read("h", p.h);
    o.read("m", p.m);
    o.read("L", p.paths);
    o.read("D_exp", p.expander_degree);
    o.read("expander_round_factor", p.expander_round_factor);
    o.read("resilient_degree", p.resilient_degree);
    o.read("inner_k", p.inner_k);
    o.read("closing_rounds", p.closing_rounds);
    o.allow("inner");
    o.finish();
    if (params.contains("inner")) read_sublog(params.at("inner"), p.inner, "superlog.inner");
    return std::make_unique<SuperlogStrategy>(p, n, k);
  }
  if (id == "d-out" || id == "intermediate") {
    DOutParams p;
    Overrides o(params, id);
    o.read("d", p.d);
    o.read("epsilon", p.epsilon);
    o.read("certify_restarts", p.certify_restarts);
    o.finish();
    if (id == "intermediate") return std::make_unique<IntermediateStrategy>(p, n, kd);
    return std::make_unique<DOutStrategy>(p, n, kd);
  }
  if (id == "first-edge") {
    std::uint64_t every = std::max<std::uint64_t>(1, n / 50);
    std::size_t restarts = 10;
    Overrides o(params, id);
    o.read("certify_every", every);
    o.read("restarts", restarts);
    o.finish();
    return std::make_unique<FirstEdgeBaseline>(every, restarts);
  }
  if (id == "skip") {
    Overrides(params, id).finish();
    return std::make_unique<SkipStrategy>();
  }
  throw std::invalid_argument("unknown strategy '" + id + "'");
}

std::uint64_t default_max_rounds(std::size_t n) {
  const double nd = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(10 * nd * (1 + std::log(nd))));
}

RunRecord run_single(const ExperimentConfig& config, std::size_t k, std::uint64_t seed) {
  EngineConfig ec;
  ec.n = config.n;
  ec.k = k;
  ec.model = config.model;
  ec.seed = seed;
  ec.record_ledger = config.ledger;
  auto strategy = make_strategy(config.strategy, config.preset, config.params, config.n, k);
  const std::uint64_t cap = config.max_rounds != 0 ? config.max_rounds : default_max_rounds(config.n);
  return run(ec, *strategy, nullptr, cap);
}

bool is_success(const RunRecord& r) {
  return r.outcome.kind == OutcomeKind::Hamiltonian || r.outcome.kind == OutcomeKind::Completed;
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of an empty list");
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

SweepCell summarize(const std::string& strategy, std::size_t n, std::size_t k,
                    const std::vector<const RunRecord*>& runs, std::size_t failed_runs) {
  SweepCell c;
  c.strategy = strategy;
  c.n = n;
  c.k = k;
  c.runs = runs.size() + failed_runs;
  std::vector<double> totals;
  std::vector<std::vector<double>> phases;
  for (const RunRecord* r : runs) {
    if (c.phase_names.empty()) {
      for (const auto& p : r->phases) c.phase_names.push_back(p.name);
      phases.resize(c.phase_names.size());
    }
    if (!is_success(*r)) continue;
    ++c.successes;
    totals.push_back(static_cast<double>(r->total_rounds));
    for (std::size_t i = 0; i < r->phases.size() && i < phases.size(); ++i) {
      phases[i].push_back(static_cast<double>(r->phases[i].rounds));
    }
  }
  c.success_rate = c.runs ? static_cast<double>(c.successes) / static_cast<double>(c.runs) : 0;
  c.median_phase.assign(phases.size(), std::nullopt);
  if (!totals.empty()) {
    c.median_total = median(totals);
    double sum = 0;
    for (double t : totals) sum += t;
    c.mean_total = sum / static_cast<double>(totals.size());
    if (totals.size() >= 2) {
      double sq = 0;
      for (double t : totals) sq += (t - *c.mean_total) * (t - *c.mean_total);
      c.stddev_total = std::sqrt(sq / static_cast<double>(totals.size() - 1));
    }
    for (std::size_t i = 0; i < phases.size(); ++i) c.median_phase[i] = median(phases[i]);
  }
  return c;
}

SweepResult sweep(const ExperimentConfig& config) {
  config.validate();
  struct Task {
    std::size_t k;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t k : config.k_list)
    for (std::uint64_t s : config.seeds) tasks.push_back({k, s});

  SweepResult result;
  result.runs.resize(tasks.size());
  result.errors.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        result.runs[i] = run_single(config, tasks[i].k, tasks[i].seed);
      } catch (const std::exception& e) {
        result.errors[i] = e.what();
      }
    }
  };
  const std::size_t jobs = std::min(config.jobs, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t k : config.k_list) {
    std::vector<const RunRecord*> cell;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].k != k) continue;
      if (result.errors[i]) {
        ++failed;
      } else {
        cell.push_back(&result.runs[i]);
      }
    }
    result.cells.push_back(summarize(config.strategy, config.n, k, cell, failed));
  }
  return result;
}

namespace {

std::string num(std::optional<double> v) {
  if (!v) return "";
  std::ostringstream s;
  s << std::setprecision(10) << *v;
  return s.str();
}

constexpr std::size_t kPhaseColumns = 5;

double theory_scale(std::size_t n, std::size_t k) {
  const double nd = static_cast<double>(n);
  return nd * std::log(nd) / (2.0 * static_cast<double>(k));
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "kind,strategy,n,K,seed";
  for (std::size_t i = 1; i <= kPhaseColumns; ++i) out << ",phase_" << i;
  out << ",total,outcome,runs,successes,success_rate,mean_total,stddev_total,"
         "rounds_over_n,rounds_over_theory\n";
  for (std::size_t i = 0; i < result.runs.size(); ++i) {
    const RunRecord& r = result.runs[i];
    if (result.errors[i]) {
      out << "run,,,,,,,,,,,error,,,,,,,\n";
      continue;
    }
    out << "run," << r.strategy << ',' << r.n << ',' << r.k << ',' << r.seed;
    for (std::size_t p = 0; p < kPhaseColumns; ++p) {
      out << ',';
      if (p < r.phases.size()) out << r.phases[p].rounds;
    }
    const double total = static_cast<double>(r.total_rounds);
    out << ',' << r.total_rounds << ',' << to_string(r.outcome.kind);
    if (r.outcome.kind == OutcomeKind::PhaseFailed) out << ':' << r.outcome.phase;
    out << ",,,,,," << num(total / static_cast<double>(r.n)) << ','
        << num(total / theory_scale(r.n, r.k)) << '\n';
  }
  for (const SweepCell& c : result.cells) {
    out << "aggregate," << c.strategy << ',' << c.n << ',' << c.k << ',';
    for (std::size_t p = 0; p < kPhaseColumns; ++p) {
      out << ',';
      if (p < c.median_phase.size()) out << num(c.median_phase[p]);
    }
    out << ',' << num(c.median_total) << ",," << c.runs << ',' << c.successes << ','
        << num(c.success_rate) << ',' << num(c.mean_total) << ',' << num(c.stddev_total) << ',';
    if (c.median_total) {
      out << num(*c.median_total / static_cast<double>(c.n)) << ','
          << num(*c.median_total / theory_scale(c.n, c.k));
    } else {
      out << ',';
    }
    out << '\n';
  }
}

}  // namespace achlioptas
