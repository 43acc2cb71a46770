#pragma once

// Experiment orchestration: strategy construction from configuration, single
// runs, parallel sweeps and their CSV summaries.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "achlioptas/engine.hpp"
#include "achlioptas/strategies.hpp"

namespace achlioptas {

struct ExperimentConfig {
  /// sublog, superlog, d-out, intermediate, first-edge or skip.
  std::string strategy = "sublog";
  Preset preset = Preset::Desk;
  /// Parameter overrides by name, applied on top of the preset.
  nlohmann::json params = nlohmann::json::object();
  std::size_t n = 0;
  std::vector<std::size_t> k_list;
  SamplingModel model = SamplingModel::RelaxedPairs;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  /// 0 picks a generous cap from n.
  std::uint64_t max_rounds = 0;
  std::size_t jobs = 1;
  bool ledger = false;

  /// Throws std::invalid_argument: seeds nonempty, n >= 4, every K >= 1,
  /// known strategy id, and the relaxed model for d-out strategies.
  void validate() const;
};

/// Keys present in `j` replace the matching fields of `config`. Unknown keys
/// throw std::invalid_argument.
void apply_config_json(ExperimentConfig& config, const nlohmann::json& j);

const std::vector<std::string>& strategy_ids();

/// Throws std::invalid_argument for an unknown id or parameter name.
std::unique_ptr<Strategy> make_strategy(const std::string& id, Preset preset,
                                        const nlohmann::json& params, std::size_t n,
                                        std::size_t k);

std::uint64_t default_max_rounds(std::size_t n);

/// One seeded run of config.strategy at the given K.
RunRecord run_single(const ExperimentConfig& config, std::size_t k, std::uint64_t seed);

/// Hamiltonian, or Completed for constructions that expect no cycle.
bool is_success(const RunRecord& record);

struct SweepCell {
  std::string strategy;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0;
  /// Statistics over successful runs only; empty without successes
  /// (stddev needs two).
  std::optional<double> median_total;
  std::optional<double> mean_total;
  std::optional<double> stddev_total;
  std::vector<std::optional<double>> median_phase;
  std::vector<std::string> phase_names;
};

struct SweepResult {
  /// Parallel to tasks: K-major, then seeds in the given order.
  std::vector<RunRecord> runs;
  /// Error text of runs that threw; their records are empty.
  std::vector<std::optional<std::string>> errors;
  std::vector<SweepCell> cells;
};

/// Runs every (K, seed) pair on up to config.jobs threads. A run that throws
/// is recorded as an error and does not stop the sweep. Output does not
/// depend on the number of jobs.
SweepResult sweep(const ExperimentConfig& config);

/// `failed_runs` counts runs that threw; they count as unsuccessful.
SweepCell summarize(const std::string& strategy, std::size_t n, std::size_t k,
                    const std::vector<const RunRecord*>& runs, std::size_t failed_runs = 0);

/// Long format: per-run rows (kind=run) followed by per-cell rows (kind=aggregate).
void write_sweep_csv(std::ostream& out, const SweepResult& result);

double median(std::vector<double> values);

}  // namespace achlioptas
