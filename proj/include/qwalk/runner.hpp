#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "qwalk/io.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/sequence.hpp"
#include "qwalk/spin.hpp"
#include "qwalk/sweep.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

struct WalkConfig {
  SequenceSpec sequence;
  std::size_t steps = 100;
  InitialState init;
  std::vector<std::size_t> snapshots;
  std::optional<FitWindow> window;  // default_window(steps)
  bool fit = true;
  std::size_t sigma_every = 1;

  void validate() const;
};

struct EnsembleConfig {
  SequenceSpec sequence{.kind = SequenceKind::RandomBinary, .complementary_b = true};
  std::size_t realizations = 100;
  std::size_t steps = 4000;
  InitialState init;
  std::optional<FitWindow> window;
  std::size_t workers = 1;

  void validate() const;
};

struct SpincycleConfig {
  std::size_t grid = 8;
  std::vector<CoinFamily> families{CoinFamily::GeneralizedHadamard, CoinFamily::Rotation};
  std::size_t bound = 64;
  double tolerance = 1e-8;
  std::size_t n_max = 0;  // 0 means 2 * bound + 1
  double axis_min = 0.0;
  double axis_max = std::numbers::pi / 2;
  /// Off-grid (alpha, beta) samples appended to the report.
  std::vector<std::pair<double, double>> extra_points;

  void validate() const;
  std::size_t resolved_n_max() const { return n_max ? n_max : 2 * bound + 1; }
};

struct SpincycleRow {
  double alpha;
  double beta;
  CoinFamily family;
  std::optional<std::size_t> period;
};

std::vector<SpincycleRow> spincycle_grid(const SpincycleConfig& config);

void to_json(json& j, const WalkConfig& c);
void from_json(const json& j, WalkConfig& c);
void to_json(json& j, const EnsembleConfig& c);
void from_json(const json& j, EnsembleConfig& c);
void to_json(json& j, const SpincycleConfig& c);
void from_json(const json& j, SpincycleConfig& c);

/// Files written by a command, metadata last.
struct CommandOutput {
  std::vector<std::filesystem::path> files;
  json metadata;
};

/// Writes <prefix>_sigma.csv, <prefix>_dist_t<T>.csv per snapshot and
/// <prefix>_meta.json. Throws FitDomainError after writing if the requested
/// fit cannot be done.
CommandOutput run_walk(const WalkConfig& config, const std::filesystem::path& prefix);

/// <prefix>_sigma.csv (mean), <prefix>_sigma_stderr.csv, <prefix>_dist.csv
/// (mean at T), <prefix>_exponents.csv, <prefix>_meta.json.
CommandOutput run_ensemble(const EnsembleConfig& config, const std::filesystem::path& prefix);

/// <prefix>_surface.csv and <prefix>_meta.json, journaling finished cells
/// to <prefix>_surface.journal until the surface is complete.
CommandOutput run_sweep_command(const SweepConfig& config, const std::filesystem::path& prefix,
                                std::optional<std::size_t> cell_budget = std::nullopt);

/// <prefix>_spincycle.csv (`alpha,beta,family,period`) and <prefix>_meta.json.
CommandOutput run_spincycle(const SpincycleConfig& config, const std::filesystem::path& prefix);

}  // namespace qwalk
