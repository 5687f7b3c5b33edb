#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/observables.hpp"
#include "qwalk/sequence.hpp"

namespace qwalk {

/// Grid of (alpha, beta) over [axis_min, axis_max]^2, endpoints included.
struct SweepConfig {
  SequenceSpec sequence{.kind = SequenceKind::Fibonacci};
  std::size_t grid = 32;
  std::size_t steps = 4000;
  FitWindow window{1000.0, 4000.0};
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  double axis_min = 0.0;
  double axis_max = std::numbers::pi / 2;

  void validate() const;
  double axis(std::size_t i) const;
};

struct SurfaceCell {
  double c = 0.0;
  std::string flag;  // ok | confined | failed
  std::string reason;
  bool done = false;
};

/// c[i][j] at (alphas[i], betas[j]), stored row-major in `cells`.
struct SlopeSurface {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<SurfaceCell> cells;

  const SurfaceCell& at(std::size_t i, std::size_t j) const { return cells[i * betas.size() + j]; }
  std::size_t completed() const;
  bool complete() const { return completed() == cells.size(); }
};

struct SweepRunOptions {
  /// Append-only record of finished cells; existing entries are reused.
  std::optional<std::filesystem::path> journal;
  /// Stop after this many newly computed cells.
  std::optional<std::size_t> cell_budget;
};

/// One evolve + fit at grid point (i, j). Random kinds use
/// rng::derive_seed(config.seed, i * grid + j).
SurfaceCell sweep_cell(const SweepConfig& config, std::size_t i, std::size_t j);

SlopeSurface run_sweep(const SweepConfig& config, const SweepRunOptions& options = {});

}  // namespace qwalk
