#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

/// P(k) = |a_up(k)|^2 + |a_down(k)|^2 for k in [-t, t].
struct Distribution {
  std::size_t t = 0;
  std::vector<double> p;  // p[i] is site k = i - t

  std::int64_t k_min() const { return -static_cast<std::int64_t>(t); }
  double at(std::int64_t k) const {
    const auto i = k + static_cast<std::int64_t>(t);
    return i < 0 || i >= static_cast<std::int64_t>(p.size()) ? 0.0 : p[static_cast<std::size_t>(i)];
  }
  double total() const;
};

Distribution distribution(const WalkState& state);

/// sqrt(<x^2> - <x>^2) from the moments of P(k).
double sigma(const Distribution& dist);

/// Same quantity evaluated from the amplitudes without forming P(k).
double sigma_from_amplitudes(const WalkState& state);

struct SigmaSeries {
  std::vector<std::size_t> t;
  std::vector<double> sigma;

  std::size_t size() const { return t.size(); }
  void push_back(std::size_t time, double value) {
    t.push_back(time);
    sigma.push_back(value);
  }
};

struct FitWindow {
  double t_min = 0.0;
  double t_max = 0.0;
};

/// [T/4, T], skipping the early transient.
FitWindow default_window(std::size_t steps);

struct FitOptions {
  std::size_t max_points = 200;
  std::size_t min_points = 10;
  /// Window maximum of sigma below this marks the walk as confined.
  double confined_threshold = 2.0;
};

/// sigma ~ prefactor * t^exponent over the window.
struct FitResult {
  double exponent = 0.0;
  double prefactor = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  double residual = 0.0;  // RMS in (log t, log sigma)
  std::size_t points = 0;
  bool confined = false;
};

/// Least-squares line through (log t, log sigma) on at most max_points
/// log-uniformly spaced samples of the window. Confined walks come back as
/// exponent 0 with `confined` set. Throws FitDomainError if the window holds
/// fewer than min_points samples or a zero sigma in an unconfined walk.
FitResult fit_exponent(const SigmaSeries& series, FitWindow window, const FitOptions& options = {});

enum class FitStatus { Ok, Confined, Failed };

struct FitOutcome {
  FitStatus status = FitStatus::Failed;
  FitResult result;
  std::string reason;

  /// "ok", "confined" or "failed".
  std::string flag() const;
  /// NaN for failed fits.
  double exponent() const;
};

/// fit_exponent with domain errors captured instead of thrown.
FitOutcome try_fit(const SigmaSeries& series, FitWindow window, const FitOptions& options = {});

struct EnsembleOptions {
  InitialState init;
  std::optional<FitWindow> window;  // default_window(steps) when empty
  FitOptions fit;
  std::size_t workers = 1;
};

struct EnsembleResult {
  std::vector<std::uint64_t> seeds;
  SigmaSeries mean;             // pointwise mean sigma(t), t = 0..T
  std::vector<double> stderr_;  // standard error of the mean at each t
  Distribution mean_distribution;
  FitOutcome fit_of_mean;
  std::vector<FitOutcome> per_realization;
  /// Mean of the successful per-realization exponents (NaN if none).
  double mean_of_exponents = 0.0;
};

/// Runs one evolution per seed from `tmpl` (seed field replaced) and
/// aggregates in seed-index order, so the result does not depend on the
/// number of workers.
EnsembleResult ensemble_average(const SequenceSpec& tmpl, const std::vector<std::uint64_t>& seeds, std::size_t steps,
                                const EnsembleOptions& options = {});

/// Seeds derived as rng::derive_seed(tmpl.seed, i) for i < realizations.
EnsembleResult ensemble_average(const SequenceSpec& tmpl, std::size_t realizations, std::size_t steps,
                                const EnsembleOptions& options = {});

std::vector<std::uint64_t> derive_seeds(std::uint64_t master, std::size_t count);

}  // namespace qwalk
