#include <cmath>
#include <limits>

#include "qwalk/errors.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

std::vector<std::uint64_t> derive_seeds(std::uint64_t master, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = rng::derive_seed(master, i);
  return seeds;
}

EnsembleResult ensemble_average(const SequenceSpec& tmpl, const std::vector<std::uint64_t>& seeds, std::size_t steps,
                                const EnsembleOptions& options) {
  if (seeds.empty()) throw ValidationError("ensemble needs at least one realization");
  tmpl.validate();
  const FitWindow window = options.window.value_or(default_window(steps));
  const std::size_t r = seeds.size();

  std::vector<SigmaSeries> runs(r);
  std::vector<Distribution> finals(r);
  std::vector<FitOutcome> fits(r);
  parallel_for(r, options.workers, [&](std::size_t i) {
    SequenceSpec spec = tmpl;
    spec.seed = seeds[i];
    RecordOptions rec;
    rec.snapshots = {steps};
    auto res = evolve(spec, steps, options.init, rec);
    fits[i] = try_fit(res.sigma, window, options.fit);
    runs[i] = std::move(res.sigma);
    finals[i] = std::move(res.snapshots.front());
  });

  EnsembleResult out;
  out.seeds = seeds;
  const std::size_t n = runs.front().size();
  out.mean.t = runs.front().t;
  out.mean.sigma.assign(n, 0.0);
  out.stderr_.assign(n, 0.0);
  // Fixed index order keeps the aggregate independent of scheduling.
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < r; ++i) s += runs[i].sigma[j];
    const double mean = s / static_cast<double>(r);
    double ss = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      const double d = runs[i].sigma[j] - mean;
      ss += d * d;
    }
    out.mean.sigma[j] = r == 1 ? runs.front().sigma[j] : mean;
    out.stderr_[j] = r > 1 ? std::sqrt(ss / static_cast<double>(r - 1) / static_cast<double>(r)) : 0.0;
  }

  out.mean_distribution.t = steps;
  out.mean_distribution.p.assign(finals.front().p.size(), 0.0);
  for (std::size_t k = 0; k < out.mean_distribution.p.size(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r; ++i) s += finals[i].p[k];
    out.mean_distribution.p[k] = r == 1 ? finals.front().p[k] : s / static_cast<double>(r);
  }

  out.fit_of_mean = try_fit(out.mean, window, options.fit);
  out.per_realization = std::move(fits);
  double sum = 0.0;
  std::size_t ok = 0;
  for (const auto& f : out.per_realization) {
    if (f.status == FitStatus::Ok) {
      sum += f.result.exponent;
      ++ok;
    }
  }
  out.mean_of_exponents = ok ? sum / static_cast<double>(ok) : std::numeric_limits<double>::quiet_NaN();
  return out;
}

EnsembleResult ensemble_average(const SequenceSpec& tmpl, std::size_t realizations, std::size_t steps,
                                const EnsembleOptions& options) {
  if (realizations < 1) throw ValidationError("realizations must be >= 1");
  return ensemble_average(tmpl, derive_seeds(tmpl.seed, realizations), steps, options);
}

}  // namespace qwalk
