#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {

double Distribution::total() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

Distribution distribution(const WalkState& state) {
  const auto t = static_cast<std::int64_t>(state.time());
  Distribution d;
  d.t = state.time();
  d.p.assign(static_cast<std::size_t>(2 * t + 1), 0.0);
  for (std::int64_t k = -t; k <= t; k += 2) d.p[static_cast<std::size_t>(k + t)] = state.probability(k);
  return d;
}

namespace {

// Two-pass variance over sites k = k0, k0 + stride, ..., weights w(k).
template <typename Weight>
double spread(std::int64_t k0, std::int64_t k1, std::int64_t stride, Weight&& w) {
  double total = 0.0;
  double first = 0.0;
  for (std::int64_t k = k0; k <= k1; k += stride) {
    const double p = w(k);
    total += p;
    first += static_cast<double>(k) * p;
  }
  if (total <= 0.0) return 0.0;
  const double mean = first / total;
  double second = 0.0;
  for (std::int64_t k = k0; k <= k1; k += stride) {
    const double dx = static_cast<double>(k) - mean;
    second += dx * dx * w(k);
  }
  return std::sqrt(std::max(0.0, second / total));
}

}  // namespace

double sigma(const Distribution& dist) {
  const auto t = static_cast<std::int64_t>(dist.t);
  return spread(-t, t, 1, [&](std::int64_t k) { return dist.p[static_cast<std::size_t>(k + t)]; });
}

double sigma_from_amplitudes(const WalkState& state) {
  const auto t = static_cast<std::int64_t>(state.time());
  const auto up = state.up_amplitudes();
  const auto down = state.down_amplitudes();
  const auto offset = static_cast<std::int64_t>(state.max_steps());
  return spread(-t, t, 2, [&](std::int64_t k) {
    const auto i = static_cast<std::size_t>(k + offset);
    const double ur = up[i].real(), ui = up[i].imag(), dr = down[i].real(), di = down[i].imag();
    return ur * ur + ui * ui + dr * dr + di * di;
  });
}

FitWindow default_window(std::size_t steps) {
  return {static_cast<double>(steps) / 4.0, static_cast<double>(steps)};
}

FitResult fit_exponent(const SigmaSeries& series, FitWindow window, const FitOptions& options) {
  if (!(window.t_min > 0.0) || !(window.t_max > window.t_min)) {
    throw FitDomainError("fit window must satisfy 0 < t_min < t_max");
  }
  std::vector<std::size_t> in_window;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto t = static_cast<double>(series.t[i]);
    if (t >= window.t_min && t <= window.t_max) in_window.push_back(i);
  }
  if (in_window.size() < options.min_points) {
    throw FitDomainError("fit window [" + std::to_string(window.t_min) + ", " + std::to_string(window.t_max) +
                         "] holds " + std::to_string(in_window.size()) + " samples, need " +
                         std::to_string(options.min_points));
  }

  FitResult r;
  r.t_min = static_cast<double>(series.t[in_window.front()]);
  r.t_max = static_cast<double>(series.t[in_window.back()]);

  double peak = 0.0;
  for (auto i : in_window) peak = std::max(peak, series.sigma[i]);
  if (peak < options.confined_threshold) {
    r.confined = true;
    r.points = in_window.size();
    return r;
  }
  for (auto i : in_window) {
    if (!(series.sigma[i] > 0.0)) {
      throw FitDomainError("sigma(" + std::to_string(series.t[i]) + ") = 0 inside the fit window");
    }
  }

  std::vector<std::size_t> chosen;
  if (in_window.size() <= options.max_points) {
    chosen = in_window;
  } else {
    const double log_lo = std::log(r.t_min);
    const double log_hi = std::log(r.t_max);
    const std::size_t m = options.max_points;
    for (std::size_t j = 0; j < m; ++j) {
      const double target = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(j) / static_cast<double>(m - 1));
      auto it = std::lower_bound(in_window.begin(), in_window.end(), target,
                                 [&](std::size_t idx, double v) { return static_cast<double>(series.t[idx]) < v; });
      if (it == in_window.end()) {
        --it;
      } else if (it != in_window.begin() &&
                 target - static_cast<double>(series.t[*(it - 1)]) < static_cast<double>(series.t[*it]) - target) {
        --it;
      }
      if (chosen.empty() || chosen.back() != *it) chosen.push_back(*it);
    }
  }
  if (chosen.size() < options.min_points) {
    throw FitDomainError("only " + std::to_string(chosen.size()) + " distinct samples after log-decimation");
  }

  const auto n = static_cast<double>(chosen.size());
  double sx = 0.0, sy = 0.0;
  for (auto i : chosen) {
    sx += std::log(static_cast<double>(series.t[i]));
    sy += std::log(series.sigma[i]);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (auto i : chosen) {
    const double dx = std::log(static_cast<double>(series.t[i])) - mx;
    const double dy = std::log(series.sigma[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0)) throw FitDomainError("fit window spans a single time");
  r.exponent = sxy / sxx;
  const double intercept = my - r.exponent * mx;
  r.prefactor = std::exp(intercept);
  double ss = 0.0;
  for (auto i : chosen) {
    const double e = std::log(series.sigma[i]) - (intercept + r.exponent * std::log(static_cast<double>(series.t[i])));
    ss += e * e;
  }
  r.residual = std::sqrt(ss / n);
  r.points = chosen.size();
  return r;
}

std::string FitOutcome::flag() const {
  switch (status) {
    case FitStatus::Ok:
      return "ok";
    case FitStatus::Confined:
      return "confined";
    case FitStatus::Failed:
      return "failed";
  }
  return "failed";
}

double FitOutcome::exponent() const {
  return status == FitStatus::Failed ? std::numeric_limits<double>::quiet_NaN() : result.exponent;
}

FitOutcome try_fit(const SigmaSeries& series, FitWindow window, const FitOptions& options) {
  FitOutcome out;
  try {
    out.result = fit_exponent(series, window, options);
    out.status = out.result.confined ? FitStatus::Confined : FitStatus::Ok;
  } catch (const FitDomainError& e) {
    out.status = FitStatus::Failed;
    out.reason = e.what();
  }
  return out;
}

}  // namespace qwalk
