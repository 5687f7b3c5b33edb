// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dense_oracle.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/spin.hpp"
#include "qwalk/sweep.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), elapsed(start), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

const SequenceKind kAllKinds[] = {SequenceKind::Constant,   SequenceKind::PeriodicApproximant,
                                  SequenceKind::Fibonacci,  SequenceKind::SilverMean,
                                  SequenceKind::RandomBinary, SequenceKind::RandomContinuous};

SequenceSpec at_pi3_pi6(SequenceKind kind) {
  return {.kind = kind, .approximant_order = 3, .alpha_a = pi / 3, .alpha_b = pi / 6, .width = pi / 8, .seed = 2024};
}

double approximant_exponent(int order) {
  auto spec = at_pi3_pi6(SequenceKind::PeriodicApproximant);
  spec.approximant_order = order;
  const auto r = evolve(spec, 8000);
  return fit_exponent(r.sigma, default_window(8000)).exponent;
}

// Frozen measurement of the Fibonacci (pi/3, pi/6), T = 10^4 exponent on the default window.
constexpr double kFibonacciBaseline = 0.860860009;

}  // namespace

int main() {
  criterion("unitarity and structure, all kinds, T=1e4", [] {
    constexpr std::size_t steps = 10000;
    double worst_norm = 0.0, slowest = 0.0;
    for (auto kind : kAllKinds) {
      const auto spec = at_pi3_pi6(kind);
      const auto start = Clock::now();
      const auto r = evolve(spec, steps);
      slowest = std::max(slowest, elapsed(start));
      for (double n : r.norm) worst_norm = std::max(worst_norm, std::abs(n - 1.0));

      // Light cone and parity after every step.
      const LetterStream stream(spec);
      auto s = init_state(steps);
      for (std::uint64_t i = 0; i < steps; ++i) {
        step(s, Coin(spec.family, stream.angle(i)));
        const auto t = static_cast<std::int64_t>(s.time());
        const std::int64_t reach = (i + 1) % 1000 == 0 ? static_cast<std::int64_t>(steps) : t + 1;
        for (std::int64_t k = -reach; k <= reach; ++k) {
          const bool allowed = std::llabs(k) <= t && (k + t) % 2 == 0;
          if (!allowed && (s.up(k) != Complex{} || s.down(k) != Complex{})) {
            return Outcome{false, std::string(to_string(kind)) + ": amplitude outside the cone at t=" +
                                      std::to_string(t) + ", k=" + std::to_string(k)};
          }
        }
      }
    }
    return Outcome{worst_norm <= 1e-10 && slowest < 5.0,
                   fmt("max |norm-1| = %.2e", worst_norm) + fmt(", slowest run %.2fs (< 5s)", slowest)};
  });

  criterion("degenerate coins: sigma_z ballistic, sigma_x confined", [] {
    const auto z = evolve(SequenceSpec{.alpha_a = 0.0}, 10000);
    double dev = 0.0;
    for (std::size_t i = 0; i < z.sigma.size(); ++i) {
      dev = std::max(dev, std::abs(z.sigma.sigma[i] - static_cast<double>(z.sigma.t[i])));
    }
    const auto x = evolve(SequenceSpec{.alpha_a = pi / 2}, 10000);
    const double peak = *std::max_element(x.sigma.sigma.begin(), x.sigma.sigma.end());
    return Outcome{dev <= 1e-9 && peak <= 1.0, fmt("max |sigma-t| = %.2e", dev) + fmt(", sigma_x max sigma = %.3f", peak)};
  });

  criterion("ballistic Hadamard baseline, T=4000, window [1000,4000]", [] {
    const auto r = evolve(SequenceSpec{.alpha_a = pi / 4}, 4000);
    const double c = fit_exponent(r.sigma, {1000, 4000}).exponent;
    return Outcome{c >= 0.97 && c <= 1.01, fmt("c = %.6f in [0.97, 1.01]", c)};
  });

  std::vector<double> approximant_c(4);
  criterion("periodic approximants of length 2,3,5,8, T=8000", [&] {
    bool ok = true;
    std::string detail;
    for (int order = 1; order <= 4; ++order) {
      approximant_c[order - 1] = approximant_exponent(order);
      ok = ok && approximant_c[order - 1] >= 0.93 && approximant_c[order - 1] <= 1.05;
      detail += "period " + std::to_string(fibonacci_word(order).size()) + fmt(": c = %.4f; ", approximant_c[order - 1]);
    }
    return Outcome{ok, detail + "each in [0.93, 1.05]"};
  });

  criterion("Fibonacci sequence is sub-ballistic, T=1e4", [&] {
    const auto r = evolve(at_pi3_pi6(SequenceKind::Fibonacci), 10000);
    const double c = fit_exponent(r.sigma, default_window(10000)).exponent;
    const double min_approx = *std::min_element(approximant_c.begin(), approximant_c.end());
    const bool ok = c <= 0.92 && c <= min_approx - 0.05 && std::abs(c - kFibonacciBaseline) < 1e-6;
    return Outcome{ok, fmt("c = %.6f (<= 0.92", c) + fmt(", approximants >= %.4f", min_approx) +
                           fmt(", baseline %.6f)", kFibonacciBaseline)};
  });

  criterion("random sequences are diffusive, R=100, T=4000", [] {
    const auto start = Clock::now();
    EnsembleOptions opt;
    opt.workers = workers();
    const SequenceSpec binary{.kind = SequenceKind::RandomBinary, .alpha_a = pi / 3, .seed = 1, .complementary_b = true};
    const SequenceSpec continuous{.kind = SequenceKind::RandomContinuous, .width = pi / 8, .seed = 2};
    const auto b = ensemble_average(binary, 100, 4000, opt);
    const auto c = ensemble_average(continuous, 100, 4000, opt);
    const double cb = b.fit_of_mean.exponent(), cc = c.fit_of_mean.exponent();
    const double secs = elapsed(start);
    const bool ok = cb >= 0.40 && cb <= 0.60 && cc >= 0.40 && cc <= 0.60 && secs < 600.0;
    return Outcome{ok, fmt("binary c = %.4f", cb) + fmt(", continuous c = %.4f", cc) +
                           fmt(" in [0.40, 0.60]; %.1fs (< 600s)", secs)};
  });

  criterion("slope surface, 16x16 Fibonacci sweep, T=2000", [] {
    SweepConfig cfg;
    cfg.grid = 16;
    cfg.steps = 2000;
    cfg.window = default_window(2000);
    cfg.workers = workers();
    const auto s = run_sweep(cfg);
    const std::size_t n = cfg.grid;
    double diag_min = 2.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      diag_min = std::min(diag_min, s.at(i, i).flag == "ok" ? s.at(i, i).c : -1.0);
    }
    bool flags_ok = s.at(n - 1, n - 1).flag == "confined";
    std::vector<double> off;
    std::size_t flagged = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& cell = s.at(i, j);
        const bool boundary = i == 0 || j == 0 || i == n - 1 || j == n - 1;
        if (cell.flag != "ok") {
          ++flagged;
          flags_ok = flags_ok && boundary;
        } else {
          flags_ok = flags_ok && cell.c >= -0.05 && cell.c <= 1.05;
          if (i != j) off.push_back(cell.c);
        }
      }
    }
    std::nth_element(off.begin(), off.begin() + static_cast<std::ptrdiff_t>(off.size() / 2), off.end());
    double median = off[off.size() / 2];
    if (off.size() % 2 == 0) {
      median = 0.5 * (median + *std::max_element(off.begin(), off.begin() + static_cast<std::ptrdiff_t>(off.size() / 2)));
    }
    const bool ok = diag_min >= 0.95 && flags_ok && median < 0.9;
    return Outcome{ok, fmt("interior diagonal min c = %.4f (>= 0.95)", diag_min) +
                           fmt(", flagged cells %.0f all on the boundary with (pi/2, pi/2) confined", double(flagged)) +
                           fmt(", off-diagonal median c = %.4f (< 0.9)", median)};
  });

  criterion("exponent-fit oracle on synthetic power laws", [] {
    double exact_err = 0.0, noisy_err = 0.0;
    for (double c : {0.25, 0.5, 0.7, 1.0}) {
      SigmaSeries clean, noisy;
      std::mt19937_64 gen(static_cast<std::uint64_t>(c * 1000));
      std::normal_distribution<double> eps(0.0, 0.01);
      for (std::size_t t = 1; t <= 4000; ++t) {
        const double v = 1.7 * std::pow(static_cast<double>(t), c);
        clean.push_back(t, v);
        noisy.push_back(t, v * (1.0 + eps(gen)));
      }
      exact_err = std::max(exact_err, std::abs(fit_exponent(clean, {1000, 4000}).exponent - c));
      noisy_err = std::max(noisy_err, std::abs(fit_exponent(noisy, {1000, 4000}).exponent - c));
    }
    return Outcome{exact_err <= 1e-6 && noisy_err <= 0.02,
                   fmt("exact max error %.2e (<= 1e-6)", exact_err) + fmt(", 1%% noise max error %.4f (<= 0.02)", noisy_err)};
  });

  criterion("small-instance dense unitary oracle, T <= 12", [] {
    double worst = 0.0;
    for (auto kind : kAllKinds) {
      for (long steps = 1; steps <= 12; ++steps) {
        const auto spec = at_pi3_pi6(kind);
        const LetterStream stream(spec);
        std::vector<Matrix2> coins;
        for (long i = 0; i < steps; ++i) coins.push_back(Coin(spec.family, stream.angle(static_cast<std::uint64_t>(i))).matrix());
        const InitialState init;
        const auto psi = oracle::evolve(coins, init.spinor.up, init.spinor.down, steps);
        const auto r = evolve(spec, static_cast<std::size_t>(steps), init);
        for (long k = -steps; k <= steps; ++k) {
          worst = std::max(worst, std::abs(r.final_state.up(k) - psi[oracle::basis(0, k, steps)]));
          worst = std::max(worst, std::abs(r.final_state.down(k) - psi[oracle::basis(1, k, steps)]));
        }
      }
    }
    return Outcome{worst <= 1e-10, fmt("max entrywise deviation %.2e (<= 1e-10)", worst)};
  });

  criterion("spin cyclicity: Hadamard family cyclic, rotation family not", [] {
    std::size_t cyclic = 0, max_period = 0;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const auto tr = fibonacci_spin_products(Coin(CoinFamily::GeneralizedHadamard, pi / 2 * i / 7.0),
                                                Coin(CoinFamily::GeneralizedHadamard, pi / 2 * j / 7.0), 129);
        if (const auto p = detect_period(tr, 64, 1e-8)) {
          ++cyclic;
          max_period = std::max(max_period, *p);
        }
      }
    }
    std::size_t rotation_none = 0;
    for (auto [a, b] : {std::pair{1.0, 0.3}, std::pair{0.7, 1.3}, std::pair{std::sqrt(2.0), std::numbers::e / 3}}) {
      if (!detect_period(fibonacci_spin_products(Coin(CoinFamily::Rotation, a), Coin(CoinFamily::Rotation, b), 129), 64,
                         1e-8)) {
        ++rotation_none;
      }
    }
    return Outcome{cyclic == 64 && rotation_none >= 1,
                   fmt("%.0f/64 Hadamard cells cyclic", double(cyclic)) + fmt(" (max period %.0f)", double(max_period)) +
                       fmt(", %.0f/3 generic rotation pairs aperiodic within 64", double(rotation_none))};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
