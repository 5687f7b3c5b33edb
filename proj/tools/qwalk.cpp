// qwalk: command-line driver for the aperiodic quantum walk engine.
//
//   qwalk walk      --sequence fibonacci --alpha-frac 1 3 --beta-frac 1 6 --steps 5000
//   qwalk ensemble  --sequence random-binary --alpha-frac 1 3 --realizations 100 --steps 4000
//   qwalk sweep     --sequence fibonacci --grid 32 --steps 4000 --workers 8
//   qwalk spincycle --grid 8 --family both
//
// Exit codes: 0 success, 2 usage error, 3 resource/overflow, 4 fit-domain error.

#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"
#include "qwalk/runner.hpp"

namespace {

using namespace qwalk;

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitFit = 4;

struct AngleFlag {
  double radians = 0.0;
  std::vector<double> frac;  // p q meaning p*pi/q
  CLI::Option* plain = nullptr;
  CLI::Option* fraction = nullptr;

  void add(CLI::App& app, const std::string& name, const std::string& what) {
    plain = app.add_option("--" + name, radians, what + " in radians");
    fraction = app.add_option("--" + name + "-frac", frac, what + " as p q, meaning p*pi/q")->expected(2);
    plain->excludes(fraction);
  }
  bool given() const { return plain->count() > 0 || fraction->count() > 0; }
  double value() const {
    if (fraction->count() > 0) {
      if (frac[1] == 0.0) throw DomainError("--*-frac denominator must be nonzero");
      return frac[0] * std::numbers::pi / frac[1];
    }
    return radians;
  }
};

// Flags shared by every subcommand that builds a SequenceSpec.
struct SequenceFlags {
  std::string kind;
  AngleFlag alpha, beta, width;
  int approximant = 1;
  std::string family;
  std::string letter_order;
  std::uint64_t seed = 0;
  bool complementary = false;
  CLI::Option *kind_opt{}, *approx_opt{}, *family_opt{}, *order_opt{}, *seed_opt{}, *compl_opt{};

  void add(CLI::App& app) {
    kind_opt = app.add_option("--sequence", kind, "Coin schedule")
                   ->check(CLI::IsMember({"constant", "periodic", "fibonacci", "silver", "random-binary",
                                          "random-continuous"}));
    alpha.add(app, "alpha", "Angle of coin A");
    beta.add(app, "beta", "Angle of coin B");
    width.add(app, "width", "Half-width of the random-continuous angle distribution");
    approx_opt = app.add_option("--approximant", approximant, "Approximant order for --sequence periodic");
    family_opt = app.add_option("--family", family, "Coin family")->check(CLI::IsMember({"hadamard", "rotation"}));
    order_opt = app.add_option("--letter-order", letter_order, "Time order of word letters")
                    ->check(CLI::IsMember({"word", "operator"}));
    seed_opt = app.add_option("--seed", seed, "Seed (random kinds; master seed for ensembles and sweeps)");
    compl_opt = app.add_flag("--complementary", complementary,
                             "random-binary: use pi/2 - alpha for letter B (default when --beta is absent)");
  }

  void apply(SequenceSpec& s, bool fresh) const {
    if (kind_opt->count()) s.kind = parse_sequence_kind(kind);
    if (alpha.given()) s.alpha_a = alpha.value();
    if (beta.given()) s.alpha_b = beta.value();
    if (width.given()) s.width = width.value();
    if (approx_opt->count()) s.approximant_order = approximant;
    if (family_opt->count()) s.family = parse_coin_family(family);
    if (order_opt->count()) s.letter_order = parse_letter_order(letter_order);
    if (seed_opt->count()) s.seed = seed;
    if (compl_opt->count()) {
      s.complementary_b = true;
    } else if (fresh || beta.given() || kind_opt->count()) {
      s.complementary_b = s.kind == SequenceKind::RandomBinary && !beta.given();
    }
  }
};

struct WindowFlags {
  double t_min = 0.0, t_max = 0.0;
  CLI::Option *min_opt{}, *max_opt{};

  void add(CLI::App& app) {
    min_opt = app.add_option("--fit-min", t_min, "Fit window start (default steps/4)");
    max_opt = app.add_option("--fit-max", t_max, "Fit window end (default steps)");
  }
  bool given() const { return min_opt->count() || max_opt->count(); }
  FitWindow resolve(std::size_t steps, std::optional<FitWindow> base) const {
    FitWindow w = base.value_or(default_window(steps));
    if (min_opt->count()) w.t_min = t_min;
    if (max_opt->count()) w.t_max = t_max;
    return w;
  }
};

json load_config_block(const std::string& path) {
  json j = read_json(path);
  return j.contains("config") ? j["config"] : j;
}

void report(const CommandOutput& out) {
  for (const auto& f : out.files) std::cout << "wrote " << f.string() << '\n';
  if (out.metadata.contains("results")) std::cout << out.metadata["results"].dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time quantum walks under periodic, quasiperiodic and random coin sequences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QWALK_VERSION);

  // walk
  auto* walk = app.add_subcommand("walk", "Single evolution: sigma(t), snapshots, fitted exponent");
  SequenceFlags walk_seq;
  walk_seq.add(*walk);
  WindowFlags walk_win;
  walk_win.add(*walk);
  std::size_t walk_steps = 0;
  auto* walk_steps_opt = walk->add_option("--steps", walk_steps, "Number of steps")->check(CLI::PositiveNumber);
  std::vector<std::size_t> walk_snapshots;
  auto* walk_snap_opt = walk->add_option("--snapshot", walk_snapshots, "Times to dump P(k)")->delimiter(',');
  std::vector<double> init_up, init_down;
  auto* init_up_opt = walk->add_option("--init-up", init_up, "Initial up amplitude: re im")->expected(2);
  auto* init_down_opt = walk->add_option("--init-down", init_down, "Initial down amplitude: re im")->expected(2);
  bool no_fit = false;
  auto* no_fit_opt = walk->add_flag("--no-fit", no_fit, "Skip the exponent fit");
  std::size_t sigma_every = 1;
  auto* sigma_every_opt = walk->add_option("--sigma-every", sigma_every, "Sigma recording cadence");
  std::string walk_out = "qwalk_out/walk";
  walk->add_option("--out", walk_out, "Output path prefix");
  std::string walk_config;
  walk->add_option("--config", walk_config, "Metadata JSON whose config block seeds this run")
      ->check(CLI::ExistingFile);
  std::size_t walk_workers = 1;
  walk->add_option("--workers", walk_workers, "Accepted for symmetry; a single walk is sequential");

  // ensemble
  auto* ens = app.add_subcommand("ensemble", "Disorder average over seeded realizations");
  SequenceFlags ens_seq;
  ens_seq.add(*ens);
  WindowFlags ens_win;
  ens_win.add(*ens);
  std::size_t ens_steps = 0, ens_r = 0, ens_workers = 1;
  auto* ens_steps_opt = ens->add_option("--steps", ens_steps, "Number of steps")->check(CLI::PositiveNumber);
  auto* ens_r_opt = ens->add_option("--realizations", ens_r, "Ensemble size")->check(CLI::PositiveNumber);
  auto* ens_workers_opt = ens->add_option("--workers", ens_workers, "Worker threads")->check(CLI::PositiveNumber);
  std::vector<std::size_t> ens_snapshots;
  ens->add_option("--snapshot", ens_snapshots, "Only the final time is supported")->delimiter(',');
  std::string ens_out = "qwalk_out/ensemble";
  ens->add_option("--out", ens_out, "Output path prefix");
  std::string ens_config;
  ens->add_option("--config", ens_config, "Metadata JSON whose config block seeds this run")->check(CLI::ExistingFile);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Slope surface c(alpha, beta) over a grid");
  SequenceFlags sweep_seq;
  sweep_seq.add(*sweep);
  WindowFlags sweep_win;
  sweep_win.add(*sweep);
  std::size_t sweep_steps = 0, sweep_grid = 0, sweep_workers = 1, cell_budget = 0;
  auto* sweep_steps_opt = sweep->add_option("--steps", sweep_steps, "Steps per cell");
  auto* sweep_grid_opt = sweep->add_option("--grid", sweep_grid, "Resolution per axis");
  auto* sweep_workers_opt =
      sweep->add_option("--workers", sweep_workers, "Worker threads")->check(CLI::PositiveNumber);
  auto* budget_opt = sweep->add_option("--cell-budget", cell_budget, "Compute at most this many new cells, then stop");
  std::string sweep_out = "qwalk_out/sweep";
  sweep->add_option("--out", sweep_out, "Output path prefix");
  std::string sweep_config;
  sweep->add_option("--config", sweep_config, "Metadata JSON whose config block seeds this run")
      ->check(CLI::ExistingFile);
  std::vector<std::size_t> sweep_snapshots;
  sweep->add_option("--snapshot", sweep_snapshots, "Not used by sweeps")->delimiter(',');

  // spincycle
  auto* spin = app.add_subcommand("spincycle", "Period of coin-only Fibonacci products over a grid");
  std::size_t spin_grid = 0, spin_bound = 0, spin_nmax = 0;
  double spin_tol = 0.0;
  std::string spin_family;
  std::vector<double> spin_points;
  auto* spin_grid_opt = spin->add_option("--grid", spin_grid, "Resolution per axis");
  auto* spin_bound_opt = spin->add_option("--bound", spin_bound, "Largest period searched");
  auto* spin_tol_opt = spin->add_option("--tol", spin_tol, "Entrywise tolerance");
  auto* spin_nmax_opt = spin->add_option("--n-max", spin_nmax, "Number of products (default 2*bound+1)");
  auto* spin_family_opt =
      spin->add_option("--family", spin_family, "Coin family")->check(CLI::IsMember({"hadamard", "rotation", "both"}));
  auto* spin_points_opt = spin->add_option("--point", spin_points, "Extra (alpha, beta) sample; repeatable")
                              ->expected(2)
                              ->take_all();
  std::string spin_out = "qwalk_out/spincycle";
  spin->add_option("--out", spin_out, "Output path prefix");
  std::string spin_config;
  spin->add_option("--config", spin_config, "Metadata JSON whose config block seeds this run")
      ->check(CLI::ExistingFile);
  std::uint64_t spin_seed = 0;
  spin->add_option("--seed", spin_seed, "Unused (spin products are deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*walk) {
      WalkConfig cfg;
      const bool fresh = walk_config.empty();
      if (!fresh) cfg = load_config_block(walk_config).get<WalkConfig>();
      walk_seq.apply(cfg.sequence, fresh);
      if (walk_steps_opt->count()) cfg.steps = walk_steps;
      if (walk_snap_opt->count()) cfg.snapshots = walk_snapshots;
      if (init_up_opt->count()) cfg.init.spinor.up = {init_up[0], init_up[1]};
      if (init_down_opt->count()) cfg.init.spinor.down = {init_down[0], init_down[1]};
      if (no_fit_opt->count()) cfg.fit = false;
      if (sigma_every_opt->count()) cfg.sigma_every = sigma_every;
      if (walk_win.given() || (walk_steps_opt->count() && cfg.window)) {
        cfg.window = walk_win.resolve(cfg.steps, walk_win.given() ? cfg.window : std::nullopt);
      }
      report(run_walk(cfg, walk_out));
    } else if (*ens) {
      EnsembleConfig cfg;
      const bool fresh = ens_config.empty();
      if (!fresh) cfg = load_config_block(ens_config).get<EnsembleConfig>();
      ens_seq.apply(cfg.sequence, fresh);
      if (ens_steps_opt->count()) cfg.steps = ens_steps;
      if (ens_r_opt->count()) cfg.realizations = ens_r;
      if (ens_workers_opt->count()) cfg.workers = ens_workers;
      for (auto t : ens_snapshots) {
        if (t != cfg.steps) throw DomainError("ensemble snapshots are only available at t = steps");
      }
      if (ens_win.given()) cfg.window = ens_win.resolve(cfg.steps, cfg.window);
      report(run_ensemble(cfg, ens_out));
    } else if (*sweep) {
      SweepConfig cfg;
      const bool fresh = sweep_config.empty();
      if (!fresh) cfg = load_config_block(sweep_config).get<SweepConfig>();
      sweep_seq.apply(cfg.sequence, fresh);
      if (sweep_seq.seed_opt->count()) cfg.seed = sweep_seq.seed;
      if (sweep_grid_opt->count()) cfg.grid = sweep_grid;
      if (sweep_workers_opt->count()) cfg.workers = sweep_workers;
      if (sweep_steps_opt->count()) {
        cfg.steps = sweep_steps;
        if (!sweep_win.given()) cfg.window = default_window(cfg.steps);
      }
      if (sweep_win.given()) cfg.window = sweep_win.resolve(cfg.steps, cfg.window);
      const auto out =
          run_sweep_command(cfg, sweep_out, budget_opt->count() ? std::optional(cell_budget) : std::nullopt);
      report(out);
      if (out.metadata.contains("completed_cells")) {
        std::cout << "partial sweep: " << out.metadata["completed_cells"] << " of " << out.metadata["total_cells"]
                  << " cells journaled; rerun to resume\n";
      }
    } else if (*spin) {
      SpincycleConfig cfg;
      if (!spin_config.empty()) cfg = load_config_block(spin_config).get<SpincycleConfig>();
      if (spin_grid_opt->count()) cfg.grid = spin_grid;
      if (spin_bound_opt->count()) cfg.bound = spin_bound;
      if (spin_tol_opt->count()) cfg.tolerance = spin_tol;
      if (spin_nmax_opt->count()) cfg.n_max = spin_nmax;
      if (spin_family_opt->count()) {
        cfg.families.clear();
        if (spin_family != "rotation") cfg.families.push_back(CoinFamily::GeneralizedHadamard);
        if (spin_family != "hadamard") cfg.families.push_back(CoinFamily::Rotation);
      }
      if (spin_points_opt->count()) {
        cfg.extra_points.clear();
        for (std::size_t i = 0; i + 1 < spin_points.size(); i += 2) {
          cfg.extra_points.emplace_back(spin_points[i], spin_points[i + 1]);
        }
      }
      report(run_spincycle(cfg, spin_out));
    }
  } catch (const FitDomainError& e) {
    std::cerr << "fit error: " << e.what() << '\n';
    return kExitFit;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "usage error: bad config: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
