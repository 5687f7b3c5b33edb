#include "qwalk/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "qwalk/errors.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::filesystem::path with_suffix(const std::filesystem::path& prefix, const std::string& suffix) {
  auto p = prefix;
  p += suffix;
  return p;
}

void check_window(const std::optional<FitWindow>& window, std::size_t steps) {
  if (!window) return;
  if (!(window->t_min > 0.0) || !(window->t_max > window->t_min)) {
    throw DomainError("fit window must satisfy 0 < fit-min < fit-max");
  }
  if (window->t_max > static_cast<double>(steps)) throw DomainError("fit-max exceeds the number of steps");
}

}  // namespace

void WalkConfig::validate() const {
  if (steps < 1) throw DomainError("steps must be >= 1");
  if (sigma_every < 1) throw DomainError("sigma cadence must be >= 1");
  sequence.validate();
  init.validate();
  for (auto t : snapshots) {
    if (t > steps) throw DomainError("snapshot time " + std::to_string(t) + " exceeds steps");
  }
  check_window(window, steps);
}

void EnsembleConfig::validate() const {
  if (steps < 1) throw DomainError("steps must be >= 1");
  if (realizations < 1) throw DomainError("realizations must be >= 1");
  sequence.validate();
  init.validate();
  check_window(window, steps);
}

void SpincycleConfig::validate() const {
  if (grid < 1) throw DomainError("spincycle grid must be >= 1");
  if (bound < 1) throw DomainError("period bound must be >= 1");
  if (resolved_n_max() < 3 || bound > resolved_n_max() - 1) throw DomainError("n_max must be >= max(3, bound + 1)");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (families.empty()) throw DomainError("at least one coin family is required");
}

void to_json(json& j, const WalkConfig& c) {
  j = json{{"sequence", c.sequence}, {"steps", c.steps}, {"init", c.init},
           {"snapshots", c.snapshots}, {"fit", c.fit},   {"sigma_every", c.sigma_every}};
  j["window"] = c.window ? json(*c.window) : json(nullptr);
}

void from_json(const json& j, WalkConfig& c) {
  const WalkConfig d;
  c.sequence = j.value("sequence", d.sequence);
  c.steps = j.value("steps", d.steps);
  c.init = j.value("init", d.init);
  c.snapshots = j.value("snapshots", d.snapshots);
  c.fit = j.value("fit", d.fit);
  c.sigma_every = j.value("sigma_every", d.sigma_every);
  c.window.reset();
  if (j.contains("window") && !j["window"].is_null()) c.window = j["window"].get<FitWindow>();
}

void to_json(json& j, const EnsembleConfig& c) {
  j = json{{"sequence", c.sequence}, {"realizations", c.realizations}, {"steps", c.steps},
           {"init", c.init},         {"workers", c.workers}};
  j["window"] = c.window ? json(*c.window) : json(nullptr);
}

void from_json(const json& j, EnsembleConfig& c) {
  const EnsembleConfig d;
  c.sequence = j.value("sequence", d.sequence);
  c.realizations = j.value("realizations", d.realizations);
  c.steps = j.value("steps", d.steps);
  c.init = j.value("init", d.init);
  c.workers = j.value("workers", d.workers);
  c.window.reset();
  if (j.contains("window") && !j["window"].is_null()) c.window = j["window"].get<FitWindow>();
}

void to_json(json& j, const SpincycleConfig& c) {
  json families = json::array();
  for (auto f : c.families) families.push_back(to_string(f));
  json extra = json::array();
  for (const auto& [a, b] : c.extra_points) extra.push_back({a, b});
  j = json{{"grid", c.grid},         {"families", families},   {"bound", c.bound},
           {"tolerance", c.tolerance}, {"n_max", c.resolved_n_max()}, {"axis_min", c.axis_min},
           {"axis_max", c.axis_max}, {"extra_points", extra}};
}

void from_json(const json& j, SpincycleConfig& c) {
  const SpincycleConfig d;
  c.grid = j.value("grid", d.grid);
  c.bound = j.value("bound", d.bound);
  c.tolerance = j.value("tolerance", d.tolerance);
  c.n_max = j.value("n_max", d.n_max);
  c.axis_min = j.value("axis_min", d.axis_min);
  c.axis_max = j.value("axis_max", d.axis_max);
  c.families.clear();
  for (const auto& f : j.value("families", json::array({"hadamard", "rotation"}))) {
    c.families.push_back(parse_coin_family(f.get<std::string>()));
  }
  c.extra_points.clear();
  for (const auto& p : j.value("extra_points", json::array())) {
    c.extra_points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
}

CommandOutput run_walk(const WalkConfig& config, const std::filesystem::path& prefix) {
  config.validate();
  const auto start = Clock::now();
  RecordOptions record;
  record.sigma_every = config.sigma_every;
  record.snapshots = config.snapshots;
  const auto res = evolve(config.sequence, config.steps, config.init, record);

  CommandOutput out;
  const auto sigma_path = with_suffix(prefix, "_sigma.csv");
  write_sigma_csv(sigma_path, res.sigma);
  out.files.push_back(sigma_path);
  for (const auto& snap : res.snapshots) {
    const auto path = with_suffix(prefix, "_dist_t" + std::to_string(snap.t) + ".csv");
    write_distribution_csv(path, snap);
    out.files.push_back(path);
  }

  FitOutcome fit;
  json results{{"final_sigma", res.sigma.sigma.back()}, {"final_norm", res.norm.back()}};
  if (config.fit) {
    fit = try_fit(res.sigma, config.window.value_or(default_window(config.steps)));
    results["fit"] = fit;
  }
  json cfg = config;
  out.metadata = make_metadata("walk", cfg, out.files, seconds_since(start));
  out.metadata["results"] = results;
  const auto meta_path = with_suffix(prefix, "_meta.json");
  write_json(meta_path, out.metadata);
  out.files.push_back(meta_path);
  if (config.fit && fit.status == FitStatus::Failed) throw FitDomainError(fit.reason);
  return out;
}

CommandOutput run_ensemble(const EnsembleConfig& config, const std::filesystem::path& prefix) {
  config.validate();
  const auto start = Clock::now();
  EnsembleOptions opts;
  opts.init = config.init;
  opts.window = config.window;
  opts.workers = config.workers;
  const auto res = ensemble_average(config.sequence, config.realizations, config.steps, opts);

  CommandOutput out;
  const auto sigma_path = with_suffix(prefix, "_sigma.csv");
  write_sigma_csv(sigma_path, res.mean);
  const auto stderr_path = with_suffix(prefix, "_sigma_stderr.csv");
  write_sigma_csv(stderr_path, res.mean.t, res.stderr_);
  const auto dist_path = with_suffix(prefix, "_dist.csv");
  write_distribution_csv(dist_path, res.mean_distribution);
  const auto exp_path = with_suffix(prefix, "_exponents.csv");
  {
    std::ofstream os(exp_path, std::ios::binary | std::ios::trunc);
    if (!os) throw ResourceError("cannot open '" + exp_path.string() + "' for writing");
    os << "realization,seed,c,flag\n";
    for (std::size_t i = 0; i < res.seeds.size(); ++i) {
      os << i << ',' << res.seeds[i] << ',' << format_double(res.per_realization[i].exponent()) << ','
         << res.per_realization[i].flag() << '\n';
    }
  }
  out.files = {sigma_path, stderr_path, dist_path, exp_path};

  json seeds = res.seeds;
  json cfg = config;
  out.metadata = make_metadata("ensemble", cfg, out.files, seconds_since(start));
  out.metadata["results"] = {{"fit_of_mean", res.fit_of_mean},
                             {"mean_of_exponents", res.mean_of_exponents},
                             {"derived_seeds", seeds},
                             {"averaging", "sigma(t) averaged over realizations, then fitted"}};
  const auto meta_path = with_suffix(prefix, "_meta.json");
  write_json(meta_path, out.metadata);
  out.files.push_back(meta_path);
  return out;
}

CommandOutput run_sweep_command(const SweepConfig& config, const std::filesystem::path& prefix,
                                std::optional<std::size_t> cell_budget) {
  const auto start = Clock::now();
  const auto journal = with_suffix(prefix, "_surface.journal");
  const auto surface = run_sweep(config, {journal, cell_budget});

  CommandOutput out;
  json cfg = config;
  if (!surface.complete()) {
    out.files = {journal};
    out.metadata = {{"command", "sweep"}, {"config", cfg}, {"completed_cells", surface.completed()},
                    {"total_cells", surface.cells.size()}};
    return out;
  }
  const auto surface_path = with_suffix(prefix, "_surface.csv");
  write_surface_csv(surface_path, surface);
  out.files = {surface_path};

  json failures = json::array();
  std::size_t confined = 0;
  for (std::size_t i = 0; i < surface.alphas.size(); ++i) {
    for (std::size_t j = 0; j < surface.betas.size(); ++j) {
      const auto& cell = surface.at(i, j);
      if (cell.flag == "failed") failures.push_back({{"i", i}, {"j", j}, {"reason", cell.reason}});
      if (cell.flag == "confined") ++confined;
    }
  }
  out.metadata = make_metadata("sweep", cfg, out.files, seconds_since(start));
  out.metadata["results"] = {{"cells", surface.cells.size()}, {"confined_cells", confined}, {"failed_cells", failures}};
  out.metadata["notes"] = "grid resolution and step count are desk-scale defaults, not values from a reference run";
  const auto meta_path = with_suffix(prefix, "_meta.json");
  write_json(meta_path, out.metadata);
  out.files.push_back(meta_path);
  std::filesystem::remove(journal);
  return out;
}

std::vector<SpincycleRow> spincycle_grid(const SpincycleConfig& config) {
  config.validate();
  std::vector<std::pair<double, double>> points;
  const auto axis = [&](std::size_t i) {
    if (config.grid == 1) return config.axis_min;
    if (i == config.grid - 1) return config.axis_max;
    return config.axis_min + (config.axis_max - config.axis_min) * static_cast<double>(i) /
                                 static_cast<double>(config.grid - 1);
  };
  for (std::size_t i = 0; i < config.grid; ++i) {
    for (std::size_t j = 0; j < config.grid; ++j) points.emplace_back(axis(i), axis(j));
  }
  points.insert(points.end(), config.extra_points.begin(), config.extra_points.end());

  std::vector<SpincycleRow> rows;
  for (auto family : config.families) {
    for (const auto& [a, b] : points) {
      const auto trace = fibonacci_spin_products(Coin(family, a), Coin(family, b), config.resolved_n_max());
      rows.push_back({a, b, family, detect_period(trace, config.bound, config.tolerance)});
    }
  }
  return rows;
}

CommandOutput run_spincycle(const SpincycleConfig& config, const std::filesystem::path& prefix) {
  const auto start = Clock::now();
  const auto rows = spincycle_grid(config);
  const auto csv_path = with_suffix(prefix, "_spincycle.csv");
  {
    if (csv_path.has_parent_path()) std::filesystem::create_directories(csv_path.parent_path());
    std::ofstream os(csv_path, std::ios::binary | std::ios::trunc);
    if (!os) throw ResourceError("cannot open '" + csv_path.string() + "' for writing");
    os << "alpha,beta,family,period\n";
    for (const auto& r : rows) {
      os << format_double(r.alpha) << ',' << format_double(r.beta) << ',' << to_string(r.family) << ','
         << (r.period ? std::to_string(*r.period) : std::string("none")) << '\n';
    }
  }
  CommandOutput out;
  out.files = {csv_path};
  json summary = json::object();
  for (auto family : config.families) {
    std::size_t cyclic = 0, total = 0;
    for (const auto& r : rows) {
      if (r.family != family) continue;
      ++total;
      cyclic += r.period ? 1 : 0;
    }
    summary[std::string(to_string(family))] = {{"cells", total}, {"cyclic", cyclic}};
  }
  json cfg = config;
  out.metadata = make_metadata("spincycle", cfg, out.files, seconds_since(start));
  out.metadata["results"] = summary;
  const auto meta_path = with_suffix(prefix, "_meta.json");
  write_json(meta_path, out.metadata);
  out.files.push_back(meta_path);
  return out;
}

}  // namespace qwalk
