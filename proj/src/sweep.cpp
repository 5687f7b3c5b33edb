#include "qwalk/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/io.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

void SweepConfig::validate() const {
  if (grid < 2) throw DomainError("sweep grid resolution must be >= 2");
  if (steps < 100) throw DomainError("sweep steps must be >= 100");
  if (!(axis_max > axis_min)) throw DomainError("sweep axis_max must exceed axis_min");
  if (window.t_max > static_cast<double>(steps)) throw DomainError("fit window extends past the last step");
  SequenceSpec probe = sequence;
  probe.alpha_a = axis_min;
  probe.alpha_b = axis_max;
  probe.validate();
  probe.alpha_a = axis_max;
  probe.alpha_b = axis_min;
  probe.validate();
}

double SweepConfig::axis(std::size_t i) const {
  if (i == grid - 1) return axis_max;
  return axis_min + (axis_max - axis_min) * static_cast<double>(i) / static_cast<double>(grid - 1);
}

std::size_t SlopeSurface::completed() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.done ? 1 : 0;
  return n;
}

SurfaceCell sweep_cell(const SweepConfig& config, std::size_t i, std::size_t j) {
  SequenceSpec spec = config.sequence;
  spec.alpha_a = config.axis(i);
  spec.alpha_b = config.axis(j);
  spec.seed = rng::derive_seed(config.seed, i * config.grid + j);
  SurfaceCell cell;
  cell.done = true;
  try {
    RecordOptions record;
    const auto res = evolve(spec, config.steps, {}, record);
    const auto fit = try_fit(res.sigma, config.window);
    cell.c = fit.exponent();
    cell.flag = fit.flag();
    cell.reason = fit.reason;
  } catch (const Error& e) {
    cell.c = std::nan("");
    cell.flag = "failed";
    cell.reason = e.what();
  }
  return cell;
}

namespace {

std::string journal_header(const SweepConfig& config) {
  json j = config;
  j.erase("workers");
  std::ostringstream os;
  os << "# qwalk sweep journal " << std::hex << fnv1a(j.dump());
  return os.str();
}

// Lines are "i,j,c,flag,reason"; a torn final line fails to parse and is dropped.
void load_journal(const std::filesystem::path& path, const SweepConfig& config, SlopeSurface& surface) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  if (line != journal_header(config)) {
    throw ValidationError("journal '" + path.string() + "' belongs to a different sweep configuration");
  }
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: incomplete record
    std::size_t fields[4];
    std::size_t pos = 0;
    bool ok = true;
    for (auto& f : fields) {
      f = line.find(',', pos);
      if (f == std::string::npos) {
        ok = false;
        break;
      }
      pos = f + 1;
    }
    if (!ok) continue;
    try {
      const auto i = std::stoull(line.substr(0, fields[0]));
      const auto jj = std::stoull(line.substr(fields[0] + 1, fields[1] - fields[0] - 1));
      if (i >= config.grid || jj >= config.grid) continue;
      SurfaceCell cell;
      const auto c_text = line.substr(fields[1] + 1, fields[2] - fields[1] - 1);
      cell.c = c_text == "nan" ? std::nan("") : std::stod(c_text);
      cell.flag = line.substr(fields[2] + 1, fields[3] - fields[2] - 1);
      if (cell.flag != "ok" && cell.flag != "confined" && cell.flag != "failed") continue;
      cell.reason = line.substr(fields[3] + 1);
      cell.done = true;
      surface.cells[i * config.grid + jj] = std::move(cell);
    } catch (const std::exception&) {
      continue;
    }
  }
}

}  // namespace

SlopeSurface run_sweep(const SweepConfig& config, const SweepRunOptions& options) {
  config.validate();
  SlopeSurface surface;
  for (std::size_t i = 0; i < config.grid; ++i) surface.alphas.push_back(config.axis(i));
  surface.betas = surface.alphas;
  surface.cells.resize(config.grid * config.grid);

  std::ofstream journal;
  if (options.journal) {
    const bool existing = std::filesystem::exists(*options.journal);
    bool torn_tail = false;
    if (existing) {
      load_journal(*options.journal, config, surface);
      std::ifstream tail(*options.journal, std::ios::binary | std::ios::ate);
      if (tail.tellg() > 0) {
        tail.seekg(-1, std::ios::end);
        torn_tail = tail.get() != '\n';
      }
    }
    if (options.journal->has_parent_path()) std::filesystem::create_directories(options.journal->parent_path());
    journal.open(*options.journal, std::ios::app);
    if (!journal) throw ResourceError("cannot open journal '" + options.journal->string() + "'");
    if (torn_tail) journal << '\n';
    if (!existing) journal << journal_header(config) << '\n' << std::flush;
  }

  std::vector<std::size_t> pending;
  for (std::size_t idx = 0; idx < surface.cells.size(); ++idx) {
    if (!surface.cells[idx].done) pending.push_back(idx);
  }
  if (options.cell_budget && pending.size() > *options.cell_budget) pending.resize(*options.cell_budget);

  std::mutex journal_mutex;
  parallel_for(pending.size(), config.workers, [&](std::size_t n) {
    const std::size_t idx = pending[n];
    const std::size_t i = idx / config.grid;
    const std::size_t j = idx % config.grid;
    auto cell = sweep_cell(config, i, j);
    if (journal.is_open()) {
      std::lock_guard lock(journal_mutex);
      journal << i << ',' << j << ',' << format_double(cell.c) << ',' << cell.flag << ',' << cell.reason << '\n'
              << std::flush;
    }
    surface.cells[idx] = std::move(cell);
  });
  return surface;
}

}  // namespace qwalk
