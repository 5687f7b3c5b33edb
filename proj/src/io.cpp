#include "qwalk/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iterator>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void to_json(json& j, const SequenceSpec& s) {
  j = json{{"kind", to_string(s.kind)},
           {"approximant_order", s.approximant_order},
           {"alpha_a", s.alpha_a},
           {"alpha_b", s.alpha_b},
           {"width", s.width},
           {"seed", s.seed},
           {"family", to_string(s.family)},
           {"letter_order", to_string(s.letter_order)},
           {"complementary_b", s.complementary_b}};
}

void from_json(const json& j, SequenceSpec& s) {
  const SequenceSpec d;
  s.kind = parse_sequence_kind(j.value("kind", std::string(to_string(d.kind))));
  s.approximant_order = j.value("approximant_order", d.approximant_order);
  s.alpha_a = j.value("alpha_a", d.alpha_a);
  s.alpha_b = j.value("alpha_b", d.alpha_b);
  s.width = j.value("width", d.width);
  s.seed = j.value("seed", d.seed);
  s.family = parse_coin_family(j.value("family", std::string(to_string(d.family))));
  s.letter_order = parse_letter_order(j.value("letter_order", std::string(to_string(d.letter_order))));
  s.complementary_b = j.value("complementary_b", d.complementary_b);
}

void to_json(json& j, const InitialState& init) {
  j = json{{"up", {init.spinor.up.real(), init.spinor.up.imag()}},
           {"down", {init.spinor.down.real(), init.spinor.down.imag()}}};
}

void from_json(const json& j, InitialState& init) {
  const auto up = j.at("up").get<std::vector<double>>();
  const auto down = j.at("down").get<std::vector<double>>();
  if (up.size() != 2 || down.size() != 2) throw ValidationError("initial spinor entries need [re, im] pairs");
  init.spinor = {Complex(up[0], up[1]), Complex(down[0], down[1])};
}

void to_json(json& j, const FitWindow& w) { j = json{{"t_min", w.t_min}, {"t_max", w.t_max}}; }
void from_json(const json& j, FitWindow& w) {
  w.t_min = j.at("t_min").get<double>();
  w.t_max = j.at("t_max").get<double>();
}

void to_json(json& j, const FitResult& f) {
  j = json{{"exponent", f.exponent}, {"prefactor", f.prefactor}, {"t_min", f.t_min},  {"t_max", f.t_max},
           {"residual", f.residual}, {"points", f.points},       {"confined", f.confined}};
}

void to_json(json& j, const FitOutcome& f) {
  j = json{{"flag", f.flag()}};
  if (f.status == FitStatus::Failed) {
    j["exponent"] = nullptr;
    j["reason"] = f.reason;
  } else {
    j["exponent"] = f.result.exponent;
    j["fit"] = f.result;
  }
}

void to_json(json& j, const SweepConfig& c) {
  j = json{{"sequence", c.sequence}, {"grid", c.grid},         {"steps", c.steps},
           {"window", c.window},     {"workers", c.workers},   {"seed", c.seed},
           {"axis_min", c.axis_min}, {"axis_max", c.axis_max}};
}

void from_json(const json& j, SweepConfig& c) {
  const SweepConfig d;
  c.sequence = j.value("sequence", d.sequence);
  c.grid = j.value("grid", d.grid);
  c.steps = j.value("steps", d.steps);
  c.window = j.value("window", d.window);
  c.workers = j.value("workers", d.workers);
  c.seed = j.value("seed", d.seed);
  c.axis_min = j.value("axis_min", d.axis_min);
  c.axis_max = j.value("axis_max", d.axis_max);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

void write_sigma_csv(const std::filesystem::path& path, const std::vector<std::size_t>& t,
                     const std::vector<double>& values) {
  auto out = open_out(path);
  out << "t,sigma\n";
  for (std::size_t i = 0; i < t.size(); ++i) out << t[i] << ',' << format_double(values[i]) << '\n';
}

void write_sigma_csv(const std::filesystem::path& path, const SigmaSeries& series) {
  write_sigma_csv(path, series.t, series.sigma);
}

void write_distribution_csv(const std::filesystem::path& path, const Distribution& dist) {
  auto out = open_out(path);
  out << "k,p\n";
  for (std::size_t i = 0; i < dist.p.size(); ++i) {
    out << dist.k_min() + static_cast<std::int64_t>(i) << ',' << format_double(dist.p[i]) << '\n';
  }
}

void write_surface_csv(const std::filesystem::path& path, const SlopeSurface& surface) {
  auto out = open_out(path);
  out << "alpha,beta,c,flag\n";
  for (std::size_t i = 0; i < surface.alphas.size(); ++i) {
    for (std::size_t j = 0; j < surface.betas.size(); ++j) {
      const auto& cell = surface.at(i, j);
      out << format_double(surface.alphas[i]) << ',' << format_double(surface.betas[j]) << ','
          << format_double(cell.c) << ',' << cell.flag << '\n';
    }
  }
}

SigmaSeries read_sigma_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open '" + path.string() + "'");
  std::string line;
  std::getline(in, line);
  if (line != "t,sigma") throw ValidationError("'" + path.string() + "' is not a t,sigma CSV");
  SigmaSeries s;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ValidationError("malformed row in '" + path.string() + "'");
    s.push_back(std::stoull(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return s;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= 0x100000001b3ULL;
  }
  return state;
}

namespace {

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string fnv1a_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open '" + path.string() + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return hex64(fnv1a(bytes));
}

json make_metadata(std::string_view command, const json& config, const std::vector<std::filesystem::path>& outputs,
                   double wall_seconds) {
  json files = json::array();
  std::uint64_t combined = 0xcbf29ce484222325ULL;
  for (const auto& p : outputs) {
    const auto h = fnv1a_file(p);
    files.push_back({{"file", p.filename().string()}, {"fnv1a64", h}});
    combined = fnv1a(h, combined);
  }
  return json{{"tool", "qwalk"},
              {"version", QWALK_VERSION},
              {"command", command},
              {"config", config},
              {"rng", {{"algorithm", rng::kAlgorithm}, {"seed_derivation", rng::kSeedDerivation}}},
              {"started_at", utc_now()},
              {"wall_clock_seconds", wall_seconds},
              {"outputs", files},
              {"determinism_hash", hex64(combined)}};
}

void write_json(const std::filesystem::path& path, const json& value) {
  auto out = open_out(path);
  out << value.dump(2) << '\n';
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace qwalk
