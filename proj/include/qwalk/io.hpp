#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/sequence.hpp"
#include "qwalk/sweep.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

using json = nlohmann::json;

/// Shortest text that parses back to the same double ("nan" for NaN).
std::string format_double(double value);

void to_json(json& j, const SequenceSpec& spec);
void from_json(const json& j, SequenceSpec& spec);
void to_json(json& j, const InitialState& init);
void from_json(const json& j, InitialState& init);
void to_json(json& j, const FitWindow& window);
void from_json(const json& j, FitWindow& window);
void to_json(json& j, const FitResult& fit);
void to_json(json& j, const FitOutcome& fit);
void to_json(json& j, const SweepConfig& config);
void from_json(const json& j, SweepConfig& config);

// CSV writers; schemas are `t,sigma`, `k,p`, `alpha,beta,c,flag`.
void write_sigma_csv(const std::filesystem::path& path, const SigmaSeries& series);
void write_sigma_csv(const std::filesystem::path& path, const std::vector<std::size_t>& t,
                     const std::vector<double>& values);
void write_distribution_csv(const std::filesystem::path& path, const Distribution& dist);
void write_surface_csv(const std::filesystem::path& path, const SlopeSurface& surface);

SigmaSeries read_sigma_csv(const std::filesystem::path& path);

/// 64-bit FNV-1a of a file's bytes, as 16 hex digits.
std::string fnv1a_file(const std::filesystem::path& path);
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state = 0xcbf29ce484222325ULL);

/// Metadata block common to every command. `outputs` are hashed
/// individually; "determinism_hash" folds their content hashes in order and
/// ignores the file names.
json make_metadata(std::string_view command, const json& config, const std::vector<std::filesystem::path>& outputs,
                   double wall_seconds);

void write_json(const std::filesystem::path& path, const json& value);
json read_json(const std::filesystem::path& path);

}  // namespace qwalk
