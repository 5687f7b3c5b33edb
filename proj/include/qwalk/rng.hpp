#pragma once

#include <cstdint>
#include <string_view>

namespace qwalk {

/// Counter-based random access into the SplitMix64 stream: draw i of the
/// generator seeded with `seed` is a pure function of (seed, i). Workers can
/// therefore consume disjoint index ranges with no shared state.
namespace rng {

inline constexpr std::string_view kAlgorithm = "splitmix64";
inline constexpr std::string_view kSeedDerivation =
    "seed_i = splitmix64_mix(master ^ splitmix64_mix(i + 0xd1b54a32d192ed03))";

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// i-th output (0-based) of SplitMix64 with initial state `seed`.
constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t i) { return mix(seed + (i + 1) * kGamma); }

/// Uniform double in [0, 1) built from the top 53 bits of draw(seed, i).
constexpr double uniform(std::uint64_t seed, std::uint64_t i) {
  return static_cast<double>(draw(seed, i) >> 11) * 0x1.0p-53;
}

/// Seed for ensemble member / grid cell `index` under `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix(master ^ mix(index + 0xd1b54a32d192ed03ULL));
}

}  // namespace rng
}  // namespace qwalk
