#pragma once

#include <cstddef>
#include <vector>

#include "qwalk/observables.hpp"
#include "qwalk/sequence.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

struct RecordOptions {
  /// Record sigma (and the norm) at t = 0 and every `sigma_every` steps; T is always recorded.
  std::size_t sigma_every = 1;
  /// Times at which to keep the full distribution.
  std::vector<std::size_t> snapshots;
};

struct EvolveResult {
  WalkState final_state;
  SigmaSeries sigma;
  std::vector<double> norm;  // aligned with sigma.t
  std::vector<Distribution> snapshots;
};

/// Runs `steps` coin-then-shift updates with the coin for step i taken from
/// LetterStream(spec).angle(i). Deterministic in (spec, steps, init).
EvolveResult evolve(const SequenceSpec& spec, std::size_t steps, const InitialState& init = {},
                    const RecordOptions& record = {});

}  // namespace qwalk
