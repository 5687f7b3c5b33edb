#include "qwalk/evolve.hpp"

#include <algorithm>
#include <optional>

#include "qwalk/errors.hpp"
#include "qwalk/fpenv.hpp"

namespace qwalk {

EvolveResult evolve(const SequenceSpec& spec, std::size_t steps, const InitialState& init,
                    const RecordOptions& record) {
  if (steps < 1) throw ValidationError("steps must be >= 1");
  if (record.sigma_every < 1) throw ValidationError("sigma cadence must be >= 1");
  for (auto t : record.snapshots) {
    if (t > steps) throw ValidationError("snapshot time " + std::to_string(t) + " beyond the last step");
  }
  const LetterStream stream(spec);
  const ScopedFlushSubnormals flush;

  // Two-letter schedules reuse the same pair of coins.
  std::optional<Coin> coin_a;
  std::optional<Coin> coin_b;
  if (spec.kind != SequenceKind::RandomContinuous) {
    coin_a.emplace(spec.family, angle_for_letter(spec, Letter::A));
    if (spec.kind != SequenceKind::Constant) coin_b.emplace(spec.family, angle_for_letter(spec, Letter::B));
  }

  EvolveResult out{WalkState(steps, init), {}, {}, {}};
  auto& state = out.final_state;
  const auto wants_snapshot = [&](std::size_t t) {
    return std::find(record.snapshots.begin(), record.snapshots.end(), t) != record.snapshots.end();
  };
  const auto observe = [&](std::size_t t) {
    const bool sigma_due = t % record.sigma_every == 0 || t == steps;
    const bool snap = wants_snapshot(t);
    if (sigma_due) {
      out.sigma.push_back(t, sigma_from_amplitudes(state));
      out.norm.push_back(state.norm());
    }
    if (snap) out.snapshots.push_back(distribution(state));
  };

  observe(0);
  for (std::size_t i = 0; i < steps; ++i) {
    if (spec.kind == SequenceKind::RandomContinuous) {
      step(state, Coin(spec.family, stream.angle(i)));
    } else if (spec.kind == SequenceKind::Constant || stream.letter(i) == Letter::A) {
      step(state, *coin_a);
    } else {
      step(state, *coin_b);
    }
    observe(i + 1);
  }
  return out;
}

}  // namespace qwalk
