#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/matrix2.hpp"
#include "qwalk/sequence.hpp"

namespace qwalk {

struct Spinor {
  Complex up;
  Complex down;
};

/// Spin state placed at the origin at t = 0. The default
/// (|up> + i|down>)/sqrt(2) gives a mirror-symmetric distribution.
struct InitialState {
  Spinor spinor{std::numbers::sqrt2 / 2, Complex(0.0, std::numbers::sqrt2 / 2)};

  /// Throws ValidationError unless |up|^2 + |down|^2 = 1 within 1e-12.
  void validate() const;
};

/// Wavefunction a(s, k) on the sites k in [-max_steps, max_steps]. The array
/// is sized so that t <= max_steps steps never reach the boundary.
class WalkState {
 public:
  WalkState(std::size_t max_steps, const InitialState& init);

  std::size_t time() const { return t_; }
  std::size_t max_steps() const { return max_steps_; }

  Complex up(std::int64_t k) const { return in_range(k) ? up_[index(k)] : Complex{}; }
  Complex down(std::int64_t k) const { return in_range(k) ? down_[index(k)] : Complex{}; }
  double probability(std::int64_t k) const { return std::norm(up(k)) + std::norm(down(k)); }

  /// Total probability over the light cone.
  double norm() const;

  /// Full backing arrays, element i holding site k = i - max_steps.
  std::span<const Complex> up_amplitudes() const { return up_; }
  std::span<const Complex> down_amplitudes() const { return down_; }

  friend void apply_coin(WalkState& state, const Coin& coin);
  friend void apply_shift(WalkState& state);
  friend void step(WalkState& state, const Coin& coin);

 private:
  bool in_range(std::int64_t k) const {
    return k >= -static_cast<std::int64_t>(max_steps_) && k <= static_cast<std::int64_t>(max_steps_);
  }
  std::size_t index(std::int64_t k) const { return static_cast<std::size_t>(k + static_cast<std::int64_t>(max_steps_)); }

  std::size_t max_steps_;
  std::size_t t_ = 0;
  std::vector<Complex> up_;
  std::vector<Complex> down_;
};

WalkState init_state(std::size_t max_steps, const InitialState& init = {});

/// Left-multiplies every site's spinor by the coin matrix.
void apply_coin(WalkState& state, const Coin& coin);

/// Moves up amplitudes k -> k+1 and down amplitudes k -> k-1, then t += 1.
/// Throws ResourceError when t == max_steps.
void apply_shift(WalkState& state);

/// Coin then shift in one pass; produces the same bits as
/// apply_coin followed by apply_shift.
void step(WalkState& state, const Coin& coin);

}  // namespace qwalk
