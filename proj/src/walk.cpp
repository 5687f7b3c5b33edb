#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

void InitialState::validate() const {
  const double n = std::norm(spinor.up) + std::norm(spinor.down);
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
    throw ValidationError("initial spinor is not normalized: |up|^2 + |down|^2 = " + std::to_string(n));
  }
}

WalkState::WalkState(std::size_t max_steps, const InitialState& init)
    : max_steps_(max_steps), up_(2 * max_steps + 1), down_(2 * max_steps + 1) {
  if (max_steps < 1) throw ValidationError("max_steps must be >= 1");
  init.validate();
  up_[max_steps_] = init.spinor.up;
  down_[max_steps_] = init.spinor.down;
}

double WalkState::norm() const {
  double total = 0.0;
  // Occupied sites are k = -t, -t+2, ..., t.
  for (std::size_t i = max_steps_ - t_; i <= max_steps_ + t_; i += 2) {
    total += std::norm(up_[i]) + std::norm(down_[i]);
  }
  return total;
}

WalkState init_state(std::size_t max_steps, const InitialState& init) { return WalkState(max_steps, init); }

namespace {

// Both kernels spell the matrix-vector product identically so that the fused
// step and the two-stage path agree bit for bit.
struct RealKernel {
  double m00, m01, m10, m11;
  Complex up(Complex u, Complex d) const { return m00 * u + m01 * d; }
  Complex down(Complex u, Complex d) const { return m10 * u + m11 * d; }
};

struct ComplexKernel {
  Complex m00, m01, m10, m11;
  Complex up(Complex u, Complex d) const { return m00 * u + m01 * d; }
  Complex down(Complex u, Complex d) const { return m10 * u + m11 * d; }
};

template <typename Fn>
void with_kernel(const Coin& coin, Fn&& fn) {
  const auto& m = coin.matrix();
  if (coin.is_real()) {
    fn(RealKernel{m(0, 0).real(), m(0, 1).real(), m(1, 0).real(), m(1, 1).real()});
  } else {
    fn(ComplexKernel{m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
  }
}

}  // namespace

void apply_coin(WalkState& state, const Coin& coin) {
  const std::size_t lo = state.max_steps_ - state.t_;
  const std::size_t hi = state.max_steps_ + state.t_;
  with_kernel(coin, [&](const auto& kernel) {
    for (std::size_t i = lo; i <= hi; i += 2) {
      const Complex u = state.up_[i];
      const Complex d = state.down_[i];
      state.up_[i] = kernel.up(u, d);
      state.down_[i] = kernel.down(u, d);
    }
  });
}

void apply_shift(WalkState& state) {
  if (state.t_ >= state.max_steps_) {
    throw ResourceError("walk support would leave the lattice at t = " + std::to_string(state.t_ + 1) +
                        "; increase max_steps");
  }
  const std::size_t lo = state.max_steps_ - state.t_;
  const std::size_t hi = state.max_steps_ + state.t_;
  auto& up = state.up_;
  auto& down = state.down_;
  std::copy_backward(up.begin() + static_cast<std::ptrdiff_t>(lo), up.begin() + static_cast<std::ptrdiff_t>(hi + 1),
                     up.begin() + static_cast<std::ptrdiff_t>(hi + 2));
  up[lo] = Complex{};
  std::copy(down.begin() + static_cast<std::ptrdiff_t>(lo), down.begin() + static_cast<std::ptrdiff_t>(hi + 1),
            down.begin() + static_cast<std::ptrdiff_t>(lo - 1));
  down[hi] = Complex{};
  ++state.t_;
}

void step(WalkState& state, const Coin& coin) {
  if (state.t_ >= state.max_steps_) {
    throw ResourceError("walk support would leave the lattice at t = " + std::to_string(state.t_ + 1) +
                        "; increase max_steps");
  }
  const std::size_t lo = state.max_steps_ - state.t_;
  const std::size_t hi = state.max_steps_ + state.t_;
  auto& up = state.up_;
  auto& down = state.down_;
  // Reads touch parity t sites only, writes land on parity t+1 sites, which
  // are zero by the light-cone invariant, so the update can run in place.
  with_kernel(coin, [&](const auto& kernel) {
    for (std::size_t i = lo; i <= hi; i += 2) {
      const Complex u = up[i];
      const Complex d = down[i];
      up[i] = Complex{};
      down[i] = Complex{};
      up[i + 1] = kernel.up(u, d);
      down[i - 1] = kernel.down(u, d);
    }
  });
  ++state.t_;
}

}  // namespace qwalk
