#pragma once

// Test-only reference: the walk as an explicit product of dense
// (2L x 2L) step unitaries on a ring of L = 2T + 1 sites. Shares no code
// with the engine beyond the coin matrices it is handed.

#include <complex>
#include <cstddef>
#include <vector>

#include "qwalk/matrix2.hpp"

namespace oracle {

using qwalk::Complex;

class Dense {
 public:
  explicit Dense(std::size_t n) : n_(n), a_(n * n) {}
  static Dense identity(std::size_t n) {
    Dense d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1.0;
    return d;
  }
  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::size_t size() const { return n_; }

  friend Dense operator*(const Dense& x, const Dense& y) {
    Dense z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const Complex v = x(i, k);
        if (v == Complex{}) continue;
        for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

// Basis index of |s> (x) |k>, s = 0 (up) / 1 (down), k in [-T, T].
inline std::size_t basis(int s, long k, long t_max) {
  const long sites = 2 * t_max + 1;
  return static_cast<std::size_t>(s * sites + (k + t_max));
}

inline Dense step_unitary(const qwalk::Matrix2& coin, long t_max) {
  const long sites = 2 * t_max + 1;
  const std::size_t n = static_cast<std::size_t>(2 * sites);
  Dense c(n), shift(n);
  for (long k = -t_max; k <= t_max; ++k) {
    for (int r = 0; r < 2; ++r)
      for (int q = 0; q < 2; ++q) c(basis(r, k, t_max), basis(q, k, t_max)) = coin(r, q);
    const long right = k == t_max ? -t_max : k + 1;
    const long left = k == -t_max ? t_max : k - 1;
    shift(basis(0, right, t_max), basis(0, k, t_max)) = 1.0;
    shift(basis(1, left, t_max), basis(1, k, t_max)) = 1.0;
  }
  return shift * c;
}

/// Amplitudes after applying the coins in order to spinor (up, down) at k = 0.
inline std::vector<Complex> evolve(const std::vector<qwalk::Matrix2>& coins, Complex up, Complex down, long t_max) {
  const std::size_t n = static_cast<std::size_t>(2 * (2 * t_max + 1));
  Dense u = Dense::identity(n);
  for (const auto& c : coins) u = step_unitary(c, t_max) * u;
  std::vector<Complex> psi(n);
  const std::size_t iu = basis(0, 0, t_max), id = basis(1, 0, t_max);
  for (std::size_t r = 0; r < n; ++r) psi[r] = u(r, iu) * up + u(r, id) * down;
  return psi;
}

}  // namespace oracle
