#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Matrix2 {
  std::array<Complex, 4> m{};

  constexpr Matrix2() = default;
  constexpr Matrix2(Complex a00, Complex a01, Complex a10, Complex a11) : m{a00, a01, a10, a11} {}

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  constexpr Complex operator()(int row, int col) const { return m[2 * row + col]; }
  constexpr Complex& operator()(int row, int col) { return m[2 * row + col]; }

  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
  Complex trace() const { return m[0] + m[3]; }

  Matrix2 adjoint() const {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
  }

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
            a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]};
  }
  friend Matrix2 operator*(Complex s, const Matrix2& a) {
    return {s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]};
  }
  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]};
  }
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]};
  }
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

/// Entrywise distance of M^dagger M from the identity.
inline double unitarity_defect(const Matrix2& a) {
  return max_abs_diff(a.adjoint() * a, Matrix2::identity());
}

}  // namespace qwalk
