#include "qwalk/spin.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

SpinProductTrace make_trace(std::vector<Matrix2> products) {
  SpinProductTrace t;
  t.products = std::move(products);
  t.traces.reserve(t.products.size());
  t.determinants.reserve(t.products.size());
  for (const auto& m : t.products) {
    t.traces.push_back(m.trace());
    t.determinants.push_back(m.det());
  }
  return t;
}

namespace {

// U <- (U + U^{-dagger}) / 2 converges quadratically to the unitary polar factor.
Matrix2 polar_step(const Matrix2& m) {
  const Complex det = m.det();
  const Matrix2 inverse = (1.0 / det) * Matrix2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
  return 0.5 * (m + inverse.adjoint());
}

// b = phi a for some unit-modulus phi, read off at a's largest entry.
bool equal_up_to_phase(const Matrix2& a, const Matrix2& b, double tolerance) {
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(a.m[i]) > std::abs(a.m[pivot])) pivot = i;
  }
  if (std::abs(a.m[pivot]) == 0.0) return max_abs_diff(a, b) <= tolerance;
  const Complex phi = b.m[pivot] / a.m[pivot];
  if (std::abs(std::abs(phi) - 1.0) > tolerance) return false;
  return max_abs_diff(phi * a, b) <= tolerance;
}

}  // namespace

SpinProductTrace fibonacci_spin_products(const Coin& coin_a, const Coin& coin_b, std::size_t n_max) {
  if (n_max < 3) throw DomainError("n_max must be >= 3");
  std::vector<Matrix2> m;
  m.reserve(n_max + 1);
  m.push_back(coin_a.matrix());
  m.push_back(coin_a.matrix() * coin_b.matrix());
  for (std::size_t n = 1; n < n_max; ++n) m.push_back(polar_step(m[n] * m[n - 1]));
  return make_trace(std::move(m));
}

std::optional<std::size_t> detect_period(const SpinProductTrace& trace, std::size_t bound, double tolerance) {
  const std::size_t n_max = trace.n_max();
  if (trace.products.size() < 2 || bound < 1 || bound > n_max - 1) {
    throw DomainError("period bound " + std::to_string(bound) + " must lie in [1, n_max - 1] with n_max = " +
                      std::to_string(n_max));
  }
  const auto& m = trace.products;
  for (std::size_t p = 1; p <= bound; ++p) {
    const std::size_t last = std::min(p, n_max - p);
    bool periodic = true;
    for (std::size_t n = 0; n <= last && periodic; ++n) periodic = equal_up_to_phase(m[n], m[n + p], tolerance);
    if (periodic) return p;
  }
  return std::nullopt;
}

}  // namespace qwalk
