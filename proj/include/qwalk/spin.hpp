#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/matrix2.hpp"

namespace qwalk {

/// Spin-sector operator products M_0 .. M_{n_max} with per-n trace and determinant.
struct SpinProductTrace {
  std::vector<Matrix2> products;
  std::vector<Complex> traces;
  std::vector<Complex> determinants;

  std::size_t n_max() const { return products.empty() ? 0 : products.size() - 1; }
};

/// Wraps an arbitrary matrix sequence (used for hand-built sequences).
SpinProductTrace make_trace(std::vector<Matrix2> products);

/// M_0 = A, M_1 = A B, M_{n+1} = M_n M_{n-1} for n < n_max. Each product is
/// projected back onto U(2) with one polar Newton step, since the recursion
/// amplifies rounding errors geometrically.
SpinProductTrace fibonacci_spin_products(const Coin& coin_a, const Coin& coin_b, std::size_t n_max);

/// Smallest p in [1, bound] such that M_{n+p} = phi_n M_n, |phi_n| = 1, for
/// n = 0 .. min(p, n_max - p), comparing entries within `tolerance`.
/// Requires bound <= n_max - 1 (DomainError otherwise).
std::optional<std::size_t> detect_period(const SpinProductTrace& trace, std::size_t bound = 64,
                                         double tolerance = 1e-8);

}  // namespace qwalk
