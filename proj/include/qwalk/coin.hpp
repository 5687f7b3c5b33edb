#pragma once

#include <string_view>

#include "qwalk/matrix2.hpp"

namespace qwalk {

enum class CoinFamily {
  GeneralizedHadamard,  ///< [[cos a, sin a], [sin a, -cos a]], a in [0, pi/2]
  Rotation,             ///< [[cos a, -sin a], [sin a, cos a]], any real a
};

std::string_view to_string(CoinFamily family);
CoinFamily parse_coin_family(std::string_view name);

/// A 2x2 unitary acting on the spin sector, fixed at construction.
class Coin {
 public:
  Coin(CoinFamily family, double angle);

  CoinFamily family() const { return family_; }
  double angle() const { return angle_; }
  const Matrix2& matrix() const { return matrix_; }

  /// True when every matrix entry has zero imaginary part (both built-in families).
  bool is_real() const { return real_; }

 private:
  CoinFamily family_;
  double angle_;
  Matrix2 matrix_;
  bool real_;
};

/// Throws DomainError if the angle is not finite or, for the generalized
/// Hadamard family, falls outside [0, pi/2].
Coin build_coin(CoinFamily family, double angle);

}  // namespace qwalk
