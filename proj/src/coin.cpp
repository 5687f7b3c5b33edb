#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string_view to_string(CoinFamily family) {
  switch (family) {
    case CoinFamily::GeneralizedHadamard:
      return "hadamard";
    case CoinFamily::Rotation:
      return "rotation";
  }
  return "unknown";
}

CoinFamily parse_coin_family(std::string_view name) {
  if (name == "hadamard" || name == "generalized-hadamard") return CoinFamily::GeneralizedHadamard;
  if (name == "rotation") return CoinFamily::Rotation;
  throw DomainError("unknown coin family '" + std::string(name) + "'");
}

namespace {

// Closed-form cos/sin at the exact endpoints so that sigma_z, sigma_x and the
// identity rotation come out with exact zeros instead of 6e-17 residues.
void exact_cos_sin(double angle, double& c, double& s) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (angle == 0.0) {
    c = 1.0;
    s = 0.0;
  } else if (angle == half_pi) {
    c = 0.0;
    s = 1.0;
  } else {
    c = std::cos(angle);
    s = std::sin(angle);
  }
}

}  // namespace

Coin::Coin(CoinFamily family, double angle) : family_(family), angle_(angle), real_(true) {
  if (!std::isfinite(angle)) throw DomainError("coin angle must be finite");
  double c = 0.0;
  double s = 0.0;
  if (family == CoinFamily::GeneralizedHadamard) {
    if (angle < 0.0 || angle > std::numbers::pi / 2) {
      throw DomainError("coin angle " + std::to_string(angle) +
                        " outside [0, pi/2] for the generalized Hadamard family");
    }
    exact_cos_sin(angle, c, s);
    matrix_ = Matrix2(c, s, s, -c);
  } else {
    exact_cos_sin(angle, c, s);
    matrix_ = Matrix2(c, -s, s, c);
  }
}

Coin build_coin(CoinFamily family, double angle) { return Coin(family, angle); }

}  // namespace qwalk
