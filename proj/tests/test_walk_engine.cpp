#include <cmath>
#include <numbers>

#include "dense_oracle.hpp"
#include "doctest.h"
#include "qwalk/errors.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

const Complex kI{0.0, 1.0};
const double kR = 1.0 / std::sqrt(2.0);

bool near(Complex a, Complex b, double tol = 1e-15) { return std::abs(a - b) <= tol; }

void check_cone(const WalkState& s) {
  const auto t = static_cast<std::int64_t>(s.time());
  const auto m = static_cast<std::int64_t>(s.max_steps());
  for (std::int64_t k = -m; k <= m; ++k) {
    if (std::llabs(k) > t || ((k + t) % 2 != 0)) {
      REQUIRE(s.up(k) == Complex{});
      REQUIRE(s.down(k) == Complex{});
    }
  }
}

}  // namespace

TEST_CASE("init_state") {
  const auto s = init_state(100);
  CHECK(s.time() == 0);
  CHECK(s.probability(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(near(s.up(0), kR));
  CHECK(near(s.down(0), kI * kR));
  const auto up = init_state(100, InitialState{{1.0, 0.0}});
  CHECK(up.up(0) == Complex(1.0));
  CHECK(up.down(0) == Complex{});
  CHECK_NOTHROW(init_state(100, InitialState{{0.6, Complex(0.0, 0.8)}}));
  CHECK_THROWS_AS(init_state(100, InitialState{{0.6, 0.6}}), ValidationError);
  CHECK_THROWS_AS(init_state(0), ValidationError);
}

TEST_CASE("apply_coin") {
  auto s = init_state(4);
  apply_coin(s, build_coin(CoinFamily::GeneralizedHadamard, 0.0));
  CHECK(near(s.up(0), kR));
  CHECK(near(s.down(0), -kI * kR));

  auto h = init_state(4);
  apply_coin(h, build_coin(CoinFamily::GeneralizedHadamard, pi / 4));
  CHECK(near(h.up(0), Complex(0.5, 0.5)));
  CHECK(near(h.down(0), Complex(0.5, -0.5)));
  CHECK(h.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h.time() == 0);
}

TEST_CASE("apply_shift") {
  auto up = init_state(3, InitialState{{1.0, 0.0}});
  apply_shift(up);
  CHECK(up.up(1) == Complex(1.0));
  CHECK(up.up(0) == Complex{});
  CHECK(up.time() == 1);
  auto down = init_state(3, InitialState{{0.0, 1.0}});
  apply_shift(down);
  CHECK(down.down(-1) == Complex(1.0));
  check_cone(down);
  apply_shift(down);
  apply_shift(down);
  CHECK(down.down(-3) == Complex(1.0));
  CHECK_THROWS_AS(apply_shift(down), ResourceError);
  CHECK_THROWS_AS(step(down, build_coin(CoinFamily::Rotation, 0.1)), ResourceError);
}

TEST_CASE("one Hadamard step from the symmetric spinor") {
  auto s = init_state(10);
  step(s, build_coin(CoinFamily::GeneralizedHadamard, pi / 4));
  CHECK(near(s.up(1), Complex(0.5, 0.5)));
  CHECK(near(s.down(-1), Complex(0.5, -0.5)));
  CHECK(s.probability(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.probability(-1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("fused step is bit-identical to coin then shift") {
  for (double angle : {0.0, 0.3, pi / 4, 1.2, pi / 2}) {
    auto fused = init_state(60);
    auto split = init_state(60);
    for (int t = 0; t < 60; ++t) {
      const Coin c(CoinFamily::GeneralizedHadamard, std::fmod(angle + 0.01 * t, pi / 2));
      step(fused, c);
      apply_coin(split, c);
      apply_shift(split);
    }
    const auto a = fused.up_amplitudes(), b = split.up_amplitudes();
    const auto c = fused.down_amplitudes(), d = split.down_amplitudes();
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
    CHECK(std::equal(c.begin(), c.end(), d.begin()));
  }
}

TEST_CASE("degenerate coins: sigma_z is ballistic, sigma_x is confined") {
  const auto z = evolve(SequenceSpec{.alpha_a = 0.0}, 200);
  for (std::size_t i = 0; i < z.sigma.size(); ++i) {
    CHECK(z.sigma.sigma[i] == doctest::Approx(static_cast<double>(z.sigma.t[i])).epsilon(1e-12));
  }
  CHECK(z.final_state.probability(200) == doctest::Approx(0.5));
  CHECK(z.final_state.probability(-200) == doctest::Approx(0.5));

  auto x = init_state(200);
  const Coin sx(CoinFamily::GeneralizedHadamard, pi / 2);
  for (int t = 1; t <= 200; ++t) {
    step(x, sx);
    for (std::int64_t k = -t; k <= t; ++k) {
      if (std::llabs(k) > 1) REQUIRE(x.probability(k) == 0.0);
    }
    if (t % 2 == 0) CHECK(x.probability(0) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("light cone and parity hold after every step") {
  for (auto kind : {SequenceKind::Fibonacci, SequenceKind::RandomBinary, SequenceKind::RandomContinuous}) {
    const SequenceSpec spec{.kind = kind, .alpha_a = 0.9, .alpha_b = 0.2, .seed = 3};
    const LetterStream stream(spec);
    auto s = init_state(80);
    for (std::uint64_t i = 0; i < 80; ++i) {
      step(s, Coin(spec.family, stream.angle(i)));
      check_cone(s);
    }
  }
}

TEST_CASE("norm is preserved over 10^4 steps for every sequence kind") {
  for (auto kind : {SequenceKind::Constant, SequenceKind::PeriodicApproximant, SequenceKind::Fibonacci,
                    SequenceKind::SilverMean, SequenceKind::RandomBinary, SequenceKind::RandomContinuous}) {
    const SequenceSpec spec{.kind = kind, .approximant_order = 3, .alpha_a = pi / 3, .alpha_b = pi / 6, .seed = 11};
    RecordOptions rec;
    rec.sigma_every = 500;
    const auto r = evolve(spec, 10000, {}, rec);
    for (double n : r.norm) CHECK(std::abs(n - 1.0) < 1e-10);
  }
}

TEST_CASE("constant coins give mirror-symmetric distributions") {
  for (int i = 0; i <= 10; ++i) {
    auto s = init_state(100);
    const Coin c(CoinFamily::GeneralizedHadamard, pi / 2 * i / 10.0);
    for (int t = 1; t <= 100; ++t) {
      step(s, c);
      for (std::int64_t k = 1; k <= t; ++k) REQUIRE(std::abs(s.probability(k) - s.probability(-k)) < 1e-10);
    }
  }
}

TEST_CASE("evolve is deterministic") {
  const SequenceSpec spec{.kind = SequenceKind::RandomContinuous, .width = 0.5, .seed = 77};
  const auto a = evolve(spec, 500);
  const auto b = evolve(spec, 500);
  CHECK(a.sigma.sigma == b.sigma.sigma);
  CHECK(a.sigma.t.front() == 0);
  CHECK(a.sigma.t.back() == 500);
}

TEST_CASE("evolve records snapshots and cadence") {
  RecordOptions rec;
  rec.sigma_every = 7;
  rec.snapshots = {0, 10, 50};
  const auto r = evolve(SequenceSpec{}, 50, {}, rec);
  CHECK(r.sigma.t == std::vector<std::size_t>{0, 7, 14, 21, 28, 35, 42, 49, 50});
  REQUIRE(r.snapshots.size() == 3);
  CHECK(r.snapshots[1].t == 10);
  CHECK(r.snapshots[1].p.size() == 21);
  rec.snapshots = {51};
  CHECK_THROWS_AS(evolve(SequenceSpec{}, 50, {}, rec), ValidationError);
}

TEST_CASE("evolve matches the dense global-unitary product for T <= 12") {
  for (auto kind : {SequenceKind::Constant, SequenceKind::Fibonacci, SequenceKind::SilverMean,
                    SequenceKind::RandomBinary, SequenceKind::RandomContinuous}) {
    for (long steps : {1L, 5L, 12L}) {
      const SequenceSpec spec{.kind = kind, .alpha_a = 1.1, .alpha_b = 0.35, .width = 0.6, .seed = 5};
      const LetterStream stream(spec);
      std::vector<Matrix2> coins;
      for (long i = 0; i < steps; ++i) coins.push_back(Coin(spec.family, stream.angle(static_cast<std::uint64_t>(i))).matrix());
      const InitialState init{{0.6, Complex(0.0, 0.8)}};
      const auto psi = oracle::evolve(coins, init.spinor.up, init.spinor.down, steps);
      const auto r = evolve(spec, static_cast<std::size_t>(steps), init);
      for (long k = -steps; k <= steps; ++k) {
        CHECK(std::abs(r.final_state.up(k) - psi[oracle::basis(0, k, steps)]) < 1e-10);
        CHECK(std::abs(r.final_state.down(k) - psi[oracle::basis(1, k, steps)]) < 1e-10);
      }
    }
  }
}
