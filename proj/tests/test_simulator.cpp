#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qpie/simulator.hpp"
#include "qpie/synthesis.hpp"
#include "support/frozen.hpp"
#include "support/oracles.hpp"

namespace qpie {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ApplyGate, RyPiFlipsBasisState) {
  const RealState out = apply_gate(RealState({1.0, 0.0}), Gate::ry(kPi, 0));
  EXPECT_NEAR(out[0], 0.0, 1e-16);
  EXPECT_DOUBLE_EQ(out[1], 1.0);
}

TEST(ApplyGate, ControlledRyOnFirstQubitControl) {
  const double t1 = 1.3, t2 = 0.7;
  const RealState in({std::cos(t1 / 2), std::sin(t1 / 2), 0.0, 0.0});
  const RealState out = apply_gate(in, Gate::ry(-t2, 1, {0}));
  const std::vector<double> expected{std::cos(t1 / 2), std::sin(t1 / 2) * std::cos(t2 / 2), 0.0,
                                     -std::sin(t1 / 2) * std::sin(t2 / 2)};
  EXPECT_LE(testing::linf(out.amplitudes(), expected), 1e-15);

  const double t3 = 2.9;
  const RealState final_state = apply_gate(out, Gate::ry(kPi + t3, 0, {1}));
  EXPECT_LE(testing::linf(final_state.amplitudes(), testing::spherical_product(std::vector<double>{t1, t2, t3})),
            1e-15);
}

TEST(ApplyGate, IndexOutOfRange) {
  EXPECT_THROW((void)apply_gate(RealState({1.0, 0.0}), Gate::x(1)), Error);
  EXPECT_THROW((void)apply_gate(RealState({1.0, 0.0}), Gate::x(0, {3})), Error);
}

TEST(Run, EmptyCircuitIsGround) {
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(run(Circuit(n)), RealState::ground(n));
}

TEST(Run, PixelCircuit) {
  const Circuit c = synth_2q(testing::kPixelAngles[0], testing::kPixelAngles[1], testing::kPixelAngles[2]);
  EXPECT_LE(testing::linf(run(c).amplitudes(), testing::kPixelState), 1e-15);
}

TEST(Run, XCircuitsReachBasisStates) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 1 + trial % 5;
    Circuit c(n);
    for (int k = 0; k < 12; ++k) {
      Gate g = testing::random_gate(rng, n);
      c.push_back(Gate::x(g.target, g.controls));
    }
    int ones = 0;
    const RealState out = run(c);
    for (double a : out.amplitudes()) {
      if (a == 1.0) ++ones;
      else EXPECT_EQ(a, 0.0);
    }
    EXPECT_EQ(ones, 1);
  }
}

TEST(ApplyGate, MatchesDenseMatrix) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + trial % 4;
    const Gate g = testing::random_gate(rng, n);
    const RealState in(testing::random_unit_vector(rng, n, testing::StateFlavor::Signed));
    const auto expected = testing::mat_vec(testing::dense_matrix(g, n), in.amplitudes());
    EXPECT_LE(testing::linf(apply_gate(in, g).amplitudes(), expected), 1e-12);
  }
}

TEST(ApplyGate, PreservesNormAndInverts) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + trial % 6;
    Gate g = testing::random_gate(rng, n);
    if (g.kind != GateKind::RY) g = Gate::ry(1.234, g.target, g.controls);
    const RealState in(testing::random_unit_vector(rng, n, testing::StateFlavor::Signed));
    const RealState mid = apply_gate(in, g);
    const RealState back = apply_gate(mid, Gate::ry(-g.angle, g.target, g.controls));
    EXPECT_LE(max_abs_diff(back, in), 1e-12);
  }
}

TEST(MaxAbsDiff, Cases) {
  const RealState s({0.6, 0.8});
  EXPECT_EQ(max_abs_diff(s, s), 0.0);
  EXPECT_EQ(max_abs_diff(RealState({1.0, 0.0}), RealState({0.0, 1.0})), 1.0);
  try {
    (void)max_abs_diff(s, RealState::ground(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

}  // namespace
}  // namespace qpie
