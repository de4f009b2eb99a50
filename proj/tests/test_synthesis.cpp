#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "qpie/simulator.hpp"
#include "qpie/synthesis.hpp"
#include "support/frozen.hpp"
#include "support/oracles.hpp"

namespace qpie {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t recurrence(unsigned n) { return n == 1 ? 1 : n == 2 ? 3 : 2 * recurrence(n - 1) + n; }

std::vector<double> run_prefix(const Circuit& c, std::size_t count) {
  std::vector<double> amps(std::size_t{1} << c.n_qubits(), 0.0);
  amps[0] = 1.0;
  for (std::size_t k = 0; k < count; ++k) apply_gate(std::span<double>(amps), c.gates()[k]);
  return amps;
}

TEST(Synth1q, PreparesCosSin) {
  for (double theta : {0.0, kPi, kPi / 2, -1.0, 5.5}) {
    const Circuit c = synth_1q(theta);
    ASSERT_EQ(c.size(), 1u);
    const std::vector<double> expected{std::cos(theta / 2), std::sin(theta / 2)};
    EXPECT_LE(testing::linf(run(c).amplitudes(), expected), 1e-15);
  }
  EXPECT_NEAR(run(synth_1q(kPi / 2))[0], std::sqrt(0.5), 1e-15);
}

TEST(Synth2q, GateSequence) {
  const Circuit c = synth_2q(0.1, 0.2, 0.3);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.gates()[0], Gate::ry(0.1, 0));
  EXPECT_EQ(c.gates()[1], Gate::ry(-0.2, 1, {0}));
  EXPECT_EQ(c.gates()[2], Gate::ry(kPi + 0.3, 0, {1}));
}

TEST(Synth2q, Examples) {
  EXPECT_LE(testing::linf(run(synth_2q(0.0, 1.7, -2.4)).amplitudes(), std::vector<double>{1, 0, 0, 0}), 1e-15);
  EXPECT_LE(testing::linf(run(synth_2q(kPi, kPi, kPi)).amplitudes(), std::vector<double>{0, 0, 0, 1}), 1e-15);

  const RealState px(std::vector<double>(testing::kPixelState.begin(), testing::kPixelState.end()));
  const AngleList a = to_angles(px);
  const Circuit c = synth_2q(a[0], a[1], a[2]);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_LE(max_abs_diff(run(c), px), 1e-12);
}

TEST(Synth, UnprunedGateCountFollowsRecurrence) {
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_EQ(unpruned_gate_count(n), recurrence(n)) << n;
    std::mt19937_64 rng(n);
    const RealState s(testing::random_unit_vector(rng, n, testing::StateFlavor::Signed));
    const SynthResult r = synth(s);
    EXPECT_EQ(r.circuit.size(), recurrence(n)) << n;
    EXPECT_EQ(r.report.gate_count + r.report.pruned_count, unpruned_gate_count(n));
    EXPECT_EQ(r.report.max_control_arity, n >= 2 ? n - 1 : 0u);
    EXPECT_EQ(r.report.recursion_depth, n >= 2 ? n - 2 : 0u);
    EXPECT_EQ(r.report.n_qubits, n);
  }
  EXPECT_EQ(unpruned_gate_count(3), 9u);
  EXPECT_EQ(unpruned_gate_count(4), 22u);
}

TEST(Synth, ThreeQubitStructure) {
  std::mt19937_64 rng(99);
  const auto angles = testing::random_angles(rng, 3);
  const Circuit c = synthesize(AngleList(angles));
  ASSERT_EQ(c.size(), 9u);
  const auto& g = c.gates();
  EXPECT_EQ(g[0], Gate::ry(angles[0], 0));
  EXPECT_EQ(g[1], Gate::ry(-angles[1], 1, {0}));
  EXPECT_EQ(g[2], Gate::ry(kPi + angles[2], 0, {1}));
  EXPECT_EQ(g[3], Gate::ry(angles[3], 2, {0, 1}));
  EXPECT_EQ(g[4], Gate::x(0, {2}));
  EXPECT_EQ(g[5], Gate::x(1, {2}));
  EXPECT_EQ(g[6], Gate::ry(angles[4], 0, {2}));
  EXPECT_EQ(g[7], Gate::ry(-angles[5], 1, {0, 2}));
  EXPECT_EQ(g[8], Gate::ry(kPi + angles[6], 0, {1, 2}));
}

TEST(Synth, ThreeQubitCheckpoints) {
  std::mt19937_64 rng(4);
  const TopLevelStages st = top_level_stages(3);
  EXPECT_EQ(st.after_prefix, 3u);
  EXPECT_EQ(st.after_split, 4u);
  EXPECT_EQ(st.after_fanout, 6u);
  EXPECT_EQ(st.total, 9u);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_angles(rng, 3);
    const Circuit c = synthesize(AngleList(a));
    auto s = [&](int k) { return std::sin(a[k] / 2); };
    auto co = [&](int k) { return std::cos(a[k] / 2); };

    const std::vector<double> after_b{co(0), s(0) * co(1), s(0) * s(1) * co(2), s(0) * s(1) * s(2), 0, 0, 0, 0};
    const std::vector<double> after_c{co(0), s(0) * co(1), s(0) * s(1) * co(2), s(0) * s(1) * s(2) * co(3),
                                      0,     0,            0,                   s(0) * s(1) * s(2) * s(3)};
    const std::vector<double> after_d{co(0), s(0) * co(1), s(0) * s(1) * co(2), s(0) * s(1) * s(2) * co(3),
                                      s(0) * s(1) * s(2) * s(3), 0, 0, 0};
    EXPECT_LE(testing::linf(run_prefix(c, st.after_prefix), after_b), 1e-12);
    EXPECT_LE(testing::linf(run_prefix(c, st.after_split), after_c), 1e-12);
    EXPECT_LE(testing::linf(run_prefix(c, st.after_fanout), after_d), 1e-12);
    EXPECT_LE(testing::linf(run_prefix(c, st.total), testing::spherical_product(a)), 1e-12);
  }
}

TEST(Synth, ReproducesRandomStates) {
  std::mt19937_64 rng(31337);
  for (unsigned n = 1; n <= 10; ++n) {
    for (auto flavor : testing::kAllFlavors) {
      for (int trial = 0; trial < (n <= 6 ? 10 : 2); ++trial) {
        const RealState s(testing::random_unit_vector(rng, n, flavor));
        EXPECT_LE(max_abs_diff(run(synth(s).circuit), s), 1e-9) << "n=" << n;
      }
    }
  }
}

TEST(Synth, ArbitraryAngleListsAreReproduced) {
  std::mt19937_64 rng(8);
  for (unsigned n = 1; n <= 7; ++n) {
    const auto a = testing::random_angles(rng, n);
    EXPECT_LE(testing::linf(run(synthesize(AngleList(a))).amplitudes(), testing::spherical_product(a)), 1e-12);
  }
}

TEST(Synth, GroundStateAndPruning) {
  for (unsigned n = 1; n <= 6; ++n) {
    const RealState ground = RealState::ground(n);
    const AngleList a = to_angles(ground);
    for (double x : a.values()) EXPECT_EQ(x, 0.0);

    const SynthResult full = synth(ground);
    EXPECT_EQ(full.circuit.size(), unpruned_gate_count(n));
    EXPECT_LE(max_abs_diff(run(full.circuit), ground), 1e-12);

    const SynthResult pruned = synth(ground, SynthOptions{true, 1e-12});
    EXPECT_EQ(pruned.report.gate_count + pruned.report.pruned_count, unpruned_gate_count(n));
    EXPECT_LE(max_abs_diff(run(pruned.circuit), ground), 1e-12);
    for (const Gate& g : pruned.circuit.gates()) {
      if (g.kind == GateKind::RY) {
        EXPECT_GT(std::abs(g.angle), 1e-12);
      }
    }
    if (n == 1) {
      EXPECT_TRUE(pruned.circuit.empty());
    }
  }
}

TEST(Prune, Cases) {
  Circuit c(2);
  c.push_back(Gate::ry(0.0, 0)).push_back(Gate::x(1, {0}));
  const PruneResult r = prune(c, 1e-12);
  EXPECT_EQ(r.pruned_count, 1u);
  ASSERT_EQ(r.circuit.size(), 1u);
  EXPECT_EQ(r.circuit.gates()[0], Gate::x(1, {0}));

  const Circuit busy = synth_2q(0.3, 0.4, 0.5);
  const PruneResult none = prune(busy, 1e-12);
  EXPECT_EQ(none.pruned_count, 0u);
  EXPECT_EQ(none.circuit, busy);

  const Circuit negation = append(Circuit(1), Gate::ry(2 * kPi, 0));
  EXPECT_EQ(prune(negation, 1e-12).circuit, negation);
}

TEST(Prune, SoundOnSparseStates) {
  std::mt19937_64 rng(12);
  for (unsigned n = 1; n <= 8; ++n) {
    const RealState s(testing::random_unit_vector(rng, n, testing::StateFlavor::Sparse));
    const Circuit full = synth(s).circuit;
    const Circuit pruned = synth(s, SynthOptions{true, 1e-12}).circuit;
    EXPECT_LE(max_abs_diff(run(full), run(pruned)), 1e-12);
  }
}

TEST(Synth, RejectsNegativePruneTolerance) {
  EXPECT_THROW((void)synth(RealState::ground(2), SynthOptions{true, -1.0}), Error);
}

}  // namespace
}  // namespace qpie
