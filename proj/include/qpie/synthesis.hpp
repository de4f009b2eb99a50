#pragma once

// State preparation for real statevectors.
//
// One qubit: RY(a0).
// Two qubits: RY(a0) on q0, RY(-a1) on q1 controlled by q0, RY(pi + a2) on
// q0 controlled by q1.
// n >= 3 qubits, with m = 2^(n-1) - 1:
//   (b) prepare angles a_0..a_{m-1} on qubits 0..n-2 recursively;
//   (c) RY(a_m) on qubit n-1 controlled by all of 0..n-2, which splits the
//       amplitude at index m between m and 2^n - 1;
//   (d) CNOTs from qubit n-1 onto each of 0..n-2, moving index 2^n - 1 to 2^(n-1);
//   (e) prepare angles a_{m+1}.. on qubits 0..n-2 recursively, every gate
//       additionally controlled by qubit n-1.

#include <algorithm>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpie/circuit.hpp"
#include "qpie/error.hpp"
#include "qpie/real_state.hpp"
#include "qpie/tolerance.hpp"

namespace qpie {

struct SynthOptions {
  bool prune = false;
  double prune_tol = tol::kPrune;
};

struct SynthReport {
  unsigned n_qubits = 0;
  std::size_t gate_count = 0;
  std::size_t pruned_count = 0;
  std::size_t max_control_arity = 0;
  unsigned recursion_depth = 0;

  friend bool operator==(const SynthReport&, const SynthReport&) = default;
};

struct SynthResult {
  Circuit circuit;
  SynthReport report;
};

struct PruneResult {
  Circuit circuit;
  std::size_t pruned_count = 0;
};

/// Gate count of the unpruned construction: T(1) = 1, T(2) = 3,
/// T(n) = 2 T(n-1) + n, i.e. 7 * 2^(n-2) - n - 2 for n >= 2.
[[nodiscard]] constexpr std::size_t unpruned_gate_count(unsigned n_qubits) noexcept {
  if (n_qubits <= 1) return n_qubits;
  return 7 * (std::size_t{1} << (n_qubits - 2)) - n_qubits - 2;
}

/// Gate offsets that delimit the top-level steps of an n >= 3 circuit:
/// [0, after_prefix) is step (b), then one step-(c) gate, then the step-(d)
/// CNOTs up to after_fanout, then step (e) up to total.
struct TopLevelStages {
  std::size_t after_prefix = 0;
  std::size_t after_split = 0;
  std::size_t after_fanout = 0;
  std::size_t total = 0;
};

[[nodiscard]] constexpr TopLevelStages top_level_stages(unsigned n_qubits) noexcept {
  TopLevelStages s;
  s.after_prefix = unpruned_gate_count(n_qubits - 1);
  s.after_split = s.after_prefix + 1;
  s.after_fanout = s.after_split + (n_qubits - 1);
  s.total = unpruned_gate_count(n_qubits);
  return s;
}

[[nodiscard]] inline Circuit synth_1q(double theta) {
  Circuit c(1);
  c.push_back(Gate::ry(theta, 0));
  return c;
}

[[nodiscard]] inline Circuit synth_2q(double theta1, double theta2, double theta3) {
  Circuit c(2);
  c.push_back(Gate::ry(theta1, 0));
  c.push_back(Gate::ry(-theta2, 1, {0}));
  c.push_back(Gate::ry(std::numbers::pi + theta3, 0, {1}));
  return c;
}

namespace detail {

inline Circuit synthesize_recursive(std::span<const double> angles, unsigned n, unsigned depth,
                                    unsigned& max_depth) {
  max_depth = std::max(max_depth, depth);
  if (n == 1) return synth_1q(angles[0]);
  if (n == 2) return synth_2q(angles[0], angles[1], angles[2]);

  const std::size_t half = (std::size_t{1} << (n - 1)) - 1;
  const Qubit last = n - 1;

  Circuit out(n);
  out.extend(synthesize_recursive(angles.subspan(0, half), n - 1, depth + 1, max_depth));

  std::vector<Qubit> all_lower(last);
  std::iota(all_lower.begin(), all_lower.end(), Qubit{0});
  out.push_back(Gate::ry(angles[half], last, std::move(all_lower)));

  for (Qubit q = 0; q < last; ++q) out.push_back(Gate::x(q, {last}));

  const Circuit upper = synthesize_recursive(angles.subspan(half + 1), n - 1, depth + 1, max_depth);
  out.extend(add_control(upper.widened(n), last));
  return out;
}

}  // namespace detail

/// Unpruned circuit for an explicit angle list; exposed so the recursion can
/// be exercised without going through to_angles.
[[nodiscard]] inline Circuit synthesize(const AngleList& angles) {
  unsigned max_depth = 0;
  return detail::synthesize_recursive(angles.values(), angles.n_qubits(), 0, max_depth);
}

/// Drops RY gates with |angle| <= tol. X gates and all other rotations are
/// kept in order; RY(2pi) is -I and is never dropped for small tol.
[[nodiscard]] inline PruneResult prune(const Circuit& circuit, double tol) {
  PruneResult result{Circuit(circuit.n_qubits()), 0};
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::RY && std::abs(g.angle) <= tol) {
      ++result.pruned_count;
      continue;
    }
    result.circuit.push_back(g);
  }
  return result;
}

[[nodiscard]] inline SynthResult synth(const RealState& state, const SynthOptions& options = {}) {
  if (options.prune && !(options.prune_tol >= 0.0)) {
    throw Error(ErrorCode::NonFiniteValue, "prune tolerance must be a nonnegative number");
  }
  const AngleList angles = to_angles(state);
  unsigned max_depth = 0;
  Circuit circuit = detail::synthesize_recursive(angles.values(), state.n_qubits(), 0, max_depth);

  SynthReport report;
  report.n_qubits = state.n_qubits();
  report.recursion_depth = max_depth;
  if (options.prune) {
    PruneResult pruned = prune(circuit, options.prune_tol);
    circuit = std::move(pruned.circuit);
    report.pruned_count = pruned.pruned_count;
  }
  report.gate_count = circuit.size();
  report.max_control_arity = stats(circuit).max_controls;
  return SynthResult{std::move(circuit), report};
}

}  // namespace qpie
