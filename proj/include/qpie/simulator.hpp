#pragma once

// Dense real-statevector simulator for the RY/X gate family. This is the
// verification path for synthesized circuits; it is not a general simulator.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qpie/circuit.hpp"
#include "qpie/error.hpp"
#include "qpie/real_state.hpp"

namespace qpie {

/// Applies `gate` in place to a raw amplitude buffer of length 2^n.
/// For each index pair (i0, i0 + 2^target) with the target bit of i0 clear
/// and every control bit set, RY rotates the pair and X swaps it.
inline void apply_gate(std::span<double> amps, const Gate& gate) {
  const std::size_t dim = amps.size();
  if (gate.max_index() >= 64 || (std::size_t{1} << gate.max_index()) >= dim) {
    throw Error(ErrorCode::IndexOutOfRange,
                "gate touches qubit " + std::to_string(gate.max_index()) + " of a " +
                    std::to_string(qubits_for_dimension(dim)) + "-qubit state");
  }
  const std::size_t stride = std::size_t{1} << gate.target;
  std::size_t control_mask = 0;
  for (Qubit c : gate.controls) control_mask |= std::size_t{1} << c;

  const double cos_half = gate.kind == GateKind::RY ? std::cos(gate.angle / 2.0) : 0.0;
  const double sin_half = gate.kind == GateKind::RY ? std::sin(gate.angle / 2.0) : 0.0;

  for (std::size_t i0 = 0; i0 < dim; ++i0) {
    if ((i0 & stride) != 0 || (i0 & control_mask) != control_mask) continue;
    const std::size_t i1 = i0 | stride;
    if (gate.kind == GateKind::X) {
      std::swap(amps[i0], amps[i1]);
    } else {
      const double a0 = amps[i0];
      const double a1 = amps[i1];
      amps[i0] = cos_half * a0 - sin_half * a1;
      amps[i1] = sin_half * a0 + cos_half * a1;
    }
  }
}

[[nodiscard]] inline RealState apply_gate(const RealState& state, const Gate& gate) {
  std::vector<double> amps(state.amplitudes().begin(), state.amplitudes().end());
  apply_gate(std::span<double>(amps), gate);
  return RealState(std::move(amps));
}

/// Runs `circuit` on |0...0>.
[[nodiscard]] inline RealState run(const Circuit& circuit) {
  std::vector<double> amps(std::size_t{1} << circuit.n_qubits(), 0.0);
  amps[0] = 1.0;
  for (const Gate& g : circuit.gates()) apply_gate(std::span<double>(amps), g);
  return RealState(std::move(amps));
}

/// L-infinity distance between two states of equal qubit count.
[[nodiscard]] inline double max_abs_diff(const RealState& a, const RealState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw Error(ErrorCode::DimensionMismatch, "states have " + std::to_string(a.n_qubits()) + " and " +
                                                  std::to_string(b.n_qubits()) + " qubits");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.dimension(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace qpie
