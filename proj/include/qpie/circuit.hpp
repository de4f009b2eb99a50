#pragma once

// Circuit model for the real gate family: Y rotations and NOT gates, each
// with any number of positive-polarity controls. Qubit 0 is the least
// significant bit of a statevector index.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qpie/error.hpp"

namespace qpie {

using Qubit = std::uint32_t;

enum class GateKind { RY, X };

struct Gate {
  GateKind kind = GateKind::X;
  double angle = 0.0;  ///< radians; always 0 for X
  Qubit target = 0;
  std::vector<Qubit> controls;  ///< strictly ascending

  /// Controls may be given in any order; they are stored sorted.
  static Gate ry(double angle, Qubit target, std::vector<Qubit> controls = {}) {
    if (!std::isfinite(angle)) throw Error(ErrorCode::NonFiniteValue, "rotation angle is not finite");
    return make(GateKind::RY, angle, target, std::move(controls));
  }

  static Gate x(Qubit target, std::vector<Qubit> controls = {}) {
    return make(GateKind::X, 0.0, target, std::move(controls));
  }

  [[nodiscard]] bool is_controlled_by(Qubit q) const {
    return std::binary_search(controls.begin(), controls.end(), q);
  }

  /// Largest qubit index the gate touches.
  [[nodiscard]] Qubit max_index() const { return controls.empty() ? target : std::max(target, controls.back()); }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  static Gate make(GateKind kind, double angle, Qubit target, std::vector<Qubit> controls) {
    std::sort(controls.begin(), controls.end());
    if (std::adjacent_find(controls.begin(), controls.end()) != controls.end()) {
      throw Error(ErrorCode::ControlCollision, "duplicate control qubit");
    }
    if (std::binary_search(controls.begin(), controls.end(), target)) {
      throw Error(ErrorCode::ControlEqualsTarget, "qubit " + std::to_string(target) + " is both control and target");
    }
    return Gate{kind, angle, target, std::move(controls)};
  }
};

class Circuit {
 public:
  explicit Circuit(unsigned n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) throw Error(ErrorCode::IndexOutOfRange, "circuit needs at least one qubit");
  }

  [[nodiscard]] unsigned n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
  [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
  [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

  /// Appends in place after validating the gate against this register.
  Circuit& push_back(Gate gate) {
    if (gate.max_index() >= n_qubits_) {
      throw Error(ErrorCode::IndexOutOfRange, "gate touches qubit " + std::to_string(gate.max_index()) +
                                                  " of a " + std::to_string(n_qubits_) + "-qubit circuit");
    }
    if (gate.is_controlled_by(gate.target)) {
      throw Error(ErrorCode::ControlEqualsTarget, "gate controls its own target");
    }
    if (std::adjacent_find(gate.controls.begin(), gate.controls.end(), std::greater_equal<>{}) !=
        gate.controls.end()) {
      throw Error(ErrorCode::ControlCollision, "controls are not strictly ascending");
    }
    gates_.push_back(std::move(gate));
    return *this;
  }

  /// Appends every gate of `other`, which must fit in this register.
  Circuit& extend(const Circuit& other) {
    gates_.reserve(gates_.size() + other.size());
    for (const Gate& g : other.gates()) push_back(g);
    return *this;
  }

  /// Same gates on a register of `n_qubits` >= current size.
  [[nodiscard]] Circuit widened(unsigned n_qubits) const {
    if (n_qubits < n_qubits_) throw Error(ErrorCode::IndexOutOfRange, "cannot shrink a circuit register");
    Circuit out(n_qubits);
    out.gates_ = gates_;
    return out;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned n_qubits_;
  std::vector<Gate> gates_;
};

[[nodiscard]] inline Circuit append(Circuit circuit, Gate gate) {
  circuit.push_back(std::move(gate));
  return circuit;
}

/// Adds `control` to every gate, keeping gate order.
[[nodiscard]] inline Circuit add_control(const Circuit& circuit, Qubit control) {
  if (control >= circuit.n_qubits()) {
    throw Error(ErrorCode::IndexOutOfRange, "control qubit " + std::to_string(control) + " out of range");
  }
  Circuit out(circuit.n_qubits());
  for (Gate g : circuit.gates()) {
    if (g.target == control || g.is_controlled_by(control)) {
      throw Error(ErrorCode::ControlCollision,
                  "qubit " + std::to_string(control) + " is already used by a gate in the circuit");
    }
    g.controls.insert(std::upper_bound(g.controls.begin(), g.controls.end(), control), control);
    out.push_back(std::move(g));
  }
  return out;
}

[[nodiscard]] inline std::size_t gate_count(const Circuit& circuit) noexcept { return circuit.size(); }

struct CircuitStats {
  std::size_t gate_count = 0;
  std::size_t ry = 0;
  std::size_t x = 0;
  std::size_t max_controls = 0;

  friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
};

[[nodiscard]] inline CircuitStats stats(const Circuit& circuit) {
  CircuitStats s;
  s.gate_count = circuit.size();
  for (const Gate& g : circuit.gates()) {
    (g.kind == GateKind::RY ? s.ry : s.x) += 1;
    s.max_controls = std::max(s.max_controls, g.controls.size());
  }
  return s;
}

}  // namespace qpie
