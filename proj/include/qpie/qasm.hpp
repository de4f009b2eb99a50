#pragma once

// OpenQASM 3 export. Controlled gates use `ctrl @` modifiers, one per
// control, with control qubits listed ascending ahead of the target.

#include <array>
#include <charconv>
#include <string>

#include "qpie/circuit.hpp"

namespace qpie {

/// Shortest decimal form that parses back to the identical double.
[[nodiscard]] inline std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

[[nodiscard]] inline std::string export_qasm(const Circuit& circuit) {
  std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  out += "qubit[" + std::to_string(circuit.n_qubits()) + "] q;\n";
  for (const Gate& g : circuit.gates()) {
    for (std::size_t k = 0; k < g.controls.size(); ++k) out += "ctrl @ ";
    out += g.kind == GateKind::RY ? "ry(" + format_real(g.angle) + ") " : std::string("x ");
    for (Qubit c : g.controls) out += "q[" + std::to_string(c) + "], ";
    out += "q[" + std::to_string(g.target) + "];\n";
  }
  return out;
}

}  // namespace qpie
