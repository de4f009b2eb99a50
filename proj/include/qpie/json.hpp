#pragma once

// JSON forms of RealState, Circuit and SynthReport. Doubles are written in
// shortest round-trip form, so parse(serialize(x)) is bit-identical.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpie/circuit.hpp"
#include "qpie/error.hpp"
#include "qpie/real_state.hpp"
#include "qpie/synthesis.hpp"

namespace qpie {

using Json = nlohmann::ordered_json;

[[nodiscard]] inline Json to_json(const RealState& state) {
  Json j;
  j["n_qubits"] = state.n_qubits();
  j["amplitudes"] = std::vector<double>(state.amplitudes().begin(), state.amplitudes().end());
  return j;
}

[[nodiscard]] inline Json to_json(const Gate& gate) {
  Json j;
  if (gate.kind == GateKind::RY) {
    j["kind"] = "ry";
    j["angle"] = gate.angle;
  } else {
    j["kind"] = "x";
  }
  j["target"] = gate.target;
  j["controls"] = gate.controls;
  return j;
}

[[nodiscard]] inline Json to_json(const Circuit& circuit) {
  Json j;
  j["n_qubits"] = circuit.n_qubits();
  Json gates = Json::array();
  for (const Gate& g : circuit.gates()) gates.push_back(to_json(g));
  j["gates"] = std::move(gates);
  return j;
}

[[nodiscard]] inline Json to_json(const SynthReport& report) {
  Json j;
  j["n_qubits"] = report.n_qubits;
  j["gate_count"] = report.gate_count;
  j["pruned_count"] = report.pruned_count;
  j["max_control_arity"] = report.max_control_arity;
  j["recursion_depth"] = report.recursion_depth;
  return j;
}

[[nodiscard]] inline Json to_json(const CircuitStats& s) {
  Json j;
  j["gate_count"] = s.gate_count;
  j["ry"] = s.ry;
  j["x"] = s.x;
  j["max_controls"] = s.max_controls;
  return j;
}

namespace detail {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace detail

/// Validates every RealState invariant, including n_qubits matching the length.
[[nodiscard]] inline RealState state_from_json(const Json& j) {
  const auto n = detail::field<unsigned>(j, "n_qubits");
  auto amps = detail::field<std::vector<double>>(j, "amplitudes");
  if (n >= 8 * sizeof(std::size_t) || amps.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::ParseError, "amplitude count does not match n_qubits");
  }
  return RealState(std::move(amps));
}

[[nodiscard]] inline Gate gate_from_json(const Json& j) {
  const auto kind = detail::field<std::string>(j, "kind");
  const auto target = detail::field<Qubit>(j, "target");
  auto controls = detail::field<std::vector<Qubit>>(j, "controls");
  if (kind == "ry") return Gate::ry(detail::field<double>(j, "angle"), target, std::move(controls));
  if (kind == "x") return Gate::x(target, std::move(controls));
  throw Error(ErrorCode::ParseError, "unknown gate kind '" + kind + "'");
}

[[nodiscard]] inline Circuit circuit_from_json(const Json& j) {
  Circuit c(detail::field<unsigned>(j, "n_qubits"));
  const Json& gates = j.contains("gates") ? j.at("gates") : throw Error(ErrorCode::ParseError, "missing field 'gates'");
  if (!gates.is_array()) throw Error(ErrorCode::ParseError, "'gates' is not an array");
  for (const Json& g : gates) c.push_back(gate_from_json(g));
  return c;
}

[[nodiscard]] inline std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

[[nodiscard]] inline Json parse_json(const std::string& text) { return detail::parse_text(text); }

}  // namespace qpie
