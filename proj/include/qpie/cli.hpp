#pragma once

// Command implementations behind the `qpie` tool. Each returns a process exit
// code: 0 success, 1 domain error, 2 I/O or format error. Machine-readable
// output goes to the supplied stream; diagnostics go through spdlog (stderr).

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "qpie/circuit.hpp"
#include "qpie/error.hpp"
#include "qpie/image.hpp"
#include "qpie/json.hpp"
#include "qpie/qasm.hpp"
#include "qpie/real_state.hpp"
#include "qpie/simulator.hpp"
#include "qpie/synthesis.hpp"
#include "qpie/tolerance.hpp"

namespace qpie::cli {

namespace fs = std::filesystem;

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kIoError = 2 };

[[nodiscard]] constexpr int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AllZeroInput:
    case ErrorCode::AllZeroImage:
    case ErrorCode::NotPowerOfTwo:
    case ErrorCode::NotUnitNorm:
    case ErrorCode::NonFiniteValue:
    case ErrorCode::InvalidAngleList:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::EmptyInput:
      return kDomainError;
    default:
      return kIoError;
  }
}

/// Routes spdlog to stderr at the level named by LOG_LEVEL
/// (error|warn|info|debug; default warn).
inline void configure_logging() {
  auto logger = spdlog::get("qpie");
  if (!logger) logger = spdlog::stderr_logger_st("qpie");
  logger->set_pattern("qpie: %l: %v");
  spdlog::set_default_logger(logger);

  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("LOG_LEVEL")) {
    const std::string_view name(env);
    if (name == "error") level = spdlog::level::err;
    else if (name == "warn") level = spdlog::level::warn;
    else if (name == "info") level = spdlog::level::info;
    else if (name == "debug") level = spdlog::level::debug;
    else spdlog::warn("ignoring unknown LOG_LEVEL '{}'", name);
  }
  spdlog::set_level(level);
}

[[nodiscard]] inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed for '" + path.string() + "'");
  return data;
}

inline void write_file(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

/// Loads a target state from a PGM image, a RealState JSON object, or a raw
/// JSON array of reals (normalized, not padded).
[[nodiscard]] inline RealState load_state_input(const fs::path& path) {
  const std::string data = read_file(path);
  const auto first = data.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && data[first] == 'P') return encode(load_pgm(data));

  const Json j = parse_json(data);
  if (j.is_array()) {
    std::vector<double> values;
    try {
      values = j.get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return normalize(values);
  }
  return state_from_json(j);
}

[[nodiscard]] inline Circuit load_circuit(const fs::path& path) { return circuit_from_json(parse_json(read_file(path))); }

namespace detail {

template <typename Fn>
int guarded(std::string_view command, Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    spdlog::error("{}: {}", command, e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    spdlog::error("{}: {}", command, e.what());
    return kIoError;
  }
}

}  // namespace detail

inline int cmd_encode(const fs::path& image_path, const fs::path& out_path) {
  return detail::guarded("encode", [&] {
    const GrayImage image = load_pgm(read_file(image_path));
    const RealState state = encode(image);
    write_file(out_path, serialize(to_json(state)));
    spdlog::info("encoded {}x{} image into {} qubits", image.rows(), image.cols(), state.n_qubits());
    return kSuccess;
  });
}

struct SynthArgs {
  fs::path input;
  bool prune = true;
  double prune_tol = tol::kPrune;
  std::optional<fs::path> qasm;
  std::optional<fs::path> out;
  std::optional<fs::path> report;
};

/// Writes circuit JSON to `args.out`, or to `stdout` when no path is given.
inline int cmd_synth(const SynthArgs& args, std::ostream& stdout_stream) {
  return detail::guarded("synth", [&] {
    const RealState state = load_state_input(args.input);
    const SynthResult result = synth(state, SynthOptions{args.prune, args.prune_tol});

    const std::string circuit_json = serialize(to_json(result.circuit));
    if (args.out) write_file(*args.out, circuit_json);
    else stdout_stream << circuit_json;
    if (args.qasm) write_file(*args.qasm, export_qasm(result.circuit));
    if (args.report) write_file(*args.report, serialize(to_json(result.report)));

    spdlog::info("synthesized {} gates on {} qubits ({} pruned)", result.report.gate_count,
                 result.report.n_qubits, result.report.pruned_count);
    return kSuccess;
  });
}

/// Prints {"max_abs_diff", "tol", "ok"}; exit 0 iff the simulated circuit
/// reproduces the target state within `tol`.
inline int cmd_verify(const fs::path& input, const fs::path& circuit_path, double tolerance,
                      std::ostream& stdout_stream) {
  return detail::guarded("verify", [&] {
    const RealState target = load_state_input(input);
    const Circuit circuit = load_circuit(circuit_path);
    const double diff = max_abs_diff(run(circuit), target);
    const bool ok = diff <= tolerance;

    Json j;
    j["max_abs_diff"] = diff;
    j["tol"] = tolerance;
    j["ok"] = ok;
    stdout_stream << j.dump() << "\n";
    if (!ok) spdlog::warn("verify: max_abs_diff {} exceeds tolerance {}", diff, tolerance);
    return ok ? kSuccess : kDomainError;
  });
}

inline int cmd_stats(const fs::path& circuit_path, std::ostream& stdout_stream) {
  return detail::guarded("stats", [&] {
    stdout_stream << to_json(stats(load_circuit(circuit_path))).dump() << "\n";
    return kSuccess;
  });
}

}  // namespace qpie::cli
