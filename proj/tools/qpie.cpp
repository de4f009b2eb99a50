// qpie: encode grayscale images as real statevectors and synthesize
// preparation circuits for them.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qpie/cli.hpp"

int main(int argc, char** argv) {
  using namespace qpie::cli;
  configure_logging();

  CLI::App app{"Real-amplitude image encoding and state-preparation circuit synthesis"};
  app.require_subcommand(1);

  std::string encode_image, encode_out;
  auto* encode = app.add_subcommand("encode", "Encode a PGM image as RealState JSON");
  encode->add_option("image", encode_image, "Input PGM (P2 or P5)")->required();
  encode->add_option("out", encode_out, "Output RealState JSON path")->required();

  SynthArgs synth_args;
  std::string synth_input, qasm_path, out_path, report_path;
  auto* synth = app.add_subcommand("synth", "Synthesize a circuit preparing the encoded state");
  synth->add_option("input", synth_input, "PGM image, RealState JSON, or JSON array of reals")->required();
  synth->add_flag("--prune,!--no-prune", synth_args.prune, "Drop rotations with |angle| <= tolerance (default on)");
  synth->add_option("--prune-tol", synth_args.prune_tol, "Pruning tolerance in radians")->check(CLI::NonNegativeNumber);
  synth->add_option("--qasm", qasm_path, "Write OpenQASM 3 to this path");
  synth->add_option("--out", out_path, "Write circuit JSON here instead of stdout");
  synth->add_option("--report", report_path, "Write the synthesis report JSON here");

  std::string verify_input, verify_circuit;
  double verify_tol = qpie::tol::kEndToEnd;
  auto* verify = app.add_subcommand("verify", "Simulate a circuit and compare it with the target state");
  verify->add_option("input", verify_input, "PGM image, RealState JSON, or JSON array of reals")->required();
  verify->add_option("circuit", verify_circuit, "Circuit JSON")->required();
  verify->add_option("--tol", verify_tol, "Maximum allowed L-infinity difference")->check(CLI::NonNegativeNumber);

  std::string stats_circuit;
  auto* stats = app.add_subcommand("stats", "Print gate statistics of a circuit as JSON");
  stats->add_option("circuit", stats_circuit, "Circuit JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kIoError;
  }

  if (encode->parsed()) return cmd_encode(encode_image, encode_out);
  if (synth->parsed()) {
    synth_args.input = synth_input;
    if (!qasm_path.empty()) synth_args.qasm = qasm_path;
    if (!out_path.empty()) synth_args.out = out_path;
    if (!report_path.empty()) synth_args.report = report_path;
    return cmd_synth(synth_args, std::cout);
  }
  if (verify->parsed()) return cmd_verify(verify_input, verify_circuit, verify_tol, std::cout);
  return cmd_stats(stats_circuit, std::cout);
}
