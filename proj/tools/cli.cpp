// Copyright 2026 The mbqc-control Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "mbqc/compiler.hpp"
#include "mbqc/error.hpp"
#include "mbqc/simulator.hpp"
#include "mbqc/timing.hpp"
#include "mbqc/trace.hpp"
#include "mbqc/verifier.hpp"

namespace mbqc::cli {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct CompileArgs {
  std::string circuit;
  std::string rom_out;
  std::string theta_out;
  std::string stimulus_out;
  std::string outcomes;
  bool final_z = false;
};

struct SimulateArgs {
  std::string circuit;
  std::uint64_t seed = 0;
  std::string forced;
  std::string trace_out;
  bool final_z = false;
};

struct VerifyArgs {
  std::vector<std::string> branches{"sample", "256"};
  std::uint64_t seed = 0;
  int perturb_column = -1;
  std::string report_out;
};

struct TimingArgs {
  double freq = 0.0;
  double n_eff = 2.4;
  std::optional<double> t_logic;
  std::vector<double> phases{220.0, 300.0};
  double t_co = 0.0;
  double t_su = 0.0;
  double t_internal = 0.0;
  double hold = 0.0;
  unsigned long rows = 0;
  bool serial = false;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int cmd_compile(const CompileArgs& a, std::ostream& out) {
  const Circuit circuit = read_circuit_file(a.circuit);
  const ProgramImage image = compile(circuit, {a.final_z});
  emit(a.rom_out, emit_rom(image), out);
  if (!a.theta_out.empty()) write_text_file(a.theta_out, emit_theta_table(image));
  if (!a.stimulus_out.empty()) {
    std::optional<std::vector<std::vector<bit_t>>> m;
    if (!a.outcomes.empty()) m = parse_outcomes(read_text_file(a.outcomes));
    if (m && (m->size() != image.n_rows ||
              (image.n_rows && m->front().size() != image.total_rounds))) {
      throw ContractViolation("outcome file does not match the program shape");
    }
    write_text_file(a.stimulus_out, emit_trace_stimulus(image, m));
  }
  return kOk;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Circuit circuit = read_circuit_file(a.circuit);
  const ProgramImage image = compile(circuit, {a.final_z});
  std::optional<std::vector<std::vector<bit_t>>> forced;
  if (!a.forced.empty()) forced = parse_outcomes(read_text_file(a.forced));
  const RunResult run = run_mbqc(image, a.seed, forced);
  if (!a.trace_out.empty()) emit(a.trace_out, write_trace(run.trace), out);
  const StateVector reference = run_gate_model(circuit);
  const double f = fidelity_up_to_phase(run.corrected_state, reference);
  out << "fidelity=" << fmt("%.12f", f) << '\n';
  return f >= 1.0 - 1e-9 ? kOk : kCheckFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  verifier::BranchOptions opts;
  opts.seed = a.seed;
  if (a.branches.empty()) throw ContractViolation("--branches needs 'all' or 'sample [N]'");
  if (a.branches[0] == "all") {
    if (a.branches.size() != 1) throw ContractViolation("--branches all takes no count");
    opts.sample = 0;
  } else if (a.branches[0] == "sample") {
    opts.sample = 256;
    if (a.branches.size() == 2) {
      std::size_t used = 0;
      const unsigned long n = std::stoul(a.branches[1], &used);
      if (used != a.branches[1].size() || n == 0 || n > verifier::kBranches) {
        throw ContractViolation("sample size must be in 1.." + std::to_string(verifier::kBranches));
      }
      opts.sample = static_cast<unsigned>(n);
    }
  } else {
    throw ContractViolation("--branches must be 'all' or 'sample [N]'");
  }
  const verifier::ClusterGraph graph =
      a.perturb_column >= 0 ? verifier::cnot_graph(static_cast<unsigned>(a.perturb_column))
                            : verifier::cnot_graph();

  std::ostringstream rep;
  bool ok = true;
  rep << "equation\tproduct\texpected\texpectation\tpass\n";
  const verifier::EigenReport eig = verifier::check_correl_products(graph);
  for (const auto& e : eig.equations) {
    rep << e.name << '\t' << e.product.to_string() << '\t' << e.expected.to_string() << '\t'
        << fmt("%.12f", e.expectation) << '\t' << (e.pass ? "PASS" : "FAIL") << '\n';
    ok = ok && e.pass;
  }

  rep << "input\tbranches\tskipped\tfidelity_pass\tbyproduct_pass\tmin_fidelity\tpass\n";
  std::vector<std::pair<std::string, StateVector>> inputs;
  inputs.emplace_back("plus_plus", new_plus_state(2));
  inputs.emplace_back("ket_10", StateVector::basis_state(2, 0b01));
  for (unsigned i = 0; i < 3; ++i) {
    inputs.emplace_back("random_" + std::to_string(i), random_state(2, a.seed * 3 + i + 1));
  }
  for (const auto& [name, input] : inputs) {
    const verifier::BranchReport b = verifier::enumerate_branches(input, opts, graph);
    rep << name << '\t' << b.examined << '\t' << b.skipped << '\t' << b.fidelity_pass << '\t'
        << b.byproduct_pass << '\t' << fmt("%.12f", b.min_fidelity) << '\t'
        << (b.all_pass() ? "PASS" : "FAIL") << '\n';
    ok = ok && b.all_pass();
  }
  const verifier::SignReport signs = verifier::check_eigen_signs(graph);
  rep << "signs\t" << signs.branches << "\tmismatches=" << signs.mismatches << '\t'
      << (signs.mismatches == 0 ? "PASS" : "FAIL") << '\n';
  ok = ok && signs.mismatches == 0;
  rep << "result\t" << (ok ? "PASS" : "FAIL") << '\n';
  emit(a.report_out, rep.str(), out);
  return ok ? kOk : kCheckFailed;
}

int cmd_timing(const TimingArgs& a, std::ostream& out) {
  if (a.phases.size() != 2) throw ContractViolation("--phases takes two values");
  const double t = timing::period(a.freq);
  timing::PhotonicParams params;
  params.n_eff = a.n_eff;
  std::ostringstream rep;
  rep << "quantity\tvalue\n";
  rep << "frequency_hz\t" << fmt("%.6e", a.freq) << '\n';
  rep << "period_s\t" << fmt("%.6e", t) << '\n';
  rep << "delay_line_m\t" << fmt("%.6f", timing::delay_line_length(a.freq, params)) << '\n';

  int code = kOk;
  if (a.t_logic) {
    rep << "logic_s\t" << fmt("%.6e", *a.t_logic) << '\n';
    try {
      rep << "analog_budget_s\t" << fmt("%.6e", timing::analog_budget(a.freq, *a.t_logic)) << '\n';
    } catch (const InfeasibleBudget&) {
      rep << "analog_budget_s\t" << fmt("%.6e", t - *a.t_logic) << '\n';
      code = kInfeasible;
    }
  }
  timing::ClockPlan plan{a.freq, a.phases[0], a.phases[1]};
  timing::TimingBudget budget{a.t_co, a.t_su, a.t_internal, a.hold};
  const timing::LegalityReport legal = timing::phase_legality(plan, budget);
  for (const auto& c : legal.checks) {
    rep << c.name << "_required_s\t" << fmt("%.6e", c.required) << '\n';
    rep << c.name << "_available_s\t" << fmt("%.6e", c.available) << '\n';
    rep << c.name << "_margin_s\t" << fmt("%.6e", c.margin()) << '\n';
    rep << c.name << "_ok\t" << (c.ok ? 1 : 0) << '\n';
  }
  if (!legal.ok()) code = kInfeasible;
  if (a.rows > 0) {
    rep << "pin_count\t" << timing::pin_count(a.rows, a.serial) << '\n';
  }
  out << rep.str();
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measurement-based quantum computing control toolkit", "mbqc"};
  app.require_subcommand(1);

  CompileArgs ca;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit into program words");
  compile_cmd->add_option("circuit", ca.circuit, "Circuit IR file")->required();
  compile_cmd->add_option("-o,--rom", ca.rom_out, "ROM output path ('-' for stdout)");
  compile_cmd->add_option("--theta", ca.theta_out, "Angle table output path");
  compile_cmd->add_option("--stimulus", ca.stimulus_out, "Trace stimulus output path");
  compile_cmd->add_option("--outcomes", ca.outcomes, "Outcome matrix for the stimulus");
  compile_cmd->add_flag("--final-z", ca.final_z, "Append a computational-basis readout round");

  SimulateArgs sa;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the column-streaming simulation");
  sim_cmd->add_option("circuit", sa.circuit, "Circuit IR file")->required();
  sim_cmd->add_option("--seed", sa.seed, "RNG seed");
  sim_cmd->add_option("--forced-outcomes", sa.forced, "Outcome matrix to post-select on");
  sim_cmd->add_option("--trace", sa.trace_out, "Trace output path ('-' for stdout)");
  sim_cmd->add_flag("--final-z", sa.final_z, "Append a computational-basis readout round");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify-cnot", "Check the CNOT pattern on its cluster");
  verify_cmd->add_option("--branches", va.branches, "'all' or 'sample [N]' (default sample 256)")
      ->expected(1, 2);
  verify_cmd->add_option("--seed", va.seed, "Seed for branch sampling and random inputs");
  verify_cmd->add_option("--perturb-column", va.perturb_column,
                         "Move the vertical edge to this column (negative control)")
      ->check(CLI::Range(0, 6));
  verify_cmd->add_option("--report", va.report_out, "Report output path");

  TimingArgs ta;
  auto* timing_cmd = app.add_subcommand("timing", "Timing budget of the photonic clock");
  timing_cmd->add_option("--freq", ta.freq, "Photonic clock frequency in Hz")->required();
  timing_cmd->add_option("--neff", ta.n_eff, "Waveguide mode index");
  timing_cmd->add_option("--tlogic", ta.t_logic, "Logic time per cycle in s");
  timing_cmd->add_option("--phases", ta.phases, "X_s and X_r phases in degrees")->expected(2);
  timing_cmd->add_option("--tco", ta.t_co, "Input clock-to-out in s");
  timing_cmd->add_option("--tsu", ta.t_su, "Output setup time in s");
  timing_cmd->add_option("--tinternal", ta.t_internal, "X_s to X_r logic time in s");
  timing_cmd->add_option("--hold", ta.hold, "Margin after X_r in s");
  timing_cmd->add_option("--rows", ta.rows, "Report the pin count for this many rows");
  timing_cmd->add_flag("--serial", ta.serial, "Serial byproduct readout for the pin count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (compile_cmd->parsed()) return cmd_compile(ca, out);
    if (sim_cmd->parsed()) return cmd_simulate(sa, out);
    if (verify_cmd->parsed()) return cmd_verify(va, out);
    if (timing_cmd->parsed()) return cmd_timing(ta, out);
  } catch (const ImpossibleBranch& e) {
    err << "error: " << e.what() << '\n';
    return kImpossibleBranch;
  } catch (const InfeasibleBudget& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ContractViolation& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace mbqc::cli
