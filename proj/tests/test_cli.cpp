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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli.hpp"
#include "mbqc/compiler.hpp"
#include "mbqc/trace.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using mbqc::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = MBQC_TEST_DATA_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mbqc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const fs::path p = path / name;
    if (!content.empty()) mbqc::write_text_file(p.string(), content);
    return p.string();
  }
};

std::map<std::string, std::string> tsv(const std::string& text) {
  std::map<std::string, std::string> m;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    if (tab != std::string::npos) m[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return m;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("compile the golden circuit") {
    TempDir tmp;
    const std::string rom = tmp.file("t3.rom"), theta = tmp.file("t3.theta"), stim = tmp.file("t3.stim");
    const Result r = call({"compile", kData + "/golden.circuit", "-o", rom, "--theta", theta, "--stimulus", stim,
                           "--outcomes", kData + "/golden.outcomes"});
    CHECK(r.code == 0);
    const auto words = mbqc::parse_rom(mbqc::read_text_file(rom));
    for (int row = 0; row < 2; ++row)
      for (int k = 0; k < 10; ++k) CHECK(words[row][k] == oracle::golden()[row].word[k]);
    CHECK(mbqc::read_text_file(theta).rfind("round\ttheta_0", 0) == 0);
    const auto stimulus = mbqc::read_trace(mbqc::read_text_file(stim));
    CHECK(stimulus.records.size() == 20);

    const Result to_stdout = call({"compile", kData + "/golden.circuit"});
    CHECK(to_stdout.out == mbqc::read_text_file(rom));
  }

  TEST_CASE("compile edge cases") {
    TempDir tmp;
    const Result empty = call({"compile", tmp.file("empty.circuit", "qubits 2\n")});
    CHECK(empty.code == 0);
    CHECK(empty.out == "qubit 0\nqubit 1\n");

    const Result bad = call({"compile", tmp.file("bad.circuit", "qubits 2\nu 0 1 2\n")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);

    CHECK(call({"compile", tmp.file("missing.circuit")}).code == 2);
    CHECK(call({"compile"}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("simulate") {
    TempDir tmp;
    const std::string trace = tmp.file("t3.trace");
    const Result r = call({"simulate", kData + "/golden.circuit", "--forced-outcomes", kData + "/golden.outcomes",
                           "--trace", trace});
    CHECK(r.code == 0);
    CHECK(r.out == "fidelity=1.000000000000\n");
    CHECK(mbqc::read_text_file(trace) == mbqc::read_text_file(kData + "/golden.trace"));

    for (const char* seed : {"0", "1", "17", "123456789"}) {
      const Result s = call({"simulate", kData + "/golden.circuit", "--seed", seed});
      CHECK(s.code == 0);
      CHECK(s.out.rfind("fidelity=", 0) == 0);
    }

    const std::string a = tmp.file("a.trace"), b = tmp.file("b.trace");
    call({"simulate", kData + "/golden.circuit", "--seed", "5", "--trace", a});
    call({"simulate", kData + "/golden.circuit", "--seed", "5", "--trace", b});
    CHECK(mbqc::read_text_file(a) == mbqc::read_text_file(b));
    CHECK(mbqc::read_text_file(a).find("#seed=5\n") != std::string::npos);

    const Result corrupt = call({"simulate", kData + "/golden.circuit", "--forced-outcomes",
                                 tmp.file("bad.outcomes", "0 1 x\n")});
    CHECK(corrupt.code == 2);
    const Result short_file = call({"simulate", kData + "/golden.circuit", "--forced-outcomes",
                                    tmp.file("short.outcomes", "0 1\n0 1\n")});
    CHECK(short_file.code == 2);
  }

  TEST_CASE("simulate reports an impossible forced branch") {
    TempDir tmp;
    // The output of this U is a computational basis state, so one readout is impossible.
    const std::string circ = tmp.file("det.circuit", "qubits 1\nu 0 0 1.5707963267948966 1.5707963267948966\n");
    int codes = 0;
    for (const char* last : {"0", "1"}) {
      const std::string m = tmp.file(std::string("m") + last, std::string("0 0 0 0 ") + last + "\n");
      const Result r = call({"simulate", circ, "--final-z", "--forced-outcomes", m});
      codes |= 1 << r.code;
    }
    CHECK(codes == ((1 << 0) | (1 << 3)));
  }

  TEST_CASE("verify-cnot") {
    const Result r = call({"verify-cnot"});
    CHECK(r.code == 0);
    const auto m = tsv(r.out);
    CHECK(m.at("result") == "PASS");
    CHECK(m.at("ket_10").rfind("256\t", 0) == 0);

    const Result all = call({"verify-cnot", "--branches", "all"});
    CHECK(all.code == 0);
    CHECK(tsv(all.out).at("ket_10").rfind("4096\t0\t4096\t4096", 0) == 0);

    const Result perturbed = call({"verify-cnot", "--perturb-column", "4"});
    CHECK(perturbed.code == 1);
    CHECK(tsv(perturbed.out).at("result") == "FAIL");

    CHECK(call({"verify-cnot", "--branches", "sample", "32"}).code == 0);
    CHECK(call({"verify-cnot", "--branches", "some"}).code == 2);
    CHECK(call({"verify-cnot", "--branches", "sample", "0"}).code == 2);
    CHECK(call({"verify-cnot", "--perturb-column", "9"}).code == 2);
  }

  TEST_CASE("timing") {
    const Result r = call({"timing", "--freq", "150e6", "--tlogic", "5.08e-9", "--rows", "20"});
    CHECK(r.code == 0);
    const auto m = tsv(r.out);
    CHECK(std::abs(std::stod(m.at("period_s")) - 6.67e-9) <= 0.01e-9);
    CHECK(std::abs(std::stod(m.at("delay_line_m")) - 0.833) <= 0.01);
    CHECK(std::abs(std::stod(m.at("analog_budget_s")) - 1.59e-9) <= 0.01e-9);
    CHECK(m.at("pin_count") == "84");
    CHECK(m.at("internal_window_ok") == "1");

    CHECK(call({"timing", "--freq", "0"}).code == 2);
    CHECK(call({"timing", "--freq", "150e6", "--tlogic", "7e-9"}).code == 4);
    const Result same = call({"timing", "--freq", "150e6", "--phases", "200", "200"});
    CHECK(same.code == 4);
    CHECK(tsv(same.out).at("internal_window_ok") == "0");
    CHECK(call({"timing", "--freq", "150e6", "--tco", "6e-9"}).code == 4);
    const Result serial = call({"timing", "--freq", "150e6", "--rows", "600", "--serial"});
    CHECK(tsv(serial.out).at("pin_count") == "1200");
  }

  TEST_CASE("installed binary exit codes") {
    const std::string bin = MBQC_CLI_PATH;
    auto status = [](const std::string& cmd) {
      const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
      return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status(bin + " compile " + kData + "/golden.circuit") == 0);
    CHECK(status(bin + " timing --freq 0") == 2);
    CHECK(status(bin + " timing --freq 150e6 --tlogic 7e-9") == 4);
    CHECK(status(bin + " verify-cnot --branches sample 16 --perturb-column 4") == 1);
  }
}
