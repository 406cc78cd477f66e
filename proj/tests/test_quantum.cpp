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

#include <cmath>
#include <numbers>
#include <random>

#include "mbqc/error.hpp"
#include "mbqc/quantum/pauli_string.hpp"
#include "mbqc/quantum/state_vector.hpp"
#include "oracles.hpp"

using namespace mbqc;
using std::numbers::pi;

namespace {

oracle::Vec to_vec(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

StateVector from_vec(const oracle::Vec& v) { return StateVector::from_amplitudes(v); }

double max_diff(const oracle::Vec& a, const oracle::Vec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_SUITE("quantum-core") {
  TEST_CASE("plus state amplitudes") {
    const StateVector one = new_plus_state(1);
    CHECK(one[0].real() == doctest::Approx(0.70710678118654752).epsilon(1e-15));
    CHECK(one[1].real() == doctest::Approx(0.70710678118654752).epsilon(1e-15));
    const StateVector two = new_plus_state(2);
    for (std::size_t i = 0; i < 4; ++i) CHECK(two[i] == amp_t(0.5, 0.0));
    CHECK(std::abs(new_plus_state(14).norm_squared() - 1.0) < 1e-12);
  }

  TEST_CASE("plus state errors") {
    CHECK_THROWS_AS(new_plus_state(0), ContractViolation);
    try {
      new_plus_state(11, 1024);
      FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
      CHECK(std::string(e.what()).find("1024") != std::string::npos);
    }
  }

  TEST_CASE("rotation matrices match the generator exponential") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(-2 * pi, 2 * pi);
    for (int trial = 0; trial < 20; ++trial) {
      const double a = ang(rng);
      const oracle::Mat rx = oracle::rx(a), ry = oracle::ry(a), rz = oracle::rz(a);
      const auto mx = rx_matrix(a), my = ry_matrix(a), mz = rz_matrix(a);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          CHECK(std::abs(mx[2 * i + j] - rx[i][j]) < 1e-13);
          CHECK(std::abs(my[2 * i + j] - ry[i][j]) < 1e-13);
          CHECK(std::abs(mz[2 * i + j] - rz[i][j]) < 1e-13);
        }
      }
    }
  }

  TEST_CASE("rotation examples") {
    StateVector s(1);
    s.apply_rx(0, pi);
    CHECK(std::abs(s[1]) == doctest::Approx(1.0).epsilon(1e-15));

    StateVector p = new_plus_state(1);
    p.apply_rz(0, pi);
    const StateVector minus = from_vec({1 / std::sqrt(2.0), -1 / std::sqrt(2.0)});
    CHECK(fidelity_up_to_phase(p, minus) == doctest::Approx(1.0).epsilon(1e-12));

    const StateVector psi = random_state(3, 5);
    StateVector same = psi;
    same.apply_rx(1, 0.0);
    same.apply_ry(2, 0.0);
    same.apply_rz(0, 0.0);
    for (std::size_t i = 0; i < psi.size(); ++i) CHECK(same[i] == psi[i]);

    CHECK_THROWS_AS(same.apply_rx(3, 0.1), ContractViolation);
    CHECK_THROWS_AS(same.apply_rz(3, 0.0), ContractViolation);
  }

  TEST_CASE("rotation composition up to global phase") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (int trial = 0; trial < 10; ++trial) {
      const double a = ang(rng), b = ang(rng);
      StateVector x = random_state(2, 100 + trial), y = x;
      x.apply_ry(1, a);
      x.apply_ry(1, b);
      y.apply_ry(1, a + b);
      CHECK(fidelity_up_to_phase(x, y) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("gates on several qubits agree with Kronecker operators") {
    const unsigned n = 4;
    const StateVector psi = random_state(n, 77);
    const oracle::Vec v = to_vec(psi);
    for (unsigned q = 0; q < n; ++q) {
      StateVector s = psi;
      s.apply_rx(q, 0.7);
      CHECK(max_diff(to_vec(s), oracle::apply(oracle::embed(oracle::rx(0.7), q, n), v)) < 1e-13);
      s = psi;
      s.apply_x(q);
      CHECK(max_diff(to_vec(s), oracle::apply(oracle::embed(oracle::pauli_x(), q, n), v)) < 1e-15);
      s = psi;
      s.apply_z(q);
      CHECK(max_diff(to_vec(s), oracle::apply(oracle::embed(oracle::pauli_z(), q, n), v)) < 1e-15);
      for (unsigned t = 0; t < n; ++t) {
        if (t == q) continue;
        s = psi;
        s.apply_cnot(q, t);
        CHECK(max_diff(to_vec(s), oracle::apply(oracle::cnot(q, t, n), v)) < 1e-15);
        s = psi;
        s.apply_cz(q, t);
        CHECK(max_diff(to_vec(s), oracle::apply(oracle::cz(q, t, n), v)) < 1e-15);
      }
    }
  }

  TEST_CASE("entangling gate examples") {
    StateVector pp = new_plus_state(2);
    pp.apply_cz(0, 1);
    CHECK(pp[0] == amp_t(0.5));
    CHECK(pp[1] == amp_t(0.5));
    CHECK(pp[2] == amp_t(0.5));
    CHECK(pp[3] == amp_t(-0.5));
    pp.apply_cz(1, 0);
    CHECK(pp[3] == amp_t(0.5));

    // |10>: control (qubit 0) set. CNOT swaps |10> and |11>.
    StateVector ten = StateVector::basis_state(2, 0b01);
    ten.apply_cnot(0, 1);
    CHECK(std::abs(ten[0b11]) == doctest::Approx(1.0));

    CHECK_THROWS_AS(pp.apply_cz(1, 1), ContractViolation);
    CHECK_THROWS_AS(pp.apply_cnot(0, 0), ContractViolation);
    CHECK_THROWS_AS(pp.apply_cz(0, 2), ContractViolation);
  }

  TEST_CASE("measure_z convention and statistics") {
    StateVector zero(1);
    CHECK(zero.measure_z(0, 0.999) == 0);
    CHECK(zero.measure_z(0, 0.0) == 0);

    StateVector plus = new_plus_state(1);
    CHECK(plus.measure_z(0, 0.49) == 1);
    CHECK(std::abs(plus[1]) == doctest::Approx(1.0));

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int ones = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      StateVector s = new_plus_state(1);
      ones += s.measure_z(0, u(rng));
    }
    CHECK(std::abs(ones / double(trials) - 0.5) < 0.02);
  }

  TEST_CASE("forced projection on an impossible branch") {
    StateVector zero(1);
    CHECK_THROWS_AS(zero.project_z(0, 1), ImpossibleBranch);
    try {
      zero.project_z(0, 1);
    } catch (const ImpossibleBranch& e) {
      CHECK(e.probability() == doctest::Approx(0.0));
    }
    StateVector plus = new_plus_state(1);
    CHECK(plus.project_z(0, 1) == doctest::Approx(0.5));
  }

  TEST_CASE("remove_qubit") {
    // |0> on qubit 0, |+> on qubit 1.
    StateVector s = from_vec({1 / std::sqrt(2.0), 0.0, 1 / std::sqrt(2.0), 0.0});
    s.remove_qubit(0);
    CHECK(s.n_qubits() == 1);
    CHECK(fidelity_up_to_phase(s, new_plus_state(1)) == doctest::Approx(1.0).epsilon(1e-15));

    StateVector three = new_plus_state(3);
    three.project_z(1, 1);
    three.remove_qubit(1);
    CHECK(three.n_qubits() == 2);
    CHECK(std::abs(three.norm_squared() - 1.0) < 1e-12);

    StateVector r = random_state(4, 9);
    r.measure_z(2, 0.3);
    r.remove_qubit(2);
    CHECK(std::abs(r.norm_squared() - 1.0) < 1e-12);

    StateVector bell = new_plus_state(2);
    bell.apply_cz(0, 1);
    CHECK_THROWS_AS(bell.remove_qubit(0), ContractViolation);
  }

  TEST_CASE("equatorial measurement") {
    StateVector a = new_plus_state(1);
    CHECK(a.probability_one(0) == doctest::Approx(0.5));
    CHECK(a.measure_in_equator(0, 0.0, 0.5) == 0);
    StateVector b = new_plus_state(1);
    CHECK(b.measure_in_equator(0, pi, 0.999999) == 1);

    // Same sequence spelled out.
    StateVector psi = random_state(2, 41), manual = psi;
    const int m = psi.measure_in_equator(1, 0.37, 0.6);
    manual.apply_rz(1, pi / 2 - 0.37);
    manual.apply_rx(1, pi / 2);
    CHECK(manual.measure_z(1, 0.6) == m);
    CHECK(fidelity_up_to_phase(psi, manual) == doctest::Approx(1.0).epsilon(1e-14));

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int ones = 0;
    for (int i = 0; i < 10000; ++i) {
      StateVector s = new_plus_state(1);
      ones += s.measure_in_equator(0, pi / 2, u(rng));
    }
    CHECK(std::abs(ones / 10000.0 - 0.5) < 0.02);
  }

  TEST_CASE("outcome 0 of the equatorial measurement is (|0> + e^{i phi}|1>)/sqrt 2") {
    for (double phi : {0.0, 0.3, -1.1, pi / 2, 2.5}) {
      const StateVector eig =
          from_vec({1 / std::sqrt(2.0), std::polar(1.0, phi) / std::sqrt(2.0)});
      StateVector s = eig;
      CHECK(s.project_in_equator(0, phi, 0) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("expectations") {
    CHECK(new_plus_state(1).expectation(PauliString::parse("X")) == doctest::Approx(1.0));
    CHECK(StateVector(1).expectation(PauliString::parse("X")) == doctest::Approx(0.0));
    CHECK(StateVector(1).expectation(PauliString::parse("-Z")) == doctest::Approx(-1.0));
    StateVector yplus = from_vec({1 / std::sqrt(2.0), amp_t(0, 1 / std::sqrt(2.0))});
    CHECK(yplus.expectation(PauliString::parse("Y")) == doctest::Approx(1.0));
    CHECK_THROWS_AS(yplus.expectation(PauliString::parse("+iX")), ContractViolation);
    CHECK_THROWS_AS(yplus.expectation(PauliString::parse("XX")), ContractViolation);

    // Against the dense operator on a random state.
    const StateVector psi = random_state(3, 8);
    const oracle::Mat op = oracle::kron(oracle::kron(oracle::pauli_z(), oracle::pauli_y()),
                                        oracle::pauli_x());  // qubit 2 = Z, 1 = Y, 0 = X
    const oracle::Vec v = to_vec(psi);
    const oracle::Vec ov = oracle::apply(op, v);
    amp_t want = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) want += std::conj(v[i]) * ov[i];
    CHECK(psi.expectation(PauliString::parse("XYZ")) == doctest::Approx(want.real()).epsilon(1e-12));
  }

  TEST_CASE("fidelity up to phase") {
    const StateVector psi = random_state(3, 12);
    CHECK(fidelity_up_to_phase(psi, psi) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity_up_to_phase(StateVector(1), StateVector::basis_state(1, 1)) == 0.0);
    std::vector<amp_t> rotated(psi.amplitudes().begin(), psi.amplitudes().end());
    for (auto& a : rotated) a *= std::polar(1.0, 1.234);
    CHECK(std::abs(fidelity_up_to_phase(psi, from_vec(rotated)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(fidelity_up_to_phase(psi, StateVector(2)), ContractViolation);
  }

  TEST_CASE("norm preservation over random operation sequences") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(-pi, pi);
    StateVector s = random_state(6, 1);
    for (int step = 0; step < 300; ++step) {
      const unsigned q = rng() % 6;
      unsigned t = rng() % 6;
      if (t == q) t = (t + 1) % 6;
      switch (rng() % 7) {
        case 0: s.apply_rx(q, ang(rng)); break;
        case 1: s.apply_ry(q, ang(rng)); break;
        case 2: s.apply_rz(q, ang(rng)); break;
        case 3: s.apply_x(q); break;
        case 4: s.apply_z(q); break;
        case 5: s.apply_cz(q, t); break;
        default: s.apply_cnot(q, t); break;
      }
      REQUIRE(std::abs(s.norm_squared() - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("operations on disjoint qubits commute") {
    const StateVector psi = random_state(5, 31);
    StateVector a = psi, b = psi;
    a.apply_rx(0, 0.4);
    a.apply_cz(2, 3);
    a.apply_ry(4, -1.3);
    b.apply_ry(4, -1.3);
    b.apply_cz(2, 3);
    b.apply_rx(0, 0.4);
    CHECK(max_diff(to_vec(a), to_vec(b)) <= 1e-14);
  }

  TEST_CASE("from_amplitudes rejects bad input") {
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ContractViolation);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 1.0}), ContractViolation);
    CHECK_THROWS_AS(StateVector::basis_state(2, 4), ContractViolation);
  }
}

TEST_SUITE("pauli-string") {
  TEST_CASE("single-qubit products carry exact phases") {
    CHECK((PauliString::parse("X") * PauliString::parse("Z")) == PauliString::parse("-iY"));
    CHECK((PauliString::parse("Z") * PauliString::parse("X")) == PauliString::parse("+iY"));
    CHECK((PauliString::parse("X") * PauliString::parse("Y")) == PauliString::parse("+iZ"));
    CHECK((PauliString::parse("Y") * PauliString::parse("Z")) == PauliString::parse("+iX"));
    CHECK((PauliString::parse("Y") * PauliString::parse("Y")) == PauliString::parse("I"));
  }

  TEST_CASE("products agree with dense matrices") {
    const char* letters = "IXYZ";
    const oracle::Mat mats[] = {oracle::identity(2), oracle::pauli_x(), oracle::pauli_y(),
                                oracle::pauli_z()};
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const PauliString p = PauliString::parse(std::string(1, letters[a])) *
                              PauliString::parse(std::string(1, letters[b]));
        const oracle::Mat prod = oracle::mul(mats[a], mats[b]);
        const oracle::Mat& base = mats[std::string(letters).find(to_char(p[0]))];
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) CHECK(std::abs(p.phase() * base[i][j] - prod[i][j]) < 1e-15);
        }
      }
    }
  }

  TEST_CASE("square of a string is phase squared times identity") {
    for (const char* text : {"XYZI", "-YY", "+iXZ", "-iZZY"}) {
      const PauliString p = PauliString::parse(text);
      const PauliString sq = p * p;
      PauliString expected(p.size());
      expected.set_phase_exponent(2 * p.phase_exponent());
      CHECK(sq == expected);
    }
  }

  TEST_CASE("parsing and printing") {
    const PauliString p = PauliString::parse("-X_YZ");
    CHECK(p.size() == 4);
    CHECK(p.to_string() == "-XIYZ");
    CHECK(p.weight() == 3);
    CHECK(p.y_count() == 1);
    CHECK(p.x_mask() == 0b0101);
    CHECK(p.z_mask() == 0b1100);
    CHECK_THROWS_AS(PauliString::parse("XQ"), ContractViolation);
    CHECK_THROWS_AS(PauliString::parse("X") * PauliString::parse("XX"), ContractViolation);
  }
}
