// Copyright 2026 The shadowcut developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "shadowcut/circuit.hpp"
#include "shadowcut/errors.hpp"
#include "shadowcut/statevector.hpp"

using namespace shadowcut;
using Complex = std::complex<double>;

namespace {

Statevector random_state(int n_qubits, RngStream& rng) {
  Statevector state = Statevector::zero(n_qubits);
  auto& amps = state.amplitudes();
  double norm_sq = 0.0;
  for (auto& a : amps) {
    a = Complex(rng.normal(), rng.normal());
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= scale;
  return state;
}

Statevector ghz3() {
  Circuit c;
  c.n_qubits = 3;
  c.gates.push_back(Gate::named("h", {0}));
  c.gates.push_back(Gate::named("cnot", {0, 1}));
  c.gates.push_back(Gate::named("cnot", {1, 2}));
  return simulate(c);
}

}  // namespace

TEST_CASE("haar unitaries are unitary across sizes") {
  RngStream rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng.uniform_int(4));
    const ComplexMatrix u = haar_random_unitary(n, rng.next());
    CHECK(unitarity_defect(u) <= 1e-10);
  }
}

TEST_CASE("haar sampling is deterministic under a fixed seed") {
  const ComplexMatrix a = haar_random_unitary(2, 7);
  const ComplexMatrix b = haar_random_unitary(2, 7);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  const ComplexMatrix c = haar_random_unitary(2, 8);
  CHECK((a - c).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("haar size limits") {
  CHECK_THROWS_AS(haar_random_unitary(0, 1), SizeLimitError);
  CHECK_THROWS_AS(haar_random_unitary(5, 1), SizeLimitError);
}

TEST_CASE("haar marginal: mean |U00|^2 over single-qubit draws is 1/2") {
  RngStream rng(3);
  double sum = 0.0;
  const int reps = 10000;
  for (int rep = 0; rep < reps; ++rep) {
    const ComplexMatrix u = haar_random_unitary(1, rng.next());
    sum += std::norm(u(0, 0));
  }
  CHECK(std::abs(sum / reps - 0.5) <= 0.02);
}

TEST_CASE("hadamard on the first wire of |00>") {
  Statevector state = Statevector::zero(2);
  state.apply(Gate::named("h", {0}).matrix, std::vector<int>{0});
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(state.amplitudes()[0] - Complex(s, 0)) <= 1e-12);  // |00>
  CHECK(std::abs(state.amplitudes()[2] - Complex(s, 0)) <= 1e-12);  // |10>
  CHECK(std::abs(state.amplitudes()[1]) <= 1e-12);
  CHECK(std::abs(state.amplitudes()[3]) <= 1e-12);
}

TEST_CASE("bell preparation") {
  Circuit c;
  c.n_qubits = 2;
  c.gates.push_back(Gate::named("h", {0}));
  c.gates.push_back(Gate::named("cnot", {0, 1}));
  const Statevector state = simulate(c);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(state.amplitudes()[0] - Complex(s, 0)) <= 1e-12);
  CHECK(std::abs(state.amplitudes()[3] - Complex(s, 0)) <= 1e-12);
  CHECK(std::abs(state.amplitudes()[1]) <= 1e-12);
  CHECK(std::abs(state.amplitudes()[2]) <= 1e-12);
}

TEST_CASE("identity gate leaves a random state unchanged") {
  RngStream rng(5);
  const Statevector before = random_state(3, rng);
  Statevector after = before;
  after.apply(ComplexMatrix::Identity(4, 4), std::vector<int>{1, 2});
  for (std::size_t i = 0; i < before.dim(); ++i) {
    CHECK(std::abs(after.amplitudes()[i] - before.amplitudes()[i]) <= 1e-12);
  }
}

TEST_CASE("gate application errors") {
  Statevector state = Statevector::zero(2);
  const ComplexMatrix h = Gate::named("h", {0}).matrix;
  CHECK_THROWS_AS(state.apply(h, std::vector<int>{2}), ValidationError);
  CHECK_THROWS_AS(state.apply(h, std::vector<int>{0, 1}), ValidationError);
  const ComplexMatrix cnot = Gate::named("cnot", {0, 1}).matrix;
  CHECK_THROWS_AS(state.apply(cnot, std::vector<int>{0, 0}), ValidationError);
}

TEST_CASE("norm preservation over random gate applications") {
  RngStream rng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(3));
    Statevector state = random_state(n, rng);
    const int k = 1 + static_cast<int>(rng.uniform_int(2));
    std::vector<int> wires;
    while (static_cast<int>(wires.size()) < k) {
      const int w = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
      if (std::find(wires.begin(), wires.end(), w) == wires.end()) {
        wires.push_back(w);
      }
    }
    state.apply(haar_random_unitary(k, rng.next()), wires);
    CHECK(std::abs(state.norm() - 1.0) <= 1e-10);
  }
}

TEST_CASE("statevector size guardrail") {
  CHECK_THROWS_AS(Statevector::zero(kMaxStatevectorQubits + 1),
                  SizeLimitError);
  CHECK_NOTHROW(Statevector::zero(kMaxStatevectorQubits));
}

TEST_CASE("sampling eigenstates is deterministic in outcome") {
  RngStream rng(23);
  const Statevector zero = Statevector::zero(1);
  for (const auto& outcome : sample_in_bases(zero, "Z", 100, rng)) {
    CHECK(outcome[0] == 1);
  }
  Statevector plus = Statevector::zero(1);
  plus.apply(Gate::named("h", {0}).matrix, std::vector<int>{0});
  for (const auto& outcome : sample_in_bases(plus, "X", 100, rng)) {
    CHECK(outcome[0] == 1);
  }
}

TEST_CASE("sampling |0> in X is unbiased") {
  RngStream rng(29);
  const Statevector zero = Statevector::zero(1);
  double sum = 0.0;
  const long shots = 10000;
  for (const auto& outcome : sample_in_bases(zero, "X", shots, rng)) {
    sum += outcome[0];
  }
  CHECK(std::abs(sum / static_cast<double>(shots)) <= 0.05);
}

TEST_CASE("sampling consistency against the exact expectation") {
  RngStream rng(31);
  const Statevector state = random_state(3, rng);
  const long shots = 100000;
  const double tolerance = 5.0 / std::sqrt(static_cast<double>(shots));
  for (int q = 0; q < 3; ++q) {
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      std::string bases = "ZZZ";
      bases[static_cast<std::size_t>(q)] = axis_char(axis);
      RngStream shot_rng = rng.child(static_cast<std::uint64_t>(q * 3) +
                                     static_cast<std::uint64_t>(axis_char(axis)));
      double sum = 0.0;
      for (const auto& outcome : sample_in_bases(state, bases, shots, shot_rng)) {
        sum += outcome[static_cast<std::size_t>(q)];
      }
      const PauliString p{{{q, axis}}};
      CHECK(std::abs(sum / static_cast<double>(shots) -
                     exact_expectation(state, p)) <= tolerance);
    }
  }
}

TEST_CASE("exact expectations on GHZ") {
  const Statevector state = ghz3();
  CHECK(exact_expectation(state, PauliString{{{0, Axis::X},
                                              {1, Axis::X},
                                              {2, Axis::X}}}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(exact_expectation(state, PauliString{{{0, Axis::Z},
                                                       {1, Axis::Z},
                                                       {2, Axis::Z}}})) <=
        1e-12);
  CHECK(exact_expectation(state, PauliString{}) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact expectation rejects out-of-range support") {
  const Statevector state = Statevector::zero(2);
  CHECK_THROWS_AS(exact_expectation(state, PauliString{{{2, Axis::Z}}}),
                  ValidationError);
}
