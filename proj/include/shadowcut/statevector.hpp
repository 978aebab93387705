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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "shadowcut/pauli.hpp"
#include "shadowcut/rng.hpp"

namespace shadowcut {

/// Dense state of an n-qubit register. Amplitude index convention:
/// qubit 0 occupies the most significant bit, so |q0 q1 ... q_{n-1}>
/// reads left to right.
class Statevector {
 public:
  /// |0...0> on `n_qubits` qubits. Refuses registers beyond the dense
  /// guardrail.
  static Statevector zero(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }

  /// Applies `gate` (a 2^k x 2^k unitary) to the listed wires; the first
  /// wire is the most significant index of the gate matrix. Wires must
  /// be distinct and in range.
  void apply(const ComplexMatrix& gate, std::span<const int> wires);

  double norm() const;

 private:
  Statevector(int n, std::vector<std::complex<double>> amps)
      : n_qubits_(n), amps_(std::move(amps)) {}

  int n_qubits_ = 0;
  std::vector<std::complex<double>> amps_;
};

/// P|psi> for a Pauli string (coefficient included).
Statevector apply_pauli(const Statevector& state, const PauliString& p);

/// <psi|P|psi>, real for Hermitian P. Throws if the support exceeds the
/// register.
double exact_expectation(const Statevector& state, const PauliString& p);
double exact_expectation(const Statevector& state, const Observable& obs);

/// Rotates every qubit into the requested Pauli eigenbasis (one
/// character per qubit from {'X','Y','Z'}) and samples the computational
/// basis `shots` times. Outcome +1 corresponds to |0>, -1 to |1>.
std::vector<std::vector<std::int8_t>> sample_in_bases(const Statevector& state,
                                                      std::string_view bases,
                                                      long shots,
                                                      RngStream& rng);

/// Haar-random unitary on `n_qubits` in {1,2,3,4} via a complex Ginibre
/// matrix, QR factorization, and a diagonal phase correction that makes
/// the distribution exactly Haar. Deterministic given the seed.
ComplexMatrix haar_random_unitary(int n_qubits, std::uint64_t seed);

/// Max-entry deviation from unitarity, |U^dag U - I|_max.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace shadowcut
