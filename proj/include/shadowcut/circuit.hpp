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

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shadowcut/pauli.hpp"
#include "shadowcut/statevector.hpp"

namespace shadowcut {

/// One unitary gate on named wires. The dense matrix is materialized at
/// construction; `kind`/`name`/`seed` are kept so circuits round-trip
/// through JSON without re-deriving anything.
struct Gate {
  enum class Kind { Named, Haar, Matrix };

  Kind kind = Kind::Named;
  std::string name;          // for Kind::Named
  std::vector<int> qubits;   // 0-based wires, first = most significant
  std::uint64_t seed = 0;    // for Kind::Haar
  ComplexMatrix matrix;

  static Gate named(const std::string& name, std::vector<int> qubits);
  static Gate haar(std::vector<int> qubits, std::uint64_t seed);
  static Gate from_matrix(std::vector<int> qubits, ComplexMatrix m);
};

/// An ordered list of gates on a fixed-width register.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  void validate() const;
};

/// Runs the circuit on |0...0>.
Statevector simulate(const Circuit& circuit);

// JSON schema (wires are 1-based in files, 0-based in memory):
//   {"n_qubits": N,
//    "gates": [{"kind":"haar","qubits":[1,2],"seed":7},
//              {"kind":"named","name":"cnot","qubits":[1,2]},
//              {"kind":"matrix","qubits":[2],"re":[[...]],"im":[[...]]}]}
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

/// Stable fingerprint of a circuit (FNV-1a over the canonical JSON dump),
/// used to tag shadow files with their provenance.
std::string circuit_hash(const Circuit& circuit);

}  // namespace shadowcut
