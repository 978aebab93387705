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

#include <vector>

#include "shadowcut/cutter.hpp"
#include "shadowcut/shadows.hpp"

namespace shadowcut {

/// An element of the single-qubit operator basis used at cut locations.
/// Unlike Axis, this includes the identity.
enum class BasisOp : int { I = 0, X = 1, Y = 2, Z = 3 };

inline Axis basis_op_axis(BasisOp op) {
  switch (op) {
    case BasisOp::X:
      return Axis::X;
    case BasisOp::Y:
      return Axis::Y;
    default:
      return Axis::Z;  // BasisOp::Z; callers must not pass I
  }
}

char basis_op_char(BasisOp op);

/// Dense density matrix of an n-qubit register.
struct DensityMatrix {
  int n_qubits = 0;
  ComplexMatrix mat;

  double trace_real() const { return mat.trace().real(); }
  double hermiticity_defect() const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  }
};

/// Exact unit-trace Choi state of a fragment, kept as the pure output
/// state of the ancilla construction (fragments are unitary circuits
/// fed by Bell halves and |0> inputs, so the Choi state is always pure).
struct ExactChoi {
  ChoiRegisterLayout layout;
  Statevector state;
};

/// Simulates the ancilla circuit exactly. Register = Q_i ancillas plus
/// the fragment's local wires; limited by the statevector guardrail.
ExactChoi exact_choi_state(const Fragment& fragment);

/// Dense density-matrix form of the Choi state, for small fragments
/// (register within the density-matrix guardrail).
DensityMatrix exact_choi(const Fragment& fragment);

/// <psi| P |psi> for a Pauli placement over the Choi register.
double choi_expectation(const ExactChoi& choi, const PauliString& p);

/// Spectral pair of a basis operator: eigenvalue and rank-1 projector.
/// The identity expands into two +1 projectors.
struct EigenPair {
  double value = 0.0;
  ComplexMatrix projector;
};

std::vector<EigenPair> eigen_expand(BasisOp op);

struct CutIdentityReport {
  double uncut = 0.0;
  double recombined = 0.0;
  double delta = 0.0;
};

/// The repository's master correctness gate: evaluates tr(O rho) both by
/// direct simulation of the uncut circuit and by the exact Choi-state
/// recombination over the cut fragments, and reports the discrepancy.
CutIdentityReport exact_cut_identity_check(const Circuit& circuit,
                                           const std::vector<CutSpec>& cuts,
                                           const Observable& observable);

}  // namespace shadowcut
