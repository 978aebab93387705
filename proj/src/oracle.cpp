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

#include "shadowcut/oracle.hpp"

#include <cmath>
#include <complex>

#include "shadowcut/errors.hpp"
#include "shadowcut/recombine.hpp"

namespace shadowcut {

using Complex = std::complex<double>;

char basis_op_char(BasisOp op) {
  switch (op) {
    case BasisOp::I:
      return 'I';
    case BasisOp::X:
      return 'X';
    case BasisOp::Y:
      return 'Y';
    case BasisOp::Z:
      return 'Z';
  }
  return '?';
}

ExactChoi exact_choi_state(const Fragment& fragment) {
  return ExactChoi{choi_layout(fragment), simulate(choi_circuit(fragment))};
}

DensityMatrix exact_choi(const Fragment& fragment) {
  const int n = fragment.quantum_inputs() + fragment.subcircuit.n_qubits;
  if (n > kMaxDensityMatrixQubits) {
    throw SizeLimitError("Choi density matrix over " + std::to_string(n) +
                         " qubits exceeds the " +
                         std::to_string(kMaxDensityMatrixQubits) +
                         "-qubit limit");
  }
  const ExactChoi choi = exact_choi_state(fragment);
  const auto& amps = choi.state.amplitudes();
  const Eigen::Index dim = static_cast<Eigen::Index>(amps.size());
  ComplexMatrix rho(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      rho(r, c) = amps[static_cast<std::size_t>(r)] *
                  std::conj(amps[static_cast<std::size_t>(c)]);
    }
  }
  return DensityMatrix{n, std::move(rho)};
}

double choi_expectation(const ExactChoi& choi, const PauliString& p) {
  return exact_expectation(choi.state, p);
}

std::vector<EigenPair> eigen_expand(BasisOp op) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  auto projector = [](const Eigen::Vector2cd& v) {
    return ComplexMatrix(v * v.adjoint());
  };
  Eigen::Vector2cd zero(1.0, 0.0), one(0.0, 1.0);
  switch (op) {
    case BasisOp::I:
      return {{1.0, projector(zero)}, {1.0, projector(one)}};
    case BasisOp::Z:
      return {{1.0, projector(zero)}, {-1.0, projector(one)}};
    case BasisOp::X: {
      Eigen::Vector2cd plus(s, s), minus(s, -s);
      return {{1.0, projector(plus)}, {-1.0, projector(minus)}};
    }
    case BasisOp::Y: {
      Eigen::Vector2cd plus_i(s, s * i), minus_i(s, -s * i);
      return {{1.0, projector(plus_i)}, {-1.0, projector(minus_i)}};
    }
  }
  throw ValidationError("bad basis operator");
}

CutIdentityReport exact_cut_identity_check(const Circuit& circuit,
                                           const std::vector<CutSpec>& cuts,
                                           const Observable& observable) {
  CutIdentityReport report;
  report.uncut = exact_expectation(simulate(circuit), observable);

  const FragmentGraph graph = cut_circuit(circuit, cuts);
  const Partition partition = partition_for_observable(graph, observable);
  std::map<int, ExactChoi> chois;
  for (int f : partition.surviving()) {
    chois.emplace(f,
                  exact_choi_state(graph.fragments[static_cast<std::size_t>(f)]));
  }
  report.recombined = recombine_exact(graph, partition, chois, observable);
  report.delta = std::abs(report.uncut - report.recombined);
  return report;
}

}  // namespace shadowcut
