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

#include "shadowcut/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "shadowcut/errors.hpp"

namespace shadowcut {

using Complex = std::complex<double>;

Statevector Statevector::zero(int n_qubits) {
  if (n_qubits < 0) throw ValidationError("negative qubit count");
  if (n_qubits > kMaxStatevectorQubits) {
    throw SizeLimitError("statevector register of " +
                         std::to_string(n_qubits) + " qubits exceeds the " +
                         std::to_string(kMaxStatevectorQubits) +
                         "-qubit limit");
  }
  std::vector<Complex> amps(std::size_t(1) << n_qubits, Complex(0.0, 0.0));
  amps[0] = Complex(1.0, 0.0);
  return Statevector(n_qubits, std::move(amps));
}

void Statevector::apply(const ComplexMatrix& gate,
                        std::span<const int> wires) {
  const int k = static_cast<int>(wires.size());
  const std::size_t block = std::size_t(1) << k;
  if (gate.rows() != static_cast<Eigen::Index>(block) ||
      gate.cols() != static_cast<Eigen::Index>(block)) {
    throw ValidationError("gate dimension does not match wire count");
  }
  for (int i = 0; i < k; ++i) {
    if (wires[i] < 0 || wires[i] >= n_qubits_) {
      throw ValidationError("gate wire out of range");
    }
    for (int j = i + 1; j < k; ++j) {
      if (wires[i] == wires[j]) throw ValidationError("duplicate gate wire");
    }
  }

  // Bit of qubit q lives at position (n-1-q). wires[0] is the most
  // significant index within the gate block.
  std::vector<std::size_t> bit(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    bit[static_cast<std::size_t>(i)] =
        std::size_t(1) << (n_qubits_ - 1 - wires[static_cast<std::size_t>(i)]);
  }
  std::size_t target_mask = 0;
  for (auto b : bit) target_mask |= b;

  std::vector<Complex> in(block), out(block);
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;  // visit each block once
    for (std::size_t g = 0; g < block; ++g) {
      std::size_t idx = base;
      for (int i = 0; i < k; ++i) {
        if (g & (block >> (i + 1))) idx |= bit[static_cast<std::size_t>(i)];
      }
      in[g] = amps_[idx];
    }
    for (std::size_t r = 0; r < block; ++r) {
      Complex acc(0.0, 0.0);
      for (std::size_t c = 0; c < block; ++c) {
        acc += gate(static_cast<Eigen::Index>(r),
                    static_cast<Eigen::Index>(c)) *
               in[c];
      }
      out[r] = acc;
    }
    for (std::size_t g = 0; g < block; ++g) {
      std::size_t idx = base;
      for (int i = 0; i < k; ++i) {
        if (g & (block >> (i + 1))) idx |= bit[static_cast<std::size_t>(i)];
      }
      amps_[idx] = out[g];
    }
  }
}

double Statevector::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

Statevector apply_pauli(const Statevector& state, const PauliString& p) {
  const int n = state.n_qubits();
  if (!p.support.empty() && p.support.rbegin()->first >= n) {
    throw ValidationError("Pauli support qubit out of range");
  }
  std::size_t flip_mask = 0;
  std::vector<std::pair<std::size_t, Axis>> phased;  // Y and Z bits
  for (const auto& [q, a] : p.support) {
    const std::size_t b = std::size_t(1) << (n - 1 - q);
    if (a == Axis::X || a == Axis::Y) flip_mask |= b;
    if (a == Axis::Y || a == Axis::Z) phased.emplace_back(b, a);
  }

  Statevector result = Statevector::zero(n);
  auto& out = result.amplitudes();
  out[0] = Complex(0.0, 0.0);
  const auto& in = state.amplitudes();
  const Complex imag_unit(0.0, 1.0);
  for (std::size_t i = 0; i < in.size(); ++i) {
    Complex phase(p.coeff, 0.0);
    for (const auto& [b, a] : phased) {
      const bool set = (i & b) != 0;
      if (a == Axis::Y) {
        phase *= set ? -imag_unit : imag_unit;  // Y|0>=i|1>, Y|1>=-i|0>
      } else {
        if (set) phase = -phase;
      }
    }
    out[i ^ flip_mask] += phase * in[i];
  }
  return result;
}

double exact_expectation(const Statevector& state, const PauliString& p) {
  const Statevector pp = apply_pauli(state, p);
  Complex acc(0.0, 0.0);
  const auto& a = state.amplitudes();
  const auto& b = pp.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc.real();
}

double exact_expectation(const Statevector& state, const Observable& obs) {
  double total = 0.0;
  for (const auto& t : obs.terms()) total += exact_expectation(state, t);
  return total;
}

namespace {

// Rotation sending the requested eigenbasis to the computational basis:
// X -> H, Y -> H S^dag, Z -> identity.
ComplexMatrix basis_rotation(char basis) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (basis) {
    case 'X':
      m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
      return m;
    case 'Y':
      m << inv_sqrt2, -i * inv_sqrt2, inv_sqrt2, i * inv_sqrt2;
      return m;
    case 'Z':
      return ComplexMatrix::Identity(2, 2);
    default:
      throw ValidationError(std::string("bad basis character '") + basis +
                            "'");
  }
}

}  // namespace

std::vector<std::vector<std::int8_t>> sample_in_bases(const Statevector& state,
                                                      std::string_view bases,
                                                      long shots,
                                                      RngStream& rng) {
  const int n = state.n_qubits();
  if (static_cast<int>(bases.size()) != n) {
    throw ValidationError("basis string length does not match register");
  }
  if (shots < 0) throw ValidationError("negative shot count");

  Statevector rotated = state;
  for (int q = 0; q < n; ++q) {
    if (bases[static_cast<std::size_t>(q)] == 'Z') continue;
    const ComplexMatrix rot =
        basis_rotation(bases[static_cast<std::size_t>(q)]);
    const int wire[1] = {q};
    rotated.apply(rot, wire);
  }

  const auto& amps = rotated.amplitudes();
  std::vector<double> probs(amps.size());
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    probs[i] = std::norm(amps[i]);
    total += probs[i];
  }

  std::vector<std::vector<std::int8_t>> outcomes;
  outcomes.reserve(static_cast<std::size_t>(shots));
  for (long s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    double acc = 0.0;
    std::size_t pick = probs.size() - 1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) {
        pick = i;
        break;
      }
    }
    std::vector<std::int8_t> bits(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      const bool one = (pick >> (n - 1 - q)) & 1;
      bits[static_cast<std::size_t>(q)] = one ? -1 : 1;
    }
    outcomes.push_back(std::move(bits));
  }
  return outcomes;
}

ComplexMatrix haar_random_unitary(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 4) {
    throw SizeLimitError("haar_random_unitary supports 1..4 qubits, got " +
                         std::to_string(n_qubits));
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  RngStream rng(seed);
  ComplexMatrix ginibre(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      ginibre(r, c) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is exactly Haar.
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Complex d = r(c, c);
    const double mag = std::abs(d);
    const Complex phase = (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    q.col(c) *= phase;
  }
  return q;
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix delta =
      u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return delta.cwiseAbs().maxCoeff();
}

}  // namespace shadowcut
