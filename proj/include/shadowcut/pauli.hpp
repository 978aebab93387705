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

#include <Eigen/Dense>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace shadowcut {

using ComplexMatrix = Eigen::MatrixXcd;

/// Single-qubit Pauli axis. Identity is represented by absence from a
/// PauliString's support, never by an Axis value.
enum class Axis : char { X = 'X', Y = 'Y', Z = 'Z' };

char axis_char(Axis a);
Axis axis_from_char(char c);

/// Dense 2x2 matrix of an axis.
ComplexMatrix axis_matrix(Axis a);

/// A weighted Pauli string in sparse form: qubits absent from the
/// support carry identity. Matching and weight queries cost
/// O(weight), independent of the register size.
struct PauliString {
  std::map<int, Axis> support;  // qubit index -> axis
  double coeff = 1.0;

  PauliString() = default;
  PauliString(std::map<int, Axis> ops, double c = 1.0)
      : support(std::move(ops)), coeff(c) {}

  /// Number of non-identity tensor factors.
  int weight() const { return static_cast<int>(support.size()); }

  bool is_identity() const { return support.empty(); }

  /// Scalar relating the transpose to the string itself: X and Z are
  /// symmetric, Y picks up a sign, so P^T = (-1)^{#Y} P.
  double transpose_sign() const;

  /// True iff every supported qubit carries the same axis in `basis`
  /// (one character per qubit, from {'X','Y','Z'}). The support must
  /// lie within the basis register.
  bool matches(std::string_view basis) const;

  /// Largest supported qubit index plus one; 0 for the identity.
  int min_register() const {
    return support.empty() ? 0 : support.rbegin()->first + 1;
  }

  /// Dense matrix over `n_qubits` qubits (qubit 0 is the leftmost
  /// tensor factor). Intended for small registers only.
  ComplexMatrix to_matrix(int n_qubits) const;

  std::string to_text() const;
};

/// A real linear combination of Pauli strings. Terms with identical
/// support patterns are merged on construction; terms whose merged
/// coefficient vanishes are dropped.
class Observable {
 public:
  Observable() = default;
  explicit Observable(std::vector<PauliString> terms);
  explicit Observable(PauliString term)
      : Observable(std::vector<PauliString>{std::move(term)}) {}

  const std::vector<PauliString>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Union of all term supports.
  std::set<int> support() const;

  /// Sum of |coefficients|; an upper bound on the operator norm.
  double infinity_norm_bound() const;

  /// Parses the text form "X1 Y4 Z7" or "0.5*X1 Z2" (axis followed by a
  /// 1-based qubit index, whitespace separated, optional leading
  /// coefficient). Produces a single-term observable.
  static Observable parse_text(std::string_view text);

  ComplexMatrix to_matrix(int n_qubits) const;

 private:
  std::vector<PauliString> terms_;
};

/// Expands a Hermitian operator over `qubits` qubits in the Pauli-string
/// basis: coefficients alpha_P = tr(P op) / 2^q, so that
/// sum_P alpha_P P reconstructs op. Restricted to at most 4 qubits (the
/// expansion has 4^q terms). Throws ValidationError if the operator is
/// not Hermitian (any coefficient with imaginary part above 1e-10).
Observable pauli_expand(const ComplexMatrix& op, int qubits);

// Observable JSON: {"terms":[{"coeff":0.5,"ops":{"1":"X","4":"Y"}}]},
// qubit keys 1-based.
nlohmann::json observable_to_json(const Observable& obs);
Observable observable_from_json(const nlohmann::json& j);

}  // namespace shadowcut
