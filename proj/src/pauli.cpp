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

#include "shadowcut/pauli.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "shadowcut/errors.hpp"

namespace shadowcut {

using Complex = std::complex<double>;

char axis_char(Axis a) { return static_cast<char>(a); }

Axis axis_from_char(char c) {
  switch (c) {
    case 'X':
    case 'x':
      return Axis::X;
    case 'Y':
    case 'y':
      return Axis::Y;
    case 'Z':
    case 'z':
      return Axis::Z;
    default:
      throw ValidationError(std::string("unknown Pauli axis '") + c + "'");
  }
}

ComplexMatrix axis_matrix(Axis a) {
  ComplexMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (a) {
    case Axis::X:
      m << 0, 1, 1, 0;
      break;
    case Axis::Y:
      m << 0, -i, i, 0;
      break;
    case Axis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

double PauliString::transpose_sign() const {
  int y_count = 0;
  for (const auto& [q, a] : support) {
    if (a == Axis::Y) ++y_count;
  }
  return (y_count % 2 == 0) ? 1.0 : -1.0;
}

bool PauliString::matches(std::string_view basis) const {
  for (const auto& [q, a] : support) {
    if (q < 0 || static_cast<std::size_t>(q) >= basis.size()) {
      throw ValidationError("Pauli support qubit " + std::to_string(q) +
                            " outside measurement register of size " +
                            std::to_string(basis.size()));
    }
    if (basis[static_cast<std::size_t>(q)] != axis_char(a)) return false;
  }
  return true;
}

ComplexMatrix PauliString::to_matrix(int n_qubits) const {
  if (n_qubits > kMaxDensityMatrixQubits) {
    throw SizeLimitError("dense Pauli matrix over " +
                         std::to_string(n_qubits) + " qubits refused");
  }
  if (!support.empty() && support.rbegin()->first >= n_qubits) {
    throw ValidationError("Pauli support exceeds register");
  }
  // Qubit 0 is the leftmost tensor factor, so build from the last qubit
  // outward: kron(factor_q, accumulated).
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int q = n_qubits - 1; q >= 0; --q) {
    ComplexMatrix factor = ComplexMatrix::Identity(2, 2);
    if (auto it = support.find(q); it != support.end()) {
      factor = axis_matrix(it->second);
    }
    ComplexMatrix next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) =
            factor(r, c) * out;
      }
    }
    out = std::move(next);
  }
  return coeff * out;
}

std::string PauliString::to_text() const {
  std::ostringstream os;
  if (coeff != 1.0) os << coeff << "*";
  if (support.empty()) {
    os << "I";
    return os.str();
  }
  bool first = true;
  for (const auto& [q, a] : support) {
    if (!first) os << " ";
    os << axis_char(a) << (q + 1);
    first = false;
  }
  return os.str();
}

Observable::Observable(std::vector<PauliString> terms) {
  for (auto& t : terms) {
    bool merged = false;
    for (auto& existing : terms_) {
      if (existing.support == t.support) {
        existing.coeff += t.coeff;
        merged = true;
        break;
      }
    }
    if (!merged) terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const PauliString& p) { return p.coeff == 0.0; });
}

std::set<int> Observable::support() const {
  std::set<int> qubits;
  for (const auto& t : terms_)
    for (const auto& [q, a] : t.support) qubits.insert(q);
  return qubits;
}

double Observable::infinity_norm_bound() const {
  double total = 0.0;
  for (const auto& t : terms_) total += std::abs(t.coeff);
  return total;
}

Observable Observable::parse_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  PauliString term;
  std::string token;
  bool first = true;
  while (is >> token) {
    if (first) {
      first = false;
      if (auto star = token.find('*'); star != std::string::npos) {
        term.coeff = std::strtod(token.substr(0, star).c_str(), nullptr);
        token = token.substr(star + 1);
        if (token.empty()) continue;
      }
    }
    if (token == "I" || token == "i") continue;  // explicit identity
    const Axis axis = axis_from_char(token[0]);
    char* end = nullptr;
    const long index = std::strtol(token.c_str() + 1, &end, 10);
    if (end == token.c_str() + 1 || *end != '\0' || index < 1) {
      throw ValidationError("bad observable token '" + token +
                            "' (expected e.g. X3 with a 1-based index)");
    }
    const int qubit = static_cast<int>(index) - 1;
    if (term.support.count(qubit)) {
      throw ValidationError("qubit " + std::to_string(index) +
                            " listed twice in observable");
    }
    term.support.emplace(qubit, axis);
  }
  return Observable(std::move(term));
}

ComplexMatrix Observable::to_matrix(int n_qubits) const {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : terms_) out += t.to_matrix(n_qubits);
  return out;
}

nlohmann::json observable_to_json(const Observable& obs) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : obs.terms()) {
    nlohmann::json ops = nlohmann::json::object();
    for (const auto& [q, a] : t.support) {
      ops[std::to_string(q + 1)] = std::string(1, axis_char(a));
    }
    terms.push_back({{"coeff", t.coeff}, {"ops", std::move(ops)}});
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

Observable observable_from_json(const nlohmann::json& j) {
  std::vector<PauliString> terms;
  for (const auto& term : j.at("terms")) {
    PauliString p;
    p.coeff = term.value("coeff", 1.0);
    for (const auto& [key, axis] : term.at("ops").items()) {
      const int qubit = std::stoi(key) - 1;
      if (qubit < 0) throw ValidationError("qubit keys are 1-based");
      p.support.emplace(qubit,
                        axis_from_char(axis.get<std::string>().at(0)));
    }
    terms.push_back(std::move(p));
  }
  return Observable(std::move(terms));
}

Observable pauli_expand(const ComplexMatrix& op, int qubits) {
  if (qubits < 1 || qubits > 4) {
    throw SizeLimitError("pauli_expand supports 1..4 qubits, got " +
                         std::to_string(qubits));
  }
  const Eigen::Index dim = Eigen::Index(1) << qubits;
  if (op.rows() != dim || op.cols() != dim) {
    throw ValidationError("operator dimension does not match qubit count");
  }

  std::vector<PauliString> terms;
  const long n_strings = 1L << (2 * qubits);  // 4^q patterns, digit 0 = I
  for (long code = 0; code < n_strings; ++code) {
    PauliString p;
    long c = code;
    for (int q = 0; q < qubits; ++q) {
      const int digit = static_cast<int>(c % 4);
      c /= 4;
      if (digit == 1) p.support.emplace(q, Axis::X);
      if (digit == 2) p.support.emplace(q, Axis::Y);
      if (digit == 3) p.support.emplace(q, Axis::Z);
    }
    const Complex alpha = (p.to_matrix(qubits) * op).trace() /
                          static_cast<double>(dim);
    if (std::abs(alpha.imag()) > 1e-10) {
      throw ValidationError("pauli_expand requires a Hermitian operator");
    }
    if (std::abs(alpha.real()) > 1e-14) {
      p.coeff = alpha.real();
      terms.push_back(std::move(p));
    }
  }
  return Observable(std::move(terms));
}

}  // namespace shadowcut
