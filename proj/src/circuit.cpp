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

#include "shadowcut/circuit.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "shadowcut/errors.hpp"

namespace shadowcut {

using Complex = std::complex<double>;
using nlohmann::json;

namespace {

ComplexMatrix named_matrix(const std::string& name) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  ComplexMatrix m;
  if (name == "id" || name == "i") {
    m = ComplexMatrix::Identity(2, 2);
  } else if (name == "h") {
    m.resize(2, 2);
    m << s, s, s, -s;
  } else if (name == "x") {
    m = axis_matrix(Axis::X);
  } else if (name == "y") {
    m = axis_matrix(Axis::Y);
  } else if (name == "z") {
    m = axis_matrix(Axis::Z);
  } else if (name == "s") {
    m.resize(2, 2);
    m << 1, 0, 0, i;
  } else if (name == "sdg") {
    m.resize(2, 2);
    m << 1, 0, 0, -i;
  } else if (name == "t") {
    m.resize(2, 2);
    m << 1, 0, 0, std::exp(i * (M_PI / 4.0));
  } else if (name == "tdg") {
    m.resize(2, 2);
    m << 1, 0, 0, std::exp(-i * (M_PI / 4.0));
  } else if (name == "cnot" || name == "cx") {
    m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
  } else if (name == "cz") {
    m = ComplexMatrix::Identity(4, 4);
    m(3, 3) = -1;
  } else if (name == "swap") {
    m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
  } else {
    throw ValidationError("unknown gate name '" + name + "'");
  }
  return m;
}

}  // namespace

Gate Gate::named(const std::string& name, std::vector<int> qubits) {
  Gate g;
  g.kind = Kind::Named;
  g.name = name;
  g.qubits = std::move(qubits);
  g.matrix = named_matrix(name);
  if (g.matrix.rows() != (Eigen::Index(1) << g.qubits.size())) {
    throw ValidationError("gate '" + name + "' takes a different wire count");
  }
  return g;
}

Gate Gate::haar(std::vector<int> qubits, std::uint64_t seed) {
  Gate g;
  g.kind = Kind::Haar;
  g.qubits = std::move(qubits);
  g.seed = seed;
  g.matrix = haar_random_unitary(static_cast<int>(g.qubits.size()), seed);
  return g;
}

Gate Gate::from_matrix(std::vector<int> qubits, ComplexMatrix m) {
  Gate g;
  g.kind = Kind::Matrix;
  g.qubits = std::move(qubits);
  g.matrix = std::move(m);
  if (g.matrix.rows() != g.matrix.cols() ||
      g.matrix.rows() != (Eigen::Index(1) << g.qubits.size())) {
    throw ValidationError("matrix dimension does not match wire count");
  }
  if (unitarity_defect(g.matrix) > 1e-10) {
    throw ValidationError("matrix gate is not unitary (|U^dag U - I| > 1e-10)");
  }
  return g;
}

void Circuit::validate() const {
  if (n_qubits < 1) throw ValidationError("circuit needs at least one qubit");
  for (const auto& g : gates) {
    if (g.qubits.empty()) throw ValidationError("gate with no wires");
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      if (g.qubits[a] < 0 || g.qubits[a] >= n_qubits) {
        throw ValidationError("gate wire out of range");
      }
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b) {
        if (g.qubits[a] == g.qubits[b]) {
          throw ValidationError("duplicate wire within a gate");
        }
      }
    }
  }
}

Statevector simulate(const Circuit& circuit) {
  circuit.validate();
  Statevector state = Statevector::zero(circuit.n_qubits);
  for (const auto& g : circuit.gates) state.apply(g.matrix, g.qubits);
  return state;
}

json circuit_to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates) {
    json entry;
    json qubits = json::array();
    for (int q : g.qubits) qubits.push_back(q + 1);
    entry["qubits"] = qubits;
    switch (g.kind) {
      case Gate::Kind::Named:
        entry["kind"] = "named";
        entry["name"] = g.name;
        break;
      case Gate::Kind::Haar:
        entry["kind"] = "haar";
        entry["seed"] = g.seed;
        break;
      case Gate::Kind::Matrix: {
        entry["kind"] = "matrix";
        json re = json::array(), im = json::array();
        for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
          json re_row = json::array(), im_row = json::array();
          for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) {
            re_row.push_back(g.matrix(r, c).real());
            im_row.push_back(g.matrix(r, c).imag());
          }
          re.push_back(std::move(re_row));
          im.push_back(std::move(im_row));
        }
        entry["re"] = std::move(re);
        entry["im"] = std::move(im);
        break;
      }
    }
    gates.push_back(std::move(entry));
  }
  return json{{"n_qubits", circuit.n_qubits}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  Circuit circuit;
  circuit.n_qubits = j.at("n_qubits").get<int>();
  for (const auto& entry : j.at("gates")) {
    std::vector<int> qubits;
    for (const auto& q : entry.at("qubits")) {
      qubits.push_back(q.get<int>() - 1);
    }
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "named") {
      circuit.gates.push_back(
          Gate::named(entry.at("name").get<std::string>(), std::move(qubits)));
    } else if (kind == "haar") {
      circuit.gates.push_back(
          Gate::haar(std::move(qubits), entry.at("seed").get<std::uint64_t>()));
    } else if (kind == "matrix") {
      const auto& re = entry.at("re");
      const auto& im = entry.at("im");
      const Eigen::Index dim = static_cast<Eigen::Index>(re.size());
      ComplexMatrix m(dim, dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
          m(r, c) = Complex(re[static_cast<std::size_t>(r)]
                              [static_cast<std::size_t>(c)].get<double>(),
                            im[static_cast<std::size_t>(r)]
                              [static_cast<std::size_t>(c)].get<double>());
        }
      }
      circuit.gates.push_back(Gate::from_matrix(std::move(qubits), std::move(m)));
    } else {
      throw ValidationError("unknown gate kind '" + kind + "'");
    }
  }
  circuit.validate();
  return circuit;
}

std::string circuit_hash(const Circuit& circuit) {
  const std::string dump = circuit_to_json(circuit).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace shadowcut
