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

#include "shadowcut/shadows.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "shadowcut/errors.hpp"

namespace shadowcut {

using nlohmann::json;

Circuit choi_circuit(const Fragment& fragment) {
  const int n_anc = fragment.quantum_inputs();
  const int n_wires = fragment.subcircuit.n_qubits;
  Circuit circuit;
  circuit.n_qubits = n_anc + n_wires;
  for (int k = 0; k < n_anc; ++k) {
    circuit.gates.push_back(Gate::named("h", {k}));
    circuit.gates.push_back(Gate::named(
        "cnot", {k, n_anc + fragment.q_in[static_cast<std::size_t>(k)]}));
  }
  for (const auto& g : fragment.subcircuit.gates) {
    Gate shifted = g;
    for (auto& w : shifted.qubits) w += n_anc;
    circuit.gates.push_back(std::move(shifted));
  }
  return circuit;
}

ChoiRegisterLayout choi_layout(const Fragment& fragment) {
  const int n_anc = fragment.quantum_inputs();
  ChoiRegisterLayout layout;
  for (int k = 0; k < n_anc; ++k) layout.ancilla_slots.push_back(k);
  for (int w : fragment.q_out) layout.q_out_slots.push_back(n_anc + w);
  for (int w : fragment.c_out) layout.c_out_slots.push_back(n_anc + w);
  return layout;
}

namespace {

ShadowEnsemble collect(const Statevector& state, long shots,
                       const RngStream& stream, std::string provenance) {
  if (shots < 0) throw ValidationError("negative shot count");
  const int n = state.n_qubits();
  ShadowEnsemble ensemble;
  ensemble.register_size = n;
  ensemble.provenance = std::move(provenance);
  ensemble.seed = stream.seed();
  ensemble.samples.reserve(static_cast<std::size_t>(shots));

  RngStream basis_rng = stream.child(0);
  RngStream outcome_rng = stream.child(1);
  static constexpr char kAxes[3] = {'X', 'Y', 'Z'};
  for (long s = 0; s < shots; ++s) {
    std::string basis(static_cast<std::size_t>(n), 'Z');
    for (int q = 0; q < n; ++q) {
      basis[static_cast<std::size_t>(q)] = kAxes[basis_rng.uniform_int(3)];
    }
    auto outcome = sample_in_bases(state, basis, 1, outcome_rng);
    ensemble.samples.push_back(ShadowSample{std::move(basis),
                                            std::move(outcome.front())});
  }
  return ensemble;
}

}  // namespace

ShadowEnsemble collect_state_shadow(const Circuit& circuit, long shots,
                                    const RngStream& stream) {
  return collect(simulate(circuit), shots, stream,
                 "circuit:" + circuit_hash(circuit));
}

std::pair<ShadowEnsemble, ChoiRegisterLayout> collect_choi_shadow(
    const Fragment& fragment, long shots, const RngStream& stream) {
  const Circuit circuit = choi_circuit(fragment);
  ShadowEnsemble ensemble =
      collect(simulate(circuit), shots, stream,
              "fragment:" + std::to_string(fragment.id) + ":" +
                  circuit_hash(circuit));
  return {std::move(ensemble), choi_layout(fragment)};
}

EstimateResult estimate(const ShadowEnsemble& ensemble, const PauliString& p) {
  if (!p.support.empty() &&
      p.support.rbegin()->first >= ensemble.register_size) {
    throw ValidationError("Pauli support exceeds the shadow register");
  }
  long matched = 0;
  double sum = 0.0;
  for (const auto& sample : ensemble.samples) {
    if (!p.matches(sample.basis)) continue;
    ++matched;
    double prod = 1.0;
    for (const auto& [q, a] : p.support) {
      prod *= sample.outcome[static_cast<std::size_t>(q)];
    }
    sum += prod;
  }
  if (matched == 0) return {0.0, 0};
  return {p.coeff * sum / static_cast<double>(matched), matched};
}

double estimate_mom(const ShadowEnsemble& ensemble, const PauliString& p,
                    long groups) {
  if (groups < 1) throw ValidationError("groups must be >= 1");
  const long total = static_cast<long>(ensemble.samples.size());
  if (groups > total) {
    throw ValidationError("more groups than samples");
  }
  if (groups == 1) return estimate(ensemble, p).value;

  std::vector<double> means;
  means.reserve(static_cast<std::size_t>(groups));
  const long base = total / groups;
  const long remainder = total % groups;
  std::size_t start = 0;
  for (long g = 0; g < groups; ++g) {
    const long size = base + (g < remainder ? 1 : 0);
    ShadowEnsemble group;
    group.register_size = ensemble.register_size;
    group.samples.assign(
        ensemble.samples.begin() + static_cast<std::ptrdiff_t>(start),
        ensemble.samples.begin() +
            static_cast<std::ptrdiff_t>(start + static_cast<std::size_t>(size)));
    start += static_cast<std::size_t>(size);
    means.push_back(estimate(group, p).value);
  }
  std::sort(means.begin(), means.end());
  const std::size_t mid = means.size() / 2;
  if (means.size() % 2 == 1) return means[mid];
  return 0.5 * (means[mid - 1] + means[mid]);
}

double unobserved_probability(int weight, long shots) {
  if (weight < 1) throw ValidationError("weight must be >= 1");
  if (shots < 0) throw ValidationError("negative shot count");
  const double match = std::pow(3.0, -weight);
  return std::pow(1.0 - match, static_cast<double>(shots));
}

void write_shadow_file(std::ostream& os, const ShadowEnsemble& ensemble,
                       const ChoiRegisterLayout& layout) {
  json header{{"format", "shadowcut-shadow-v1"},
              {"register_size", ensemble.register_size},
              {"provenance", ensemble.provenance},
              {"seed", ensemble.seed},
              {"layout",
               {{"ancilla", layout.ancilla_slots},
                {"q_out", layout.q_out_slots},
                {"c_out", layout.c_out_slots}}}};
  os << header.dump() << "\n";
  for (const auto& sample : ensemble.samples) {
    json record{{"b", sample.basis}, {"m", json::array()}};
    for (auto m : sample.outcome) record["m"].push_back(static_cast<int>(m));
    os << record.dump() << "\n";
  }
}

std::pair<ShadowEnsemble, ChoiRegisterLayout> read_shadow_file(
    std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw ValidationError("empty shadow file");
  }
  const json header = json::parse(line);
  if (header.value("format", "") != "shadowcut-shadow-v1") {
    throw ValidationError("not a shadowcut shadow file");
  }
  ShadowEnsemble ensemble;
  ensemble.register_size = header.at("register_size").get<int>();
  ensemble.provenance = header.value("provenance", "");
  ensemble.seed = header.value("seed", std::uint64_t{0});
  ChoiRegisterLayout layout;
  layout.ancilla_slots =
      header.at("layout").at("ancilla").get<std::vector<int>>();
  layout.q_out_slots = header.at("layout").at("q_out").get<std::vector<int>>();
  layout.c_out_slots = header.at("layout").at("c_out").get<std::vector<int>>();

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const json record = json::parse(line);
    ShadowSample sample;
    sample.basis = record.at("b").get<std::string>();
    for (const auto& m : record.at("m")) {
      sample.outcome.push_back(static_cast<std::int8_t>(m.get<int>()));
    }
    if (static_cast<int>(sample.basis.size()) != ensemble.register_size ||
        sample.outcome.size() != sample.basis.size()) {
      throw ValidationError("shadow record does not match register size");
    }
    ensemble.samples.push_back(std::move(sample));
  }
  return {std::move(ensemble), std::move(layout)};
}

}  // namespace shadowcut
