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
#include <iosfwd>
#include <string>
#include <vector>

#include "shadowcut/circuit.hpp"
#include "shadowcut/cutter.hpp"
#include "shadowcut/rng.hpp"

namespace shadowcut {

/// One shot of a random-Pauli-basis measurement: the per-qubit basis
/// trit-string and the +-1 outcome per qubit.
struct ShadowSample {
  std::string basis;                  // one of 'X','Y','Z' per qubit
  std::vector<std::int8_t> outcome;   // +1 for |0>, -1 for |1>
};

/// A classical shadow: i.i.d. (basis, outcome) records over a fixed
/// register, plus enough provenance to regenerate it bit-identically.
struct ShadowEnsemble {
  int register_size = 0;
  std::vector<ShadowSample> samples;
  std::string provenance;   // e.g. "circuit:<hash>" or "fragment:2:<hash>"
  std::uint64_t seed = 0;
};

/// Positions of the conceptual Choi register [ancillas | quantum outputs
/// | circuit outputs] inside the physical sampling register. Slot order
/// matches the fragment's q_in / q_out / c_out slot order.
struct ChoiRegisterLayout {
  std::vector<int> ancilla_slots;
  std::vector<int> q_out_slots;
  std::vector<int> c_out_slots;

  int register_size() const {
    return static_cast<int>(ancilla_slots.size() + q_out_slots.size() +
                            c_out_slots.size());
  }
};

/// The physical circuit whose output state is the fragment's unit-trace
/// Choi state: one ancilla per quantum input, maximally entangled with
/// it (H then CNOT), classical inputs starting in |0>, then the
/// fragment's own gates.
Circuit choi_circuit(const Fragment& fragment);
ChoiRegisterLayout choi_layout(const Fragment& fragment);

/// Collects `shots` random-Pauli-basis snapshots of the circuit's output
/// state: per shot, every qubit's basis is drawn uniformly from
/// {X, Y, Z}, the state is rotated and the computational basis sampled.
ShadowEnsemble collect_state_shadow(const Circuit& circuit, long shots,
                                    const RngStream& stream);

/// Shadow of a fragment's Choi state via the ancilla construction.
/// With no quantum inputs this is exactly collect_state_shadow of the
/// subcircuit.
std::pair<ShadowEnsemble, ChoiRegisterLayout> collect_choi_shadow(
    const Fragment& fragment, long shots, const RngStream& stream);

struct EstimateResult {
  double value = 0.0;
  long n_matched = 0;
};

/// Matched-average estimator: over samples whose basis matches `p` on
/// its support, average the product of outcomes at the support, times
/// the coefficient. With no matching samples the estimate defaults to
/// zero (the uniform prior for a traceless Pauli), with n_matched = 0
/// left for the caller to inspect.
EstimateResult estimate(const ShadowEnsemble& ensemble, const PauliString& p);

/// Median-of-means variant: contiguous equal-size groups, matched
/// average per group, median of the group means. groups = 1 reduces to
/// the plain estimate.
double estimate_mom(const ShadowEnsemble& ensemble, const PauliString& p,
                    long groups);

/// Analytic probability that a weight-w Pauli pattern is never matched
/// in `shots` uniform basis draws: (1 - 3^-w)^shots.
double unobserved_probability(int weight, long shots);

// Shadow files are JSON lines: a header object carrying register size,
// provenance, seed and layout, then one {"b":"XZY..","m":[1,-1,..]}
// record per shot.
void write_shadow_file(std::ostream& os, const ShadowEnsemble& ensemble,
                       const ChoiRegisterLayout& layout);
std::pair<ShadowEnsemble, ChoiRegisterLayout> read_shadow_file(
    std::istream& is);

}  // namespace shadowcut
