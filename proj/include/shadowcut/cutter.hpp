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

#include <set>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shadowcut/circuit.hpp"

namespace shadowcut {

/// A wire cut: severs `wire` immediately after the gate with ordinal
/// `after_gate` (both 0-based in memory, 1-based in JSON). Valid only if
/// the wire is acted on by some gate at or before the position and some
/// gate after it.
struct CutSpec {
  int wire = 0;
  int after_gate = 0;

  friend bool operator==(const CutSpec&, const CutSpec&) = default;
};

/// A subcircuit produced by cutting. Each cut splits an original wire
/// into segments; every segment becomes one local wire of the fragment
/// that owns its gates. A local wire starts either at the circuit start
/// (implicit |0> input) or at a cut (quantum input), and ends either at
/// a cut (quantum output) or at the circuit end (circuit output).
struct Fragment {
  int id = 0;
  Circuit subcircuit;              // over local wires
  std::vector<int> q_in;           // local wire per quantum-input slot
  std::vector<int> q_out;          // local wire per quantum-output slot
  std::vector<int> c_out;          // local wire per circuit-output slot
  std::vector<int> wire_origin;    // local wire -> original circuit wire
  std::vector<int> gate_ordinals;  // original ordinal of each subcircuit gate

  int quantum_inputs() const { return static_cast<int>(q_in.size()); }
  int quantum_outputs() const { return static_cast<int>(q_out.size()); }
  int circuit_outputs() const { return static_cast<int>(c_out.size()); }
  /// Q_i + Q_o + C_o.
  int degree() const {
    return quantum_inputs() + quantum_outputs() + circuit_outputs();
  }
  /// Q_i + Q_o.
  int quantum_degree() const { return quantum_inputs() + quantum_outputs(); }

  /// Original wire feeding circuit-output slot `slot`.
  int c_out_wire(int slot) const { return wire_origin[static_cast<std::size_t>(c_out[static_cast<std::size_t>(slot)])]; }
};

/// A cut wire joining two fragments: `from`'s quantum-output slot feeds
/// `to`'s quantum-input slot.
struct FragmentEdge {
  int from = 0;
  int from_slot = 0;
  int to = 0;
  int to_slot = 0;
  int wire = 0;  // original circuit wire
};

/// Directed multigraph of fragments. Edges between distinct fragments
/// may form directed cycles (a wire can leave a fragment and re-enter a
/// downstream gate of its neighbor); self-loop edges are rejected at
/// construction.
struct FragmentGraph {
  int n_qubits = 0;
  std::vector<Fragment> fragments;
  std::vector<FragmentEdge> edges;

  /// Fragment owning the circuit-output of an original wire, with the
  /// c_out slot index. Every wire ends as exactly one fragment's output.
  std::pair<int, int> c_out_owner(int wire) const;
};

/// Light-cone partition of a fragment graph for a given observable
/// support: kappa holds the observable's outputs, gamma its strict
/// ancestors, delta everything else. Edge indices are partitioned
/// accordingly; no edge can run from delta into its complement.
struct Partition {
  std::vector<int> kappa;
  std::vector<int> gamma;
  std::vector<int> delta;
  std::vector<int> e_not_delta;           // edge indices within kappa+gamma
  std::vector<int> e_not_delta_to_delta;  // edges leaving kappa+gamma
  std::vector<int> e_delta;               // edges within delta

  std::vector<int> surviving() const;  // kappa + gamma, sorted
  bool survives(int fragment_id) const;
};

/// Result of eliminating delta: the edges that still carry a basis
/// operator, and the quantum-output slots of surviving fragments that
/// are pinned to the identity (edges that used to feed delta, which is
/// equivalent to tracing those outputs).
struct Reduction {
  std::vector<int> surviving_fragments;
  std::vector<int> m_edges;  // edge indices carrying a free operator
  std::vector<std::pair<int, int>> identity_q_out;  // (fragment, q_out slot)
};

/// Splits a circuit along the given cuts into a fragment multigraph.
/// Fragments are the connected components of gate adjacency after
/// severing the cut wires, numbered by smallest contained gate ordinal.
/// Throws ValidationError for cuts on unused wires, duplicate or
/// separating-nothing cuts, and cuts whose two sides land in the same
/// fragment (self-loop).
FragmentGraph cut_circuit(const Circuit& circuit,
                          const std::vector<CutSpec>& cuts);

/// Computes the kappa/gamma/delta partition for an observable supported
/// on the given original wires. Ancestors are found by reverse
/// reachability over the multigraph, so cycles are handled naturally.
Partition partition_for_observable(const FragmentGraph& graph,
                                   const std::set<int>& observable_support);

Partition partition_for_observable(const FragmentGraph& graph,
                                   const Observable& observable);

/// Drops delta fragments and their internal edges; returns what remains.
Reduction reduce(const FragmentGraph& graph, const Partition& partition);

// Cut-list JSON: {"cuts":[{"wire":w,"after_gate":g}]}, 1-based in files.
nlohmann::json cuts_to_json(const std::vector<CutSpec>& cuts);
std::vector<CutSpec> cuts_from_json(const nlohmann::json& j);

/// Fragment-graph JSON with explicit slot tables (1-based wire indices).
nlohmann::json fragment_graph_to_json(const FragmentGraph& graph);

}  // namespace shadowcut
