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

#include "shadowcut/cutter.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "shadowcut/errors.hpp"

namespace shadowcut {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::pair<int, int> FragmentGraph::c_out_owner(int wire) const {
  for (const auto& f : fragments) {
    for (std::size_t slot = 0; slot < f.c_out.size(); ++slot) {
      if (f.c_out_wire(static_cast<int>(slot)) == wire) {
        return {f.id, static_cast<int>(slot)};
      }
    }
  }
  throw ValidationError("wire " + std::to_string(wire + 1) +
                        " is not a circuit output of any fragment");
}

std::vector<int> Partition::surviving() const {
  std::vector<int> out = kappa;
  out.insert(out.end(), gamma.begin(), gamma.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Partition::survives(int fragment_id) const {
  return std::find(kappa.begin(), kappa.end(), fragment_id) != kappa.end() ||
         std::find(gamma.begin(), gamma.end(), fragment_id) != gamma.end();
}

FragmentGraph cut_circuit(const Circuit& circuit,
                          const std::vector<CutSpec>& cuts) {
  circuit.validate();
  const int n_gates = static_cast<int>(circuit.gates.size());

  // Gate ordinals per wire, in time order.
  std::vector<std::vector<int>> wire_gates(
      static_cast<std::size_t>(circuit.n_qubits));
  for (int g = 0; g < n_gates; ++g) {
    for (int w : circuit.gates[static_cast<std::size_t>(g)].qubits) {
      wire_gates[static_cast<std::size_t>(w)].push_back(g);
    }
  }

  // Validate cuts and gather per-wire cut positions.
  std::vector<std::vector<int>> wire_cuts(
      static_cast<std::size_t>(circuit.n_qubits));
  for (const auto& cut : cuts) {
    if (cut.wire < 0 || cut.wire >= circuit.n_qubits) {
      throw ValidationError("cut wire out of range");
    }
    if (cut.after_gate < 0 || cut.after_gate >= n_gates) {
      throw ValidationError("cut gate ordinal out of range");
    }
    auto& positions = wire_cuts[static_cast<std::size_t>(cut.wire)];
    if (std::find(positions.begin(), positions.end(), cut.after_gate) !=
        positions.end()) {
      throw ValidationError("duplicate cut on wire " +
                            std::to_string(cut.wire + 1));
    }
    positions.push_back(cut.after_gate);
  }
  for (int w = 0; w < circuit.n_qubits; ++w) {
    auto& positions = wire_cuts[static_cast<std::size_t>(w)];
    std::sort(positions.begin(), positions.end());
    const auto& gw = wire_gates[static_cast<std::size_t>(w)];
    if (positions.empty()) continue;
    if (gw.empty()) {
      throw ValidationError("cut on unused wire " + std::to_string(w + 1));
    }
    for (std::size_t j = 0; j < positions.size(); ++j) {
      const int p = positions[j];
      const bool has_before =
          std::any_of(gw.begin(), gw.end(), [p](int g) { return g <= p; });
      const bool has_after =
          std::any_of(gw.begin(), gw.end(), [p](int g) { return g > p; });
      if (!has_before || !has_after) {
        throw ValidationError("cut on wire " + std::to_string(w + 1) +
                              " after gate " + std::to_string(p + 1) +
                              " separates nothing");
      }
      if (j > 0) {
        const int prev = positions[j - 1];
        const bool has_between = std::any_of(
            gw.begin(), gw.end(), [&](int g) { return g > prev && g <= p; });
        if (!has_between) {
          throw ValidationError(
              "cuts on wire " + std::to_string(w + 1) +
              " after gates " + std::to_string(prev + 1) + " and " +
              std::to_string(p + 1) + " have no gate between them");
        }
      }
    }
  }

  // Segment index of gate g on wire w: number of cut positions < g.
  auto segment_of = [&](int w, int g) {
    const auto& positions = wire_cuts[static_cast<std::size_t>(w)];
    return static_cast<int>(
        std::lower_bound(positions.begin(), positions.end(), g) -
        positions.begin());
  };

  // Gates adjacent on an uncut stretch of wire belong together.
  UnionFind uf(static_cast<std::size_t>(std::max(n_gates, 1)));
  for (int w = 0; w < circuit.n_qubits; ++w) {
    const auto& gw = wire_gates[static_cast<std::size_t>(w)];
    for (std::size_t i = 1; i < gw.size(); ++i) {
      if (segment_of(w, gw[i - 1]) == segment_of(w, gw[i])) {
        uf.unite(gw[i - 1], gw[i]);
      }
    }
  }

  // Fragment ids ordered by smallest contained gate ordinal.
  std::map<int, int> root_to_id;
  for (int g = 0; g < n_gates; ++g) {
    const int root = uf.find(g);
    if (!root_to_id.count(root)) {
      const int id = static_cast<int>(root_to_id.size());
      root_to_id[root] = id;
    }
  }
  const int n_fragments = std::max<int>(1, static_cast<int>(root_to_id.size()));
  auto fragment_of_gate = [&](int g) { return root_to_id.at(uf.find(g)); };

  FragmentGraph graph;
  graph.n_qubits = circuit.n_qubits;
  graph.fragments.resize(static_cast<std::size_t>(n_fragments));
  for (int f = 0; f < n_fragments; ++f) {
    graph.fragments[static_cast<std::size_t>(f)].id = f;
  }

  // Owner fragment of each (wire, segment); wires untouched by any gate
  // attach to fragment 0.
  auto owner_of_segment = [&](int w, int s) {
    const auto& gw = wire_gates[static_cast<std::size_t>(w)];
    for (int g : gw) {
      if (segment_of(w, g) == s) return fragment_of_gate(g);
    }
    assert(gw.empty());
    return 0;
  };

  // Local wires: per fragment, segments sorted by (wire, segment).
  std::map<std::pair<int, int>, int> local_wire;  // (wire, segment) -> local
  for (int w = 0; w < circuit.n_qubits; ++w) {
    const int n_segments =
        static_cast<int>(wire_cuts[static_cast<std::size_t>(w)].size()) + 1;
    for (int s = 0; s < n_segments; ++s) {
      const int f = owner_of_segment(w, s);
      auto& frag = graph.fragments[static_cast<std::size_t>(f)];
      local_wire[{w, s}] = static_cast<int>(frag.wire_origin.size());
      frag.wire_origin.push_back(w);
    }
  }

  // Slots. A segment that starts at a cut is a quantum input; one that
  // ends at a cut is a quantum output; one that reaches the circuit end
  // is a circuit output. Slot lists inherit the (wire, segment) order.
  std::map<std::pair<int, int>, int> q_in_slot;   // (wire, cut index) -> slot
  std::map<std::pair<int, int>, int> q_out_slot;  // (wire, cut index) -> slot
  for (int w = 0; w < circuit.n_qubits; ++w) {
    const int n_cuts_w =
        static_cast<int>(wire_cuts[static_cast<std::size_t>(w)].size());
    for (int s = 0; s <= n_cuts_w; ++s) {
      const int f = owner_of_segment(w, s);
      auto& frag = graph.fragments[static_cast<std::size_t>(f)];
      const int lw = local_wire.at({w, s});
      if (s > 0) {
        q_in_slot[{w, s - 1}] = static_cast<int>(frag.q_in.size());
        frag.q_in.push_back(lw);
      }
      if (s < n_cuts_w) {
        q_out_slot[{w, s}] = static_cast<int>(frag.q_out.size());
        frag.q_out.push_back(lw);
      } else {
        frag.c_out.push_back(lw);
      }
    }
  }

  // Edges in canonical (wire, position) order.
  for (int w = 0; w < circuit.n_qubits; ++w) {
    const int n_cuts_w =
        static_cast<int>(wire_cuts[static_cast<std::size_t>(w)].size());
    for (int j = 0; j < n_cuts_w; ++j) {
      FragmentEdge edge;
      edge.wire = w;
      edge.from = owner_of_segment(w, j);
      edge.to = owner_of_segment(w, j + 1);
      edge.from_slot = q_out_slot.at({w, j});
      edge.to_slot = q_in_slot.at({w, j});
      if (edge.from == edge.to) {
        throw ValidationError(
            "cut on wire " + std::to_string(w + 1) +
            " creates a self-loop edge (both sides fall in one fragment); "
            "self-loops are unsupported");
      }
      graph.edges.push_back(edge);
    }
  }

  // Subcircuits, gates in original order with wires remapped.
  for (int g = 0; g < n_gates; ++g) {
    const int f = fragment_of_gate(g);
    auto& frag = graph.fragments[static_cast<std::size_t>(f)];
    Gate gate = circuit.gates[static_cast<std::size_t>(g)];
    for (auto& w : gate.qubits) w = local_wire.at({w, segment_of(w, g)});
    frag.subcircuit.gates.push_back(std::move(gate));
    frag.gate_ordinals.push_back(g);
  }
  for (auto& frag : graph.fragments) {
    frag.subcircuit.n_qubits =
        std::max<int>(1, static_cast<int>(frag.wire_origin.size()));
  }

  return graph;
}

Partition partition_for_observable(const FragmentGraph& graph,
                                   const std::set<int>& observable_support) {
  std::set<int> kappa_set;
  for (int wire : observable_support) {
    if (wire < 0 || wire >= graph.n_qubits) {
      throw ValidationError("observable qubit " + std::to_string(wire + 1) +
                            " outside the circuit register");
    }
    kappa_set.insert(graph.c_out_owner(wire).first);
  }

  // Reverse reachability from kappa over the multigraph.
  std::set<int> reachable = kappa_set;
  std::deque<int> frontier(kappa_set.begin(), kappa_set.end());
  while (!frontier.empty()) {
    const int f = frontier.front();
    frontier.pop_front();
    for (const auto& e : graph.edges) {
      if (e.to == f && !reachable.count(e.from)) {
        reachable.insert(e.from);
        frontier.push_back(e.from);
      }
    }
  }

  Partition part;
  for (const auto& f : graph.fragments) {
    if (kappa_set.count(f.id)) {
      part.kappa.push_back(f.id);
    } else if (reachable.count(f.id)) {
      part.gamma.push_back(f.id);
    } else {
      part.delta.push_back(f.id);
    }
  }

  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& e = graph.edges[i];
    const bool from_delta = !reachable.count(e.from);
    const bool to_delta = !reachable.count(e.to);
    // An edge out of delta would contradict the ancestor closure.
    assert(!(from_delta && !to_delta));
    if (from_delta && to_delta) {
      part.e_delta.push_back(static_cast<int>(i));
    } else if (to_delta) {
      part.e_not_delta_to_delta.push_back(static_cast<int>(i));
    } else {
      part.e_not_delta.push_back(static_cast<int>(i));
    }
  }
  return part;
}

Partition partition_for_observable(const FragmentGraph& graph,
                                   const Observable& observable) {
  return partition_for_observable(graph, observable.support());
}

Reduction reduce(const FragmentGraph& graph, const Partition& partition) {
  Reduction red;
  red.surviving_fragments = partition.surviving();
  red.m_edges = partition.e_not_delta;
  for (int idx : partition.e_not_delta_to_delta) {
    const auto& e = graph.edges[static_cast<std::size_t>(idx)];
    red.identity_q_out.emplace_back(e.from, e.from_slot);
  }
  return red;
}

nlohmann::json cuts_to_json(const std::vector<CutSpec>& cuts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cuts) {
    arr.push_back({{"wire", c.wire + 1}, {"after_gate", c.after_gate + 1}});
  }
  return nlohmann::json{{"cuts", std::move(arr)}};
}

std::vector<CutSpec> cuts_from_json(const nlohmann::json& j) {
  std::vector<CutSpec> cuts;
  for (const auto& entry : j.at("cuts")) {
    cuts.push_back(CutSpec{entry.at("wire").get<int>() - 1,
                           entry.at("after_gate").get<int>() - 1});
  }
  return cuts;
}

nlohmann::json fragment_graph_to_json(const FragmentGraph& graph) {
  nlohmann::json fragments = nlohmann::json::array();
  for (const auto& f : graph.fragments) {
    nlohmann::json wire_origin = nlohmann::json::array();
    for (int w : f.wire_origin) wire_origin.push_back(w + 1);
    auto plus_one = [](const std::vector<int>& v) {
      nlohmann::json arr = nlohmann::json::array();
      for (int x : v) arr.push_back(x + 1);
      return arr;
    };
    nlohmann::json ordinals = nlohmann::json::array();
    for (int g : f.gate_ordinals) ordinals.push_back(g + 1);
    fragments.push_back({{"id", f.id},
                         {"n_wires", f.subcircuit.n_qubits},
                         {"wire_origin", std::move(wire_origin)},
                         {"q_in", plus_one(f.q_in)},
                         {"q_out", plus_one(f.q_out)},
                         {"c_out", plus_one(f.c_out)},
                         {"gate_ordinals", std::move(ordinals)},
                         {"gates", circuit_to_json(f.subcircuit)["gates"]}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"from", e.from},
                     {"from_slot", e.from_slot},
                     {"to", e.to},
                     {"to_slot", e.to_slot},
                     {"wire", e.wire + 1}});
  }
  return nlohmann::json{{"n_qubits", graph.n_qubits},
                        {"fragments", std::move(fragments)},
                        {"edges", std::move(edges)}};
}

}  // namespace shadowcut
