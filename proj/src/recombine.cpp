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

#include "shadowcut/recombine.hpp"

#include <algorithm>
#include <cassert>

#include <nlohmann/json.hpp>

#include "shadowcut/errors.hpp"

namespace shadowcut {

MAssignment m_assignment_at(std::size_t n_edges, std::uint64_t index) {
  MAssignment m;
  m.ops.resize(n_edges, BasisOp::I);
  for (std::size_t k = 0; k < n_edges; ++k) {
    const std::size_t shift = 2 * (n_edges - 1 - k);
    m.ops[k] = static_cast<BasisOp>((index >> shift) & 3);
  }
  return m;
}

namespace {

// Per-fragment view of how its slots connect to edges.
struct SlotWiring {
  std::vector<int> q_in_edge;   // q_in slot -> edge index
  std::vector<int> q_out_edge;  // q_out slot -> edge index
};

std::map<int, SlotWiring> wire_slots(const FragmentGraph& graph) {
  std::map<int, SlotWiring> wiring;
  for (const auto& f : graph.fragments) {
    SlotWiring w;
    w.q_in_edge.resize(f.q_in.size(), -1);
    w.q_out_edge.resize(f.q_out.size(), -1);
    wiring.emplace(f.id, std::move(w));
  }
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& e = graph.edges[i];
    wiring.at(e.to).q_in_edge[static_cast<std::size_t>(e.to_slot)] =
        static_cast<int>(i);
    wiring.at(e.from).q_out_edge[static_cast<std::size_t>(e.from_slot)] =
        static_cast<int>(i);
  }
  return wiring;
}

}  // namespace

std::vector<FragmentPlacement> place_operators(const FragmentGraph& graph,
                                               const Partition& partition,
                                               const MAssignment& m,
                                               const PauliString& term) {
  const Reduction red = reduce(graph, partition);
  if (m.ops.size() != red.m_edges.size()) {
    throw ValidationError("assignment length does not match free edge count");
  }

  // Edge index -> assigned operator. Edges into delta stay absent from
  // the map and read as identity.
  std::map<int, BasisOp> edge_op;
  for (std::size_t k = 0; k < red.m_edges.size(); ++k) {
    edge_op[red.m_edges[k]] = m.ops[k];
  }

  // Every supported wire of the term must be a surviving circuit output.
  for (const auto& [wire, axis] : term.support) {
    const auto [owner, slot] = graph.c_out_owner(wire);
    (void)slot;
    if (!partition.survives(owner)) {
      throw ValidationError(
          "observable term touches an eliminated fragment; partition does "
          "not match the term");
    }
  }

  const auto wiring = wire_slots(graph);
  std::vector<FragmentPlacement> placements;
  for (int fid : red.surviving_fragments) {
    const Fragment& frag = graph.fragments[static_cast<std::size_t>(fid)];
    const ChoiRegisterLayout layout = choi_layout(frag);
    const SlotWiring& slots = wiring.at(fid);

    FragmentPlacement placement;
    placement.fragment_id = fid;
    double sign = 1.0;

    for (std::size_t k = 0; k < slots.q_in_edge.size(); ++k) {
      const int edge = slots.q_in_edge[k];
      assert(edge >= 0);
      const auto it = edge_op.find(edge);
      // Incoming edges of survivors always carry a free operator.
      assert(it != edge_op.end());
      const BasisOp op = it->second;
      if (op == BasisOp::I) continue;
      const Axis axis = basis_op_axis(op);
      placement.pauli.support.emplace(layout.ancilla_slots[k], axis);
      if (axis == Axis::Y) sign = -sign;  // M^T at the input copy
    }
    for (std::size_t j = 0; j < slots.q_out_edge.size(); ++j) {
      const int edge = slots.q_out_edge[j];
      assert(edge >= 0);
      const auto it = edge_op.find(edge);
      if (it == edge_op.end()) continue;  // feeds delta: pinned to identity
      if (it->second == BasisOp::I) continue;
      placement.pauli.support.emplace(layout.q_out_slots[j],
                                      basis_op_axis(it->second));
    }
    for (std::size_t c = 0; c < frag.c_out.size(); ++c) {
      const int wire = frag.c_out_wire(static_cast<int>(c));
      if (auto it = term.support.find(wire); it != term.support.end()) {
        placement.pauli.support.emplace(layout.c_out_slots[c], it->second);
      }
    }
    placement.pauli.coeff = sign;
    placements.push_back(std::move(placement));
  }
  return placements;
}

EstimateReport recombine_estimate(
    const FragmentGraph& graph, const Partition& partition,
    const std::map<int, ShadowEnsemble>& ensembles,
    const Observable& observable) {
  const Reduction red = reduce(graph, partition);
  for (int fid : red.surviving_fragments) {
    if (!ensembles.count(fid)) {
      throw ValidationError("missing shadow ensemble for fragment " +
                            std::to_string(fid));
    }
  }
  if (red.m_edges.size() > 15) {
    throw SizeLimitError("recombination over " +
                         std::to_string(red.m_edges.size()) +
                         " free edges refused (4^k assignments)");
  }

  EstimateReport report;
  report.terms = static_cast<int>(observable.terms().size());
  report.m_assignments = std::uint64_t{1} << (2 * red.m_edges.size());

  for (int fid : red.surviving_fragments) {
    const auto& ens = ensembles.at(fid);
    report.per_fragment.push_back(
        {fid, static_cast<long>(ens.samples.size()), ens.seed, 0, 0.0});
  }

  double total = 0.0;
  for (const auto& term : observable.terms()) {
    std::vector<std::vector<long>> term_matched;
    double term_sum = 0.0;
    for (std::uint64_t mi = 0; mi < report.m_assignments; ++mi) {
      const MAssignment m = m_assignment_at(red.m_edges.size(), mi);
      PauliString bare = term;
      bare.coeff = 1.0;  // alpha_P applied once, below
      const auto placements = place_operators(graph, partition, m, bare);
      double prod = 1.0;
      std::vector<long> matched_row;
      matched_row.reserve(placements.size());
      for (const auto& pl : placements) {
        const EstimateResult res =
            estimate(ensembles.at(pl.fragment_id), pl.pauli);
        matched_row.push_back(res.n_matched);
        if (res.n_matched == 0) {
          ++report.unobserved_count;
          report.any_unobserved = true;
        }
        prod *= res.value;
      }
      term_sum += prod;
      term_matched.push_back(std::move(matched_row));
    }
    total += term.coeff * term_sum;
    report.matched.push_back(std::move(term_matched));
  }
  report.estimate = total;

  // Fold the matched table into per-fragment summary statistics.
  for (std::size_t pos = 0; pos < report.per_fragment.size(); ++pos) {
    long min_matched = -1;
    double sum = 0.0;
    long count = 0;
    for (const auto& term_matched : report.matched) {
      for (const auto& row : term_matched) {
        const long n = row[pos];
        min_matched = (min_matched < 0) ? n : std::min(min_matched, n);
        sum += static_cast<double>(n);
        ++count;
      }
    }
    report.per_fragment[pos].min_matched = std::max<long>(min_matched, 0);
    report.per_fragment[pos].mean_matched =
        count > 0 ? sum / static_cast<double>(count) : 0.0;
  }
  return report;
}

double recombine_exact(const FragmentGraph& graph, const Partition& partition,
                       const std::map<int, ExactChoi>& chois,
                       const Observable& observable) {
  const Reduction red = reduce(graph, partition);
  for (int fid : red.surviving_fragments) {
    if (!chois.count(fid)) {
      throw ValidationError("missing Choi state for fragment " +
                            std::to_string(fid));
    }
  }
  if (red.m_edges.size() > 15) {
    throw SizeLimitError("recombination over " +
                         std::to_string(red.m_edges.size()) +
                         " free edges refused (4^k assignments)");
  }

  const std::uint64_t n_assignments = std::uint64_t{1}
                                      << (2 * red.m_edges.size());
  double total = 0.0;
  for (const auto& term : observable.terms()) {
    double term_sum = 0.0;
    for (std::uint64_t mi = 0; mi < n_assignments; ++mi) {
      const MAssignment m = m_assignment_at(red.m_edges.size(), mi);
      PauliString bare = term;
      bare.coeff = 1.0;
      const auto placements = place_operators(graph, partition, m, bare);
      double prod = 1.0;
      for (const auto& pl : placements) {
        prod *= choi_expectation(chois.at(pl.fragment_id), pl.pauli);
      }
      term_sum += prod;
    }
    total += term.coeff * term_sum;
  }
  return total;
}

nlohmann::json estimate_report_to_json(const EstimateReport& report) {
  nlohmann::json per_fragment = nlohmann::json::array();
  nlohmann::json seeds = nlohmann::json::object();
  for (const auto& d : report.per_fragment) {
    per_fragment.push_back({{"fragment", d.fragment},
                            {"samples", d.samples},
                            {"seed", d.seed},
                            {"min_matched", d.min_matched},
                            {"mean_matched", d.mean_matched}});
    seeds["fragment-" + std::to_string(d.fragment)] = d.seed;
  }
  return nlohmann::json{{"estimate", report.estimate},
                        {"terms", report.terms},
                        {"m_assignments", report.m_assignments},
                        {"unobserved_count", report.unobserved_count},
                        {"any_unobserved", report.any_unobserved},
                        {"per_fragment", std::move(per_fragment)},
                        {"matched", report.matched},
                        {"seed_manifest", std::move(seeds)}};
}

}  // namespace shadowcut
