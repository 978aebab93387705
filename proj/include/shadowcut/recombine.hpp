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

#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shadowcut/oracle.hpp"

namespace shadowcut {

/// One term of the sum over cut operators: a basis operator per free
/// edge, ordered like Reduction::m_edges. Edges that feed eliminated
/// fragments are pinned to the identity and do not appear here.
struct MAssignment {
  std::vector<BasisOp> ops;
};

/// Enumerates assignments lexicographically with I < X < Y < Z and the
/// first edge most significant. `index` ranges over 4^n_edges.
MAssignment m_assignment_at(std::size_t n_edges, std::uint64_t index);

/// The Pauli string a fragment must be queried with for one
/// (M-assignment, observable-term) pair, over its Choi register.
/// Input-slot factors carry the edge operator transposed -- the Y sign
/// is folded into the coefficient, the sampling axis never changes --
/// quantum-output slots carry the edge operator, and circuit-output
/// slots carry the observable term restricted to this fragment.
struct FragmentPlacement {
  int fragment_id = 0;
  PauliString pauli;  // coefficient = transpose sign
};

std::vector<FragmentPlacement> place_operators(const FragmentGraph& graph,
                                               const Partition& partition,
                                               const MAssignment& m,
                                               const PauliString& term);

/// Recombined-estimate output, including enough diagnostics to judge how
/// well sampled each factor was.
struct EstimateReport {
  double estimate = 0.0;
  int terms = 0;
  std::uint64_t m_assignments = 0;
  long unobserved_count = 0;  // (term, assignment, fragment) with no match
  bool any_unobserved = false;

  struct FragmentDiagnostics {
    int fragment = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long min_matched = 0;
    double mean_matched = 0.0;
  };
  std::vector<FragmentDiagnostics> per_fragment;

  /// n_matched per (term, assignment, surviving fragment), indexed
  /// [term][assignment][fragment position].
  std::vector<std::vector<std::vector<long>>> matched;
};

/// Evaluates the recombination formula from per-fragment shadow
/// ensembles: sum over observable terms and basis-operator assignments
/// of the product of per-fragment matched-average estimates. Ensembles
/// estimate unit-trace Choi states, so no explicit 1/2-per-edge factor
/// appears; the normalization is carried by the Choi states themselves.
/// The same per-fragment ensemble is reused across all placements.
EstimateReport recombine_estimate(
    const FragmentGraph& graph, const Partition& partition,
    const std::map<int, ShadowEnsemble>& ensembles,
    const Observable& observable);

/// Same contraction with exact Choi-state traces; the formula's
/// ground-truth evaluator.
double recombine_exact(const FragmentGraph& graph, const Partition& partition,
                       const std::map<int, ExactChoi>& chois,
                       const Observable& observable);

nlohmann::json estimate_report_to_json(const EstimateReport& report);

}  // namespace shadowcut
