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

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shadowcut/cutter.hpp"
#include "shadowcut/rng.hpp"

namespace shadowcut {

/// Per-fragment sample-complexity quote: K groups of N shadows each.
/// The numbers use natural logarithms and are advisory -- they bound the
/// worst case and are not enforced as minimum shot counts.
struct ComplexityQuote {
  // Headline numbers.
  double k_groups = 0.0;        // 2^{qdeg+1} ln(2|F|/delta)
  double n_per_group = 0.0;     // 34 (|E|+|K|)(|kappa|+|gamma|)/eps^2 4^deg |O|^2
  double total_shadows = 0.0;   // K * N
  // Equivalent pre-rearrangement form of K, reported alongside.
  double k_groups_alt = 0.0;    // 2 ln(2|F| 4^{qdeg}/delta)

  // Echoed inputs.
  int fragment_id = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  int n_fragments = 0;
  int n_edges = 0;
  int observable_size = 0;
  int surviving = 0;  // |kappa| + |gamma|
  int degree = 0;
  int quantum_degree = 0;
  double o_norm = 0.0;
};

/// Evaluates the per-fragment quote from raw inputs.
ComplexityQuote theorem2_quote(int n_fragments, int n_edges,
                               int observable_size, int surviving, int degree,
                               int quantum_degree, double epsilon,
                               double delta, double o_norm);

/// Convenience overload reading the structural inputs off a fragment
/// graph and its partition. The fragment must survive the partition.
ComplexityQuote theorem2_quote(const FragmentGraph& graph,
                               const Partition& partition,
                               const Fragment& fragment, double epsilon,
                               double delta, double o_norm,
                               int observable_size);

/// Predicted standard deviation of the product of independently
/// perturbed estimates: exact closed form
/// sqrt(prod_i (eps^2 + a_i^2) - prod_i a_i^2), which is sqrt(n) eps to
/// leading order when |a_i| = 1.
double lemma2_product_std(const std::vector<double>& values, double epsilon);

/// Monte Carlo check of the product branch: unit values perturbed by
/// independent Gaussians of scale epsilon; returns the empirical std of
/// the product over `trials` draws.
double lemma2_monte_carlo(int n, double epsilon, long trials, RngStream& rng);

/// Monte Carlo check of the sum branch: empirical std of
/// sum_i (a_i_hat - a_i) over `trials` draws.
double lemma2_sum_monte_carlo(int n, double epsilon, long trials,
                              RngStream& rng);

nlohmann::json quote_to_json(const ComplexityQuote& quote);

}  // namespace shadowcut
