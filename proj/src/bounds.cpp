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

#include "shadowcut/bounds.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "shadowcut/errors.hpp"

namespace shadowcut {

ComplexityQuote theorem2_quote(int n_fragments, int n_edges,
                               int observable_size, int surviving, int degree,
                               int quantum_degree, double epsilon,
                               double delta, double o_norm) {
  if (epsilon <= 0.0 || epsilon >= 1.0 || delta <= 0.0 || delta >= 1.0) {
    throw ValidationError("epsilon and delta must lie in (0, 1)");
  }
  if (n_fragments < 1 || surviving < 1) {
    throw ValidationError("fragment counts must be positive");
  }

  ComplexityQuote q;
  q.epsilon = epsilon;
  q.delta = delta;
  q.n_fragments = n_fragments;
  q.n_edges = n_edges;
  q.observable_size = observable_size;
  q.surviving = surviving;
  q.degree = degree;
  q.quantum_degree = quantum_degree;
  q.o_norm = o_norm;

  q.k_groups = std::pow(2.0, quantum_degree + 1) *
               std::log(2.0 * n_fragments / delta);
  q.k_groups_alt =
      2.0 * std::log(2.0 * n_fragments * std::pow(4.0, quantum_degree) /
                     delta);
  q.n_per_group = 34.0 * (n_edges + observable_size) * surviving /
                  (epsilon * epsilon) * std::pow(4.0, degree) *
                  o_norm * o_norm;
  q.total_shadows = q.k_groups * q.n_per_group;
  return q;
}

ComplexityQuote theorem2_quote(const FragmentGraph& graph,
                               const Partition& partition,
                               const Fragment& fragment, double epsilon,
                               double delta, double o_norm,
                               int observable_size) {
  if (!partition.survives(fragment.id)) {
    throw ValidationError("fragment " + std::to_string(fragment.id) +
                          " was eliminated by the partition");
  }
  ComplexityQuote q = theorem2_quote(
      static_cast<int>(graph.fragments.size()),
      static_cast<int>(graph.edges.size()), observable_size,
      static_cast<int>(partition.kappa.size() + partition.gamma.size()),
      fragment.degree(), fragment.quantum_degree(), epsilon, delta, o_norm);
  q.fragment_id = fragment.id;
  return q;
}

double lemma2_product_std(const std::vector<double>& values, double epsilon) {
  double perturbed = 1.0;
  double clean = 1.0;
  for (double a : values) {
    perturbed *= epsilon * epsilon + a * a;
    clean *= a * a;
  }
  return std::sqrt(perturbed - clean);
}

double lemma2_monte_carlo(int n, double epsilon, long trials, RngStream& rng) {
  if (trials < 1) throw ValidationError("trials must be positive");
  double sum = 0.0, sum_sq = 0.0;
  for (long t = 0; t < trials; ++t) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= 1.0 + epsilon * rng.normal();
    sum += prod;
    sum_sq += prod * prod;
  }
  const double mean = sum / static_cast<double>(trials);
  const double var =
      (sum_sq / static_cast<double>(trials) - mean * mean) *
      (static_cast<double>(trials) / static_cast<double>(trials - 1));
  return std::sqrt(std::max(var, 0.0));
}

double lemma2_sum_monte_carlo(int n, double epsilon, long trials,
                              RngStream& rng) {
  if (trials < 1) throw ValidationError("trials must be positive");
  double sum = 0.0, sum_sq = 0.0;
  for (long t = 0; t < trials; ++t) {
    double dev = 0.0;
    for (int i = 0; i < n; ++i) dev += epsilon * rng.normal();
    sum += dev;
    sum_sq += dev * dev;
  }
  const double mean = sum / static_cast<double>(trials);
  const double var =
      (sum_sq / static_cast<double>(trials) - mean * mean) *
      (static_cast<double>(trials) / static_cast<double>(trials - 1));
  return std::sqrt(std::max(var, 0.0));
}

nlohmann::json quote_to_json(const ComplexityQuote& q) {
  return nlohmann::json{{"fragment", q.fragment_id},
                        {"k_groups", q.k_groups},
                        {"k_groups_alt", q.k_groups_alt},
                        {"n_per_group", q.n_per_group},
                        {"total_shadows", q.total_shadows},
                        {"epsilon", q.epsilon},
                        {"delta", q.delta},
                        {"n_fragments", q.n_fragments},
                        {"n_edges", q.n_edges},
                        {"observable_size", q.observable_size},
                        {"surviving", q.surviving},
                        {"degree", q.degree},
                        {"quantum_degree", q.quantum_degree},
                        {"o_norm", q.o_norm},
                        {"log_base", "natural"}};
}

}  // namespace shadowcut
