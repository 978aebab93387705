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
#include <functional>
#include <iosfwd>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shadowcut/recombine.hpp"

namespace shadowcut {

/// The clustered circuit: one Haar block per cluster, two-qubit Haar
/// connectors between adjacent clusters, then a second layer of cluster
/// blocks. cuts_for[k] severs the first k connectors (two cuts each, on
/// the connector wire entering the lower cluster, before and after the
/// connector), yielding k+1 fragments.
struct ClusteredAnsatz {
  Circuit circuit;
  std::vector<std::vector<CutSpec>> cuts_for;
};

ClusteredAnsatz gen_clustered_ansatz(int clusters, int cluster_size,
                                     RngStream& rng);

/// Uniformly random Pauli string of exactly `size` support qubits on a
/// `width`-qubit register, unit coefficient.
PauliString random_pauli_observable(int width, int size, RngStream& rng);

/// How a cell's shot budget maps onto fragments.
enum class ShotSplit {
  kTotalBudget,   // budget split equally across surviving fragments
  kPerFragment,   // every surviving fragment gets the full budget
};

/// Per-fragment shot counts for a cell. Under kTotalBudget the counts
/// sum to `shots` exactly, split equally with the remainder assigned to
/// the first (lowest-id) fragment.
std::vector<long> split_shots(long shots, std::size_t n_fragments,
                              ShotSplit split);

struct ExperimentConfig {
  int clusters = 3;
  int cluster_size = 3;
  std::vector<int> fragment_counts = {1, 2, 3};
  std::vector<int> obs_sizes = {1, 5, 9};
  std::vector<long> shot_grid = {100, 1000, 10000};
  int trials = 50;
  bool penalty = false;
  ShotSplit split = ShotSplit::kTotalBudget;
  std::uint64_t base_seed = 1;
};

struct TrialRecord {
  int trial = 0;
  int n_fragments = 0;
  long shots = 0;
  int obs_size = 0;
  double estimate = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
  bool unobserved = false;
  std::uint64_t seed = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  nlohmann::json metadata() const;
  ExperimentConfig config;
};

/// Runs the full grid. Per (trial, observable size): a fresh ansatz and
/// observable, the exact value from the uncut oracle, then for every
/// fragment count and shot budget a cut + shadow-collection +
/// recombination pass. Deterministic in base_seed; rows are produced and
/// returned ordered by (trial, n_fragments, shots, obs_size) -- the grid
/// lists are sorted on entry. A sink, when given, receives each record
/// as it completes, so partial results survive a mid-run failure.
using RecordSink = std::function<void(const TrialRecord&)>;
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const RecordSink& sink = {});

// CSV pieces: the header (one '#' metadata line echoing the normalized
// configuration, then the column row) and one formatted row per record.
// Streaming these through a RecordSink produces the same bytes as
// write_experiment_csv on the full result.
void write_experiment_csv_header(std::ostream& os,
                                 const ExperimentConfig& config);
void write_experiment_csv_row(std::ostream& os, const TrialRecord& record);
void write_experiment_csv(std::ostream& os, const ExperimentResult& result);
std::vector<TrialRecord> read_experiment_csv(std::istream& is);

/// Grid lists sorted ascending, as run_experiment normalizes them.
ExperimentConfig normalized_config(ExperimentConfig config);

/// Empirical unobserved-pattern frequency by (shots, observable size),
/// from unfragmented (|F| = 1) rows, paired with the analytic value.
struct UnobservedRow {
  long shots = 0;
  int obs_size = 0;
  long trials = 0;
  double empirical = 0.0;
  double analytic = 0.0;
};

std::vector<UnobservedRow> unobserved_stats(
    const std::vector<TrialRecord>& records);

nlohmann::json unobserved_rows_to_json(const std::vector<UnobservedRow>& rows);

/// Median of a list; 0 for an empty list.
double median(std::vector<double> values);

}  // namespace shadowcut
