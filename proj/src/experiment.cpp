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

#include "shadowcut/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "shadowcut/errors.hpp"

namespace shadowcut {

using nlohmann::json;

ClusteredAnsatz gen_clustered_ansatz(int clusters, int cluster_size,
                                     RngStream& rng) {
  if (clusters < 1) throw ValidationError("need at least one cluster");
  if (cluster_size < 2) throw ValidationError("cluster size must be >= 2");
  if (cluster_size > 4) {
    throw SizeLimitError("Haar cluster blocks are limited to 4 qubits");
  }
  const int width = clusters * cluster_size;
  if (width > kMaxStatevectorQubits) {
    throw SizeLimitError("ansatz width " + std::to_string(width) +
                         " exceeds the statevector limit");
  }

  ClusteredAnsatz ansatz;
  ansatz.circuit.n_qubits = width;
  auto cluster_wires = [&](int c) {
    std::vector<int> wires;
    for (int q = 0; q < cluster_size; ++q) wires.push_back(c * cluster_size + q);
    return wires;
  };
  for (int c = 0; c < clusters; ++c) {
    ansatz.circuit.gates.push_back(Gate::haar(cluster_wires(c), rng.next()));
  }
  for (int j = 0; j + 1 < clusters; ++j) {
    const int hi = (j + 1) * cluster_size - 1;
    ansatz.circuit.gates.push_back(Gate::haar({hi, hi + 1}, rng.next()));
  }
  for (int c = 0; c < clusters; ++c) {
    ansatz.circuit.gates.push_back(Gate::haar(cluster_wires(c), rng.next()));
  }

  // Cut lists: connector j enters the lower cluster on wire
  // (j+1)*cluster_size; sever it before and after the connector.
  ansatz.cuts_for.resize(static_cast<std::size_t>(clusters));
  for (int k = 1; k < clusters; ++k) {
    auto& cuts = ansatz.cuts_for[static_cast<std::size_t>(k)];
    cuts = ansatz.cuts_for[static_cast<std::size_t>(k - 1)];
    const int j = k - 1;  // connector index being severed
    const int lo = (j + 1) * cluster_size;
    const int block_ordinal = j + 1;        // first-layer block of cluster j+1
    const int connector_ordinal = clusters + j;
    cuts.push_back(CutSpec{lo, block_ordinal});
    cuts.push_back(CutSpec{lo, connector_ordinal});
  }
  return ansatz;
}

PauliString random_pauli_observable(int width, int size, RngStream& rng) {
  if (size < 0 || size > width) {
    throw ValidationError("observable size must lie in [0, width]");
  }
  // Partial Fisher-Yates draw of `size` distinct qubits.
  std::vector<int> qubits(static_cast<std::size_t>(width));
  for (int q = 0; q < width; ++q) qubits[static_cast<std::size_t>(q)] = q;
  PauliString p;
  static constexpr Axis kAxes[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int k = 0; k < size; ++k) {
    const std::size_t pick =
        static_cast<std::size_t>(k) +
        rng.uniform_int(static_cast<std::uint64_t>(width - k));
    std::swap(qubits[static_cast<std::size_t>(k)], qubits[pick]);
    p.support.emplace(qubits[static_cast<std::size_t>(k)],
                      kAxes[rng.uniform_int(3)]);
  }
  return p;
}

std::vector<long> split_shots(long shots, std::size_t n_fragments,
                              ShotSplit split) {
  std::vector<long> budgets(n_fragments, shots);
  if (split == ShotSplit::kTotalBudget && n_fragments > 0) {
    const long n = static_cast<long>(n_fragments);
    for (auto& b : budgets) b = shots / n;
    budgets[0] += shots % n;  // remainder to the lowest fragment id
  }
  return budgets;
}

namespace {

struct CellOutcome {
  double estimate = 0.0;
  bool unobserved = false;
};

CellOutcome run_cell(const Circuit& circuit,
                     const std::vector<CutSpec>& cuts,
                     const Observable& observable, long shots,
                     ShotSplit split, const RngStream& cell_stream) {
  const FragmentGraph graph = cut_circuit(circuit, cuts);
  const Partition partition = partition_for_observable(graph, observable);
  const std::vector<int> survivors = partition.surviving();

  std::map<int, ShadowEnsemble> ensembles;
  const std::vector<long> budgets =
      split_shots(shots, survivors.size(), split);
  for (std::size_t pos = 0; pos < survivors.size(); ++pos) {
    const int fid = survivors[pos];
    auto [ensemble, layout] = collect_choi_shadow(
        graph.fragments[static_cast<std::size_t>(fid)], budgets[pos],
        cell_stream.child(static_cast<std::uint64_t>(fid)));
    (void)layout;
    ensembles.emplace(fid, std::move(ensemble));
  }
  const EstimateReport report =
      recombine_estimate(graph, partition, ensembles, observable);
  return CellOutcome{report.estimate, report.any_unobserved};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const RecordSink& sink) {
  if (config.trials < 1) throw ValidationError("trials must be >= 1");
  for (int size : config.obs_sizes) {
    if (size > config.clusters * config.cluster_size) {
      throw ValidationError("observable size exceeds circuit width");
    }
  }
  for (int m : config.fragment_counts) {
    if (m < 1 || m > config.clusters) {
      throw ValidationError("fragment count must lie in [1, clusters]");
    }
  }

  ExperimentResult result;
  result.config = normalized_config(config);
  const auto& grid = result.config;
  const RngStream root(grid.base_seed);

  for (int trial = 0; trial < grid.trials; ++trial) {
    // One fresh (circuit, observable, exact value) per observable size,
    // shared across the fragment and shot grids of this trial.
    struct Setting {
      ClusteredAnsatz ansatz;
      Observable observable;
      double exact = 0.0;
      RngStream stream;
    };
    std::vector<Setting> settings;
    for (std::size_t si = 0; si < grid.obs_sizes.size(); ++si) {
      const RngStream setting_stream =
          root.child(static_cast<std::uint64_t>(trial))
              .child(static_cast<std::uint64_t>(si));
      RngStream circuit_rng = setting_stream.child(0);
      RngStream obs_rng = setting_stream.child(1);
      ClusteredAnsatz ansatz = gen_clustered_ansatz(
          grid.clusters, grid.cluster_size, circuit_rng);
      Observable observable{random_pauli_observable(
          ansatz.circuit.n_qubits, grid.obs_sizes[si], obs_rng)};
      const double exact =
          exact_expectation(simulate(ansatz.circuit), observable);
      settings.push_back(Setting{std::move(ansatz), std::move(observable),
                                 exact, setting_stream});
    }

    // Loop order matches the row order (trial, fragments, shots, size),
    // so records stream out already sorted.
    for (std::size_t mi = 0; mi < grid.fragment_counts.size(); ++mi) {
      const int m = grid.fragment_counts[mi];
      for (std::size_t shi = 0; shi < grid.shot_grid.size(); ++shi) {
        const long shots = grid.shot_grid[shi];
        for (std::size_t si = 0; si < grid.obs_sizes.size(); ++si) {
          const Setting& setting = settings[si];
          const RngStream cell = setting.stream.child(2).child(mi).child(shi);
          const CellOutcome outcome = run_cell(
              setting.ansatz.circuit,
              setting.ansatz.cuts_for[static_cast<std::size_t>(m - 1)],
              setting.observable, shots, grid.split, cell);

          TrialRecord record;
          record.trial = trial;
          record.n_fragments = m;
          record.shots = shots;
          record.obs_size = grid.obs_sizes[si];
          record.estimate = outcome.estimate;
          record.exact = setting.exact;
          record.abs_error = std::abs(outcome.estimate - setting.exact);
          record.unobserved = outcome.unobserved;
          record.seed = cell.seed();
          if (grid.penalty && record.unobserved) record.abs_error = 1.0;
          if (sink) sink(record);
          result.records.push_back(record);
        }
      }
    }
  }
  return result;
}

nlohmann::json ExperimentResult::metadata() const {
  return json{{"format", "shadowcut-experiment-v1"},
              {"base_seed", config.base_seed},
              {"clusters", config.clusters},
              {"cluster_size", config.cluster_size},
              {"trials", config.trials},
              {"fragment_counts", config.fragment_counts},
              {"obs_sizes", config.obs_sizes},
              {"shot_grid", config.shot_grid},
              {"penalty", config.penalty},
              {"shot_split", config.split == ShotSplit::kTotalBudget
                                 ? "total"
                                 : "per-fragment"},
              {"estimator", "mean"}};
}

ExperimentConfig normalized_config(ExperimentConfig config) {
  std::sort(config.fragment_counts.begin(), config.fragment_counts.end());
  std::sort(config.obs_sizes.begin(), config.obs_sizes.end());
  std::sort(config.shot_grid.begin(), config.shot_grid.end());
  return config;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_experiment_csv_header(std::ostream& os,
                                 const ExperimentConfig& config) {
  ExperimentResult echo;
  echo.config = normalized_config(config);
  os << "# " << echo.metadata().dump() << "\n";
  os << "trial,n_fragments,shots,obs_size,estimate,exact,abs_error,"
        "unobserved,seed\n";
}

void write_experiment_csv_row(std::ostream& os, const TrialRecord& r) {
  os << r.trial << ',' << r.n_fragments << ',' << r.shots << ','
     << r.obs_size << ',' << format_double(r.estimate) << ','
     << format_double(r.exact) << ',' << format_double(r.abs_error) << ','
     << (r.unobserved ? 1 : 0) << ',' << r.seed << "\n";
}

void write_experiment_csv(std::ostream& os, const ExperimentResult& result) {
  write_experiment_csv_header(os, result.config);
  for (const auto& r : result.records) write_experiment_csv_row(os, r);
}

std::vector<TrialRecord> read_experiment_csv(std::istream& is) {
  std::vector<TrialRecord> records;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("trial,", 0) == 0) {
      continue;
    }
    std::istringstream row(line);
    std::string field;
    TrialRecord r;
    auto next = [&]() {
      if (!std::getline(row, field, ',')) {
        throw ValidationError("short CSV row: " + line);
      }
      return field;
    };
    r.trial = std::stoi(next());
    r.n_fragments = std::stoi(next());
    r.shots = std::stol(next());
    r.obs_size = std::stoi(next());
    r.estimate = std::stod(next());
    r.exact = std::stod(next());
    r.abs_error = std::stod(next());
    r.unobserved = std::stoi(next()) != 0;
    r.seed = std::stoull(next());
    records.push_back(r);
  }
  return records;
}

std::vector<UnobservedRow> unobserved_stats(
    const std::vector<TrialRecord>& records) {
  std::map<std::pair<long, int>, std::pair<long, long>> counts;
  for (const auto& r : records) {
    if (r.n_fragments != 1) continue;
    auto& [total, unobserved] = counts[{r.shots, r.obs_size}];
    ++total;
    if (r.unobserved) ++unobserved;
  }
  std::vector<UnobservedRow> rows;
  for (const auto& [key, value] : counts) {
    UnobservedRow row;
    row.shots = key.first;
    row.obs_size = key.second;
    row.trials = value.first;
    row.empirical =
        static_cast<double>(value.second) / static_cast<double>(value.first);
    row.analytic = unobserved_probability(row.obs_size, row.shots);
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json unobserved_rows_to_json(const std::vector<UnobservedRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"shots", r.shots},
                   {"obs_size", r.obs_size},
                   {"trials", r.trials},
                   {"empirical", r.empirical},
                   {"analytic", r.analytic}});
  }
  return arr;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace shadowcut
