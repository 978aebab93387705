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

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "shadowcut/bounds.hpp"
#include "shadowcut/errors.hpp"
#include "shadowcut/experiment.hpp"
#include "shadowcut/oracle.hpp"
#include "shadowcut/recombine.hpp"

namespace {

using namespace shadowcut;
using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

Observable load_observable(const std::string& obs_text,
                           const std::string& obs_file) {
  if (!obs_file.empty()) {
    return observable_from_json(load_json(obs_file));
  }
  if (obs_text.empty()) {
    throw ValidationError("an observable is required (--obs or --obs-file)");
  }
  return Observable::parse_text(obs_text);
}

int run(int argc, char** argv) {
  CLI::App app{"Pauli-observable estimation on cut circuits via classical "
               "shadows of fragment Choi states"};
  app.require_subcommand(1);

  // gen-ansatz
  auto* gen = app.add_subcommand(
      "gen-ansatz", "Generate the clustered Haar ansatz and its cut lists");
  int clusters = 3, cluster_size = 3, gen_fragments = 0;
  std::uint64_t seed = 1;
  std::string out_path, cuts_out;
  gen->add_option("--clusters", clusters);
  gen->add_option("--cluster-size", cluster_size);
  gen->add_option("--seed", seed);
  gen->add_option("--fragments", gen_fragments,
                  "Write the cut list for this fragment count");
  gen->add_option("--out", out_path, "Circuit JSON path (default stdout)");
  gen->add_option("--cuts-out", cuts_out, "Cut-list JSON path");

  // cut
  auto* cut = app.add_subcommand(
      "cut", "Split a circuit into a fragment graph along the given cuts");
  std::string circuit_path, cuts_path;
  cut->add_option("--circuit", circuit_path)->required();
  cut->add_option("--cuts", cuts_path)->required();
  cut->add_option("--out", out_path);

  // shadow
  auto* shadow = app.add_subcommand(
      "shadow",
      "Collect a classical shadow of a circuit, or of one fragment's Choi "
      "state when --cuts and --fragment are given");
  long shots = 1000;
  int fragment_id = -1;
  shadow->add_option("--circuit", circuit_path)->required();
  shadow->add_option("--cuts", cuts_path);
  shadow->add_option("--fragment", fragment_id);
  shadow->add_option("--shots", shots);
  shadow->add_option("--seed", seed);
  shadow->add_option("--out", out_path);

  // estimate
  auto* est = app.add_subcommand(
      "estimate",
      "Estimate an observable: collects fragment shadows (or reads them "
      "with --shadows) and evaluates the recombination formula");
  std::string obs_text, obs_file;
  std::vector<std::string> shadow_paths;
  est->add_option("--circuit", circuit_path)->required();
  est->add_option("--cuts", cuts_path, "Optional; no cuts = plain shadows");
  est->add_option("--obs", obs_text, "Observable text, e.g. \"X1 Y4 Z7\"");
  est->add_option("--obs-file", obs_file, "Observable JSON file");
  est->add_option("--shots", shots, "Shots per fragment");
  est->add_option("--seed", seed);
  est->add_option("--shadows", shadow_paths,
                  "Pre-collected shadow files (one per surviving fragment)");
  est->add_option("--out", out_path);

  // oracle
  auto* orc = app.add_subcommand(
      "oracle", "Exact uncut value vs exact recombined value");
  orc->add_option("--circuit", circuit_path)->required();
  orc->add_option("--cuts", cuts_path);
  orc->add_option("--obs", obs_text);
  orc->add_option("--obs-file", obs_file);
  orc->add_option("--out", out_path);

  // bounds
  auto* bnd = app.add_subcommand(
      "bounds", "Per-fragment sample-complexity quotes");
  double epsilon = 0.1, delta = 0.05, o_norm = 1.0;
  int obs_size_opt = -1;
  std::string format = "text";
  bnd->add_option("--circuit", circuit_path)->required();
  bnd->add_option("--cuts", cuts_path);
  bnd->add_option("--obs", obs_text);
  bnd->add_option("--obs-file", obs_file);
  bnd->add_option("--obs-size", obs_size_opt,
                  "Observable size when no observable is given");
  bnd->add_option("--epsilon", epsilon);
  bnd->add_option("--delta", delta);
  bnd->add_option("--o-norm", o_norm);
  bnd->add_option("--format", format, "text|json");
  bnd->add_option("--out", out_path);

  // experiment
  auto* exp = app.add_subcommand(
      "experiment",
      "Fragmented vs unfragmented estimation across a (shots, size, "
      "fragments) grid; emits CSV");
  ExperimentConfig config;
  std::string split = "total", exp_format = "csv";
  exp->add_option("--clusters", config.clusters);
  exp->add_option("--cluster-size", config.cluster_size);
  exp->add_option("--trials", config.trials);
  exp->add_option("--seed", config.base_seed);
  exp->add_option("--shots", config.shot_grid, "Shot budgets");
  exp->add_option("--obs-size", config.obs_sizes, "Observable sizes");
  exp->add_option("--fragments", config.fragment_counts, "Fragment counts");
  exp->add_flag("--penalty", config.penalty,
                "Score unobserved patterns as absolute error 1");
  exp->add_option("--split", split,
                  "total: budget split across fragments; per-fragment: full "
                  "budget each");
  exp->add_option("--format", exp_format, "csv|json");
  exp->add_option("--out", out_path);

  // unobserved-stats
  auto* unob = app.add_subcommand(
      "unobserved-stats",
      "Empirical vs analytic unobserved-pattern probability from an "
      "experiment CSV (|F| = 1 rows)");
  std::string records_path;
  unob->add_option("--records", records_path)->required();
  unob->add_option("--out", out_path);

  app.parse(argc, argv);

  if (gen->parsed()) {
    RngStream rng(seed);
    const ClusteredAnsatz ansatz =
        gen_clustered_ansatz(clusters, cluster_size, rng);
    write_text(out_path, circuit_to_json(ansatz.circuit).dump(2) + "\n");
    if (!cuts_out.empty()) {
      const int m = gen_fragments > 0 ? gen_fragments : clusters;
      if (m < 1 || m > clusters) {
        throw ValidationError("--fragments must lie in [1, clusters]");
      }
      write_text(cuts_out,
                 cuts_to_json(ansatz.cuts_for[static_cast<std::size_t>(m - 1)])
                         .dump(2) +
                     "\n");
    }
    return 0;
  }

  if (cut->parsed()) {
    const Circuit circuit = circuit_from_json(load_json(circuit_path));
    const auto cuts = cuts_from_json(load_json(cuts_path));
    const FragmentGraph graph = cut_circuit(circuit, cuts);
    write_text(out_path, fragment_graph_to_json(graph).dump(2) + "\n");
    return 0;
  }

  if (shadow->parsed()) {
    const Circuit circuit = circuit_from_json(load_json(circuit_path));
    std::ostringstream os;
    if (fragment_id >= 0) {
      if (cuts_path.empty()) {
        throw ValidationError("--fragment requires --cuts");
      }
      const auto cuts = cuts_from_json(load_json(cuts_path));
      const FragmentGraph graph = cut_circuit(circuit, cuts);
      if (fragment_id >= static_cast<int>(graph.fragments.size())) {
        throw ValidationError("no fragment " + std::to_string(fragment_id));
      }
      const auto [ensemble, layout] = collect_choi_shadow(
          graph.fragments[static_cast<std::size_t>(fragment_id)], shots,
          RngStream(seed));
      write_shadow_file(os, ensemble, layout);
    } else {
      const ShadowEnsemble ensemble =
          collect_state_shadow(circuit, shots, RngStream(seed));
      ChoiRegisterLayout layout;
      for (int q = 0; q < ensemble.register_size; ++q) {
        layout.c_out_slots.push_back(q);
      }
      write_shadow_file(os, ensemble, layout);
    }
    write_text(out_path, os.str());
    return 0;
  }

  if (est->parsed()) {
    const Circuit circuit = circuit_from_json(load_json(circuit_path));
    const Observable observable = load_observable(obs_text, obs_file);
    std::vector<CutSpec> cuts;
    if (!cuts_path.empty()) cuts = cuts_from_json(load_json(cuts_path));
    const FragmentGraph graph = cut_circuit(circuit, cuts);
    const Partition partition = partition_for_observable(graph, observable);

    std::map<int, ShadowEnsemble> ensembles;
    if (!shadow_paths.empty()) {
      for (const auto& path : shadow_paths) {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open " + path);
        auto [ensemble, layout] = read_shadow_file(in);
        const std::string& prov = ensemble.provenance;
        if (prov.rfind("fragment:", 0) == 0) {
          const int fid = std::stoi(prov.substr(9));
          ensembles.emplace(fid, std::move(ensemble));
        } else {
          ensembles.emplace(0, std::move(ensemble));
        }
      }
    } else {
      const RngStream root(seed);
      for (int fid : partition.surviving()) {
        auto [ensemble, layout] = collect_choi_shadow(
            graph.fragments[static_cast<std::size_t>(fid)], shots,
            root.child(static_cast<std::uint64_t>(fid)));
        ensembles.emplace(fid, std::move(ensemble));
      }
    }
    const EstimateReport report =
        recombine_estimate(graph, partition, ensembles, observable);
    json out = estimate_report_to_json(report);
    // Desk-scale circuits always fit the exact oracle; report it too.
    const double exact = exact_expectation(simulate(circuit), observable);
    out["exact"] = exact;
    out["abs_error"] = std::abs(report.estimate - exact);
    write_text(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (orc->parsed()) {
    const Circuit circuit = circuit_from_json(load_json(circuit_path));
    const Observable observable = load_observable(obs_text, obs_file);
    std::vector<CutSpec> cuts;
    if (!cuts_path.empty()) cuts = cuts_from_json(load_json(cuts_path));
    const CutIdentityReport report =
        exact_cut_identity_check(circuit, cuts, observable);
    write_text(out_path, json{{"uncut", report.uncut},
                              {"recombined", report.recombined},
                              {"delta", report.delta}}
                                 .dump(2) +
                             "\n");
    return 0;
  }

  if (bnd->parsed()) {
    const Circuit circuit = circuit_from_json(load_json(circuit_path));
    std::vector<CutSpec> cuts;
    if (!cuts_path.empty()) cuts = cuts_from_json(load_json(cuts_path));
    const FragmentGraph graph = cut_circuit(circuit, cuts);

    Observable observable;
    int obs_size = obs_size_opt;
    if (!obs_text.empty() || !obs_file.empty()) {
      observable = load_observable(obs_text, obs_file);
      obs_size = static_cast<int>(observable.support().size());
      if (o_norm == 1.0) o_norm = observable.infinity_norm_bound();
    } else if (obs_size < 0) {
      throw ValidationError("--obs, --obs-file or --obs-size is required");
    }

    Partition partition;
    if (!observable.empty()) {
      partition = partition_for_observable(graph, observable);
    } else {
      // No concrete observable: quote every fragment as surviving.
      for (const auto& f : graph.fragments) partition.kappa.push_back(f.id);
      for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        partition.e_not_delta.push_back(static_cast<int>(i));
      }
    }

    std::vector<ComplexityQuote> quotes;
    for (int fid : partition.surviving()) {
      quotes.push_back(theorem2_quote(
          graph, partition, graph.fragments[static_cast<std::size_t>(fid)],
          epsilon, delta, o_norm, obs_size));
    }

    if (format == "json") {
      json arr = json::array();
      for (const auto& q : quotes) arr.push_back(quote_to_json(q));
      write_text(out_path, arr.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "fragment  deg  qdeg  K(groups)      N(per group)   total\n";
      for (const auto& q : quotes) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-8d  %-3d  %-4d  %-13.4f  %-13.4g  %-13.4g\n",
                      q.fragment_id, q.degree, q.quantum_degree, q.k_groups,
                      q.n_per_group, q.total_shadows);
        os << line;
      }
      write_text(out_path, os.str());
    }
    return 0;
  }

  if (exp->parsed()) {
    if (split == "per-fragment") {
      config.split = ShotSplit::kPerFragment;
    } else if (split != "total") {
      throw ValidationError("--split must be 'total' or 'per-fragment'");
    }
    if (exp_format == "csv" && !out_path.empty() && out_path != "-") {
      // Stream rows to the file as they complete so a long run killed
      // midway still leaves its finished rows behind.
      std::ofstream out(out_path);
      if (!out) throw ValidationError("cannot write " + out_path);
      write_experiment_csv_header(out, config);
      run_experiment(config, [&out](const TrialRecord& r) {
        write_experiment_csv_row(out, r);
        out.flush();
      });
      return 0;
    }
    const ExperimentResult result = run_experiment(config);
    std::ostringstream os;
    if (exp_format == "json") {
      json rows = json::array();
      for (const auto& r : result.records) {
        rows.push_back({{"trial", r.trial},
                        {"n_fragments", r.n_fragments},
                        {"shots", r.shots},
                        {"obs_size", r.obs_size},
                        {"estimate", r.estimate},
                        {"exact", r.exact},
                        {"abs_error", r.abs_error},
                        {"unobserved", r.unobserved},
                        {"seed", r.seed}});
      }
      os << json{{"metadata", result.metadata()}, {"records", rows}}.dump(2)
         << "\n";
    } else if (exp_format == "csv") {
      write_experiment_csv(os, result);
    } else {
      throw ValidationError("--format must be 'csv' or 'json'");
    }
    write_text(out_path, os.str());
    return 0;
  }

  if (unob->parsed()) {
    std::ifstream in(records_path);
    if (!in) throw ValidationError("cannot open " + records_path);
    const auto records = read_experiment_csv(in);
    write_text(out_path,
               unobserved_rows_to_json(unobserved_stats(records)).dump(2) +
                   "\n");
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    return CLI::App{}.exit(e);
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
