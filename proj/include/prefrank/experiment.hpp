#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prefrank/baselines.hpp"
#include "prefrank/ranking.hpp"

namespace prefrank {

// Synthetic preference generators used by gen-pref and the experiment runner.

// f = A_G alpha with alpha uniform in [0,1]^n; duplicate scores (possible on
// on regular-ish graphs) are separated by a 1e-12 * index nudge so FR values
// stay distinct.
PreferenceVector gen_pref_score(const Graph& g, uint64_t seed);

// Two-cluster protocols, clusters = first/second half of the node range:
// FR: random permutation with every cluster-1 node ranked above cluster 2.
// OR(d): uniform ratings, cluster 1 over the top half of levels.
// BR: +1 with probability flip_prob in cluster 1, 1-flip_prob in cluster 2.
PreferenceVector gen_pref_cluster_fr(int n, uint64_t seed);
PreferenceVector gen_pref_cluster_or(int n, int levels, uint64_t seed);
PreferenceVector gen_pref_cluster_br(int n, double flip_prob, uint64_t seed);

struct ExperimentConfig {
    Graph graph;
    PreferenceVector preference;
    std::vector<std::string> algorithms;  // pr-kron, pr-pd, gr, rc
    std::vector<double> fractions;
    int repeats = 10;
    double C = 1.0;
    double tol = 1e-6;
    int cache_rows = 256;
    uint64_t seed = 1;
};

struct MetricsRow {
    std::string algorithm;
    std::string embedding;
    double f = 0.0;
    int trial = 0;             // -1 on summary rows
    std::string stat = "trial";  // trial | mean | std
    double er_d = 0.0;           // zero-one over distinct-pref pairs, from the predicted ranking
    double er_d_scores = 0.0;    // same but from raw scores (nan for rc)
    double d_k = 0.0;            // nan unless the preference induces a strict order
    double d_s = 0.0;
    double train_error = 0.0;    // zero-one on the sampled pairs (nan for rc)
    int m_effective = 0;
    double wall_time_ms = 0.0;
    uint64_t seed = 0;
    std::string config_hash;
};

struct ExperimentResult {
    std::vector<MetricsRow> rows;  // trial rows then mean/std, (algorithm, f, trial) order
    std::string config_hash;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// schema=1 CSV; full precision decimals
void write_metrics_csv(const std::vector<MetricsRow>& rows, std::ostream& out);
std::string metrics_csv_header();

// FNV-1a over the canonical config description
std::string experiment_config_hash(const ExperimentConfig& config);

// One trial of one algorithm on a fixed sample; exposed for tests and the
// rank/baseline subcommands.
MetricsRow run_single(const Graph& g, const PreferenceVector& pref, const std::string& algorithm,
                      const PreferenceSample& sample, const PrefRankOptions& options);

}  // namespace prefrank
