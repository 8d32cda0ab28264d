#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefrank/graph.hpp"
#include "prefrank/svm.hpp"

namespace prefrank {

// Permutation of nodes: sigma[i] is the rank of node i, 1 = most preferred.
struct Ranking {
    std::vector<int> sigma;

    int n() const { return static_cast<int>(sigma.size()); }
    bool valid() const;
};

enum class Task { BR, OR, FR };

// Per-node preference values; larger value means more preferred. BR values
// are +/-1, OR values are levels in [1, d], FR values are all distinct.
struct PreferenceVector {
    std::vector<double> values;
    Task task = Task::FR;
    int levels = 0;  // d for OR

    int n() const { return static_cast<int>(values.size()); }
};

// Ranking induced by a preference vector (ties broken by node index; for FR
// values are distinct so the order is strict).
Ranking ranking_from_preference(const PreferenceVector& pref);

struct PreferenceSample {
    std::vector<int> indices;  // pair ids into [0, N), distinct
    std::vector<int> labels;   // +1 iff node i_k preferred over j_k
    double fraction = 0.0;
    int n = 0;
    int dropped_ties = 0;

    int size() const { return static_cast<int>(indices.size()); }
};

// Draw ceil(N*f) distinct pairs uniformly (seeded Fisher-Yates prefix) and
// label them from the preference values; tied pairs are dropped.
PreferenceSample sample_pairs(int n, double f, const PreferenceVector& pref, uint64_t seed);

// Label of pair k under the sign convention (+1 = first node preferred);
// 0 marks a tie.
int pair_label(const PreferenceVector& pref, const PairIndex& pairs, int k);

enum class Embedding { LSKron, LSPd, LapKron, LapPd, NLapKron, NLapPd };

std::string embedding_name(Embedding e);
Embedding embedding_from_name(const std::string& name);

struct PrefRankOptions {
    double C = 1.0;
    double tol = 1e-6;
    long max_passes = 0;
    int cache_rows = 256;
};

struct PrefRankResult {
    std::vector<double> scores;  // f* over all N pairs
    Ranking ranking;
    std::vector<int> win_counts;
    SvmSolution solution;
};

// Pref-Rank end to end: build the node kernel for the embedding, lift it to
// a pair kernel, fit the SVM on the sample, score all pairs and aggregate
// wins into a ranking.
PrefRankResult pref_rank(const Graph& g, Embedding embedding, const PreferenceSample& sample,
                         const PrefRankOptions& options = {});

// Win counts c(i) from a score vector, and the induced ranking (descending
// win count, ties by ascending node index).
std::vector<int> win_counts(const std::vector<double>& scores, const PairIndex& pairs);
Ranking ranking_from_win_counts(const std::vector<int>& counts);

double kendall_tau(const Ranking& sigma_star, const Ranking& sigma_hat);
double spearman_footrule(const Ranking& sigma_star, const Ranking& sigma_hat);

// Raw integer forms: discordant pair count and total displacement.
long kendall_raw(const Ranking& a, const Ranking& b);
long footrule_raw(const Ranking& a, const Ranking& b);

enum class PairSubset { Train, Test, All, DistinctPrefs };
enum class PairLoss { ZeroOne, Hinge, Ramp };

// Mean pairwise loss of the scores against the preference-induced labels
// over the chosen subset. Train/Test need the sample that split the pairs.
// Ties are excluded from DistinctPrefs; a zero score on a labelled pair
// counts as a misprediction under ZeroOne.
double pairwise_error(const std::vector<double>& scores, const PreferenceVector& pref,
                      PairSubset subset, PairLoss loss,
                      const PreferenceSample* sample = nullptr);

// Pairwise zero-one error of a predicted ranking over distinct-preference
// pairs (the ranking's induced signs against the preference labels).
double ranking_pairwise_error(const Ranking& sigma_hat, const PreferenceVector& pref);

}  // namespace prefrank
