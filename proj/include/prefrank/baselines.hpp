#pragma once

#include "prefrank/ranking.hpp"

namespace prefrank {

struct MarkovChain {
    Matrix transition;               // row-stochastic
    std::vector<double> stationary;  // left fixed point
};

struct RankCentralityOptions {
    double damping = 0.01;   // uniform mixing, keeps the chain ergodic
    double tol = 1e-10;      // L1 change per power-iteration step
    long max_iters = 100000;
};

struct RankCentralityResult {
    Ranking ranking;
    MarkovChain chain;
};

// Rank Centrality over the sampled comparisons: losers pass transition mass
// to winners, rows normalized by the maximum comparison count, stationary
// distribution by power iteration, nodes ranked by descending mass.
RankCentralityResult rank_centrality(int n, const PreferenceSample& sample,
                                     const RankCentralityOptions& options = {});

// Graph Rank baseline: the shared pipeline with the Laplacian
// pairwise-difference embedding.
PrefRankResult graph_rank(const Graph& g, const PreferenceSample& sample,
                          const PrefRankOptions& options = {});

}  // namespace prefrank
