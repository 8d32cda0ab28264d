#include "prefrank/baselines.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace prefrank {

RankCentralityResult rank_centrality(int n, const PreferenceSample& sample,
                                     const RankCentralityOptions& options) {
    if (n < 1) throw std::invalid_argument("rank_centrality: n must be positive");
    const PairIndex pairs(n);

    Matrix p(n, n);
    std::vector<long> comparisons(n, 0);
    for (int s = 0; s < sample.size(); ++s) {
        const int k = sample.indices[s];
        const int i = pairs.first(k), j = pairs.second(k);
        const int winner = sample.labels[s] > 0 ? i : j;
        const int loser = sample.labels[s] > 0 ? j : i;
        p(loser, winner) += 1.0;
        ++comparisons[i];
        ++comparisons[j];
    }
    long dmax = 0;
    for (long c : comparisons) dmax = std::max(dmax, c);
    if (dmax == 0) dmax = 1;

    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            p(i, j) /= static_cast<double>(dmax);
            off += p(i, j);
        }
        p(i, i) = 1.0 - off;  // self-loop absorbs residual mass
    }

    // damped mixing with the uniform chain
    const double d = options.damping;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = (1.0 - d) * p(i, j) + d / n;

    std::vector<double> pi(n, 1.0 / n);
    std::vector<double> next(n);
    for (long it = 0; it < options.max_iters; ++it) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += pi[i] * p(i, j);
            next[j] = s;
        }
        double delta = 0.0;
        for (int j = 0; j < n; ++j) delta += std::fabs(next[j] - pi[j]);
        pi.swap(next);
        if (delta < options.tol) break;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (pi[a] != pi[b]) return pi[a] > pi[b];
        return a < b;
    });

    RankCentralityResult res;
    res.ranking.sigma.resize(n);
    for (int pos = 0; pos < n; ++pos) res.ranking.sigma[order[pos]] = pos + 1;
    res.chain.transition = std::move(p);
    res.chain.stationary = std::move(pi);
    return res;
}

PrefRankResult graph_rank(const Graph& g, const PreferenceSample& sample,
                          const PrefRankOptions& options) {
    return pref_rank(g, Embedding::LapPd, sample, options);
}

}  // namespace prefrank
