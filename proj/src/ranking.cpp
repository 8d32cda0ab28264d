#include "prefrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "prefrank/rng.hpp"

namespace prefrank {

bool Ranking::valid() const {
    std::vector<bool> seen(sigma.size(), false);
    for (int r : sigma) {
        if (r < 1 || r > n() || seen[r - 1]) return false;
        seen[r - 1] = true;
    }
    return true;
}

Ranking ranking_from_preference(const PreferenceVector& pref) {
    const int n = pref.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (pref.values[a] != pref.values[b]) return pref.values[a] > pref.values[b];
        return a < b;
    });
    Ranking r;
    r.sigma.resize(n);
    for (int pos = 0; pos < n; ++pos) r.sigma[order[pos]] = pos + 1;
    return r;
}

int pair_label(const PreferenceVector& pref, const PairIndex& pairs, int k) {
    const double vi = pref.values[pairs.first(k)];
    const double vj = pref.values[pairs.second(k)];
    if (vi > vj) return 1;
    if (vi < vj) return -1;
    return 0;
}

PreferenceSample sample_pairs(int n, double f, const PreferenceVector& pref, uint64_t seed) {
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("sample_pairs: f must be in (0,1]");
    if (pref.n() != n) throw std::invalid_argument("sample_pairs: preference size mismatch");
    const PairIndex pairs(n);
    const int N = pairs.count();
    const int m = static_cast<int>(std::ceil(N * f));

    std::vector<int> all(N);
    std::iota(all.begin(), all.end(), 0);
    Rng rng(seed);
    // Fisher-Yates prefix: the first m entries are a uniform m-subset
    for (int i = 0; i < m; ++i) {
        const int j = i + static_cast<int>(rng.uniform_index(N - i));
        std::swap(all[i], all[j]);
    }

    PreferenceSample s;
    s.fraction = f;
    s.n = n;
    for (int i = 0; i < m; ++i) {
        const int k = all[i];
        const int y = pair_label(pref, pairs, k);
        if (y == 0) {
            ++s.dropped_ties;
            continue;
        }
        s.indices.push_back(k);
        s.labels.push_back(y);
    }
    return s;
}

std::string embedding_name(Embedding e) {
    switch (e) {
        case Embedding::LSKron: return "ls-kron";
        case Embedding::LSPd: return "ls-pd";
        case Embedding::LapKron: return "lap-kron";
        case Embedding::LapPd: return "lap-pd";
        case Embedding::NLapKron: return "nlap-kron";
        case Embedding::NLapPd: return "nlap-pd";
    }
    throw std::logic_error("embedding_name: bad value");
}

Embedding embedding_from_name(const std::string& name) {
    if (name == "ls-kron") return Embedding::LSKron;
    if (name == "ls-pd") return Embedding::LSPd;
    if (name == "lap-kron") return Embedding::LapKron;
    if (name == "lap-pd") return Embedding::LapPd;
    if (name == "nlap-kron") return Embedding::NLapKron;
    if (name == "nlap-pd") return Embedding::NLapPd;
    throw std::invalid_argument("unknown embedding: " + name);
}

namespace {

NodeKernel node_kernel_for(const Graph& g, Embedding e) {
    switch (e) {
        case Embedding::LSKron:
        case Embedding::LSPd: return ls_kernel(g);
        case Embedding::LapKron:
        case Embedding::LapPd: return laplacian_kernel(g, false);
        case Embedding::NLapKron:
        case Embedding::NLapPd: return laplacian_kernel(g, true);
    }
    throw std::logic_error("node_kernel_for: bad value");
}

PairMode mode_for(Embedding e) {
    switch (e) {
        case Embedding::LSKron:
        case Embedding::LapKron:
        case Embedding::NLapKron: return PairMode::Kronecker;
        default: return PairMode::PairwiseDifference;
    }
}

}  // namespace

std::vector<int> win_counts(const std::vector<double>& scores, const PairIndex& pairs) {
    std::vector<int> c(pairs.n(), 0);
    for (int k = 0; k < pairs.count(); ++k) {
        if (scores[k] > 0.0)
            ++c[pairs.first(k)];
        else if (scores[k] < 0.0)
            ++c[pairs.second(k)];
        // exact zeros count for neither side
    }
    return c;
}

Ranking ranking_from_win_counts(const std::vector<int>& counts) {
    const int n = static_cast<int>(counts.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return a < b;
    });
    Ranking r;
    r.sigma.resize(n);
    for (int pos = 0; pos < n; ++pos) r.sigma[order[pos]] = pos + 1;
    return r;
}

PrefRankResult pref_rank(const Graph& g, Embedding embedding, const PreferenceSample& sample,
                         const PrefRankOptions& options) {
    if (sample.size() < 1) throw std::invalid_argument("pref_rank: empty sample");
    PairKernel kernel = pair_kernel(node_kernel_for(g, embedding), mode_for(embedding));

    SvmProblem problem;
    problem.kernel = &kernel;
    problem.indices = sample.indices;
    problem.labels = sample.labels;
    problem.C = options.C;
    problem.tol = options.tol;
    problem.max_passes = options.max_passes;
    problem.cache_rows = options.cache_rows;

    PrefRankResult res;
    res.solution = solve_dual(problem);
    res.scores = res.solution.scores;
    res.win_counts = win_counts(res.scores, kernel.pairs());
    res.ranking = ranking_from_win_counts(res.win_counts);
    return res;
}

double kendall_tau(const Ranking& sigma_star, const Ranking& sigma_hat) {
    if (sigma_star.n() != sigma_hat.n()) throw std::invalid_argument("kendall_tau: size mismatch");
    const int n = sigma_star.n();
    const long N = static_cast<long>(n) * (n - 1) / 2;
    return static_cast<double>(kendall_raw(sigma_star, sigma_hat)) / static_cast<double>(N);
}

double spearman_footrule(const Ranking& sigma_star, const Ranking& sigma_hat) {
    if (sigma_star.n() != sigma_hat.n())
        throw std::invalid_argument("spearman_footrule: size mismatch");
    return static_cast<double>(footrule_raw(sigma_star, sigma_hat)) / sigma_star.n();
}

long kendall_raw(const Ranking& a, const Ranking& b) {
    const int n = a.n();
    long count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long da = a.sigma[i] - a.sigma[j];
            const long db = b.sigma[i] - b.sigma[j];
            if (da * db < 0) ++count;
        }
    return count;
}

long footrule_raw(const Ranking& a, const Ranking& b) {
    long total = 0;
    for (int i = 0; i < a.n(); ++i) total += std::labs(a.sigma[i] - b.sigma[i]);
    return total;
}

namespace {

double loss_value(PairLoss loss, int y, double f) {
    const double margin = y * f;
    switch (loss) {
        case PairLoss::ZeroOne: return margin <= 0.0 ? 1.0 : 0.0;
        case PairLoss::Hinge: return std::max(0.0, 1.0 - margin);
        case PairLoss::Ramp: return std::min(1.0, std::max(0.0, 1.0 - margin));
    }
    throw std::logic_error("loss_value: bad loss");
}

}  // namespace

double pairwise_error(const std::vector<double>& scores, const PreferenceVector& pref,
                      PairSubset subset, PairLoss loss, const PreferenceSample* sample) {
    const PairIndex pairs(pref.n());
    const int N = pairs.count();
    if (static_cast<int>(scores.size()) != N)
        throw std::invalid_argument("pairwise_error: scores must cover all pairs");
    if ((subset == PairSubset::Train || subset == PairSubset::Test) && sample == nullptr)
        throw std::invalid_argument("pairwise_error: Train/Test subsets need the sample");

    std::vector<bool> in_sample;
    if (sample != nullptr) {
        in_sample.assign(N, false);
        for (int k : sample->indices) in_sample[k] = true;
    }

    double total = 0.0;
    long count = 0;
    for (int k = 0; k < N; ++k) {
        const int y = pair_label(pref, pairs, k);
        switch (subset) {
            case PairSubset::Train:
                if (!in_sample[k]) continue;
                break;
            case PairSubset::Test:
                if (in_sample[k]) continue;
                break;
            case PairSubset::All: break;
            case PairSubset::DistinctPrefs:
                if (y == 0) continue;
                break;
        }
        if (y == 0 && subset != PairSubset::DistinctPrefs) {
            // ties have no label; skip them in every subset
            continue;
        }
        total += loss_value(loss, y, scores[k]);
        ++count;
    }
    if (count == 0) throw std::invalid_argument("pairwise_error: empty subset");
    return total / static_cast<double>(count);
}

double ranking_pairwise_error(const Ranking& sigma_hat, const PreferenceVector& pref) {
    if (sigma_hat.n() != pref.n())
        throw std::invalid_argument("ranking_pairwise_error: size mismatch");
    const PairIndex pairs(pref.n());
    double total = 0.0;
    long count = 0;
    for (int k = 0; k < pairs.count(); ++k) {
        const int y = pair_label(pref, pairs, k);
        if (y == 0) continue;
        const int pred = sigma_hat.sigma[pairs.second(k)] - sigma_hat.sigma[pairs.first(k)];
        total += (y * pred <= 0) ? 1.0 : 0.0;
        ++count;
    }
    if (count == 0) throw std::invalid_argument("ranking_pairwise_error: no distinct-preference pairs");
    return total / static_cast<double>(count);
}

}  // namespace prefrank
