#include "prefrank/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prefrank/io.hpp"
#include "prefrank/rng.hpp"

namespace prefrank {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool preference_is_strict(const PreferenceVector& pref) {
    std::vector<double> v = pref.values;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

PreferenceVector gen_pref_score(const Graph& g, uint64_t seed) {
    Rng rng(seed);
    const int n = g.n();
    std::vector<double> alpha(n);
    for (double& a : alpha) a = rng.uniform();
    PreferenceVector pref;
    pref.task = Task::FR;
    pref.values.resize(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i && g.edge(i, j)) s += alpha[j];
        pref.values[i] = s;
    }
    // break exact duplicates so the FR order is strict
    for (int i = 0; i < n; ++i) pref.values[i] += 1e-12 * i;
    return pref;
}

PreferenceVector gen_pref_cluster_fr(int n, uint64_t seed) {
    if (n % 2 != 0) throw std::invalid_argument("gen_pref_cluster_fr: n must be even");
    Rng rng(seed);
    const int half = n / 2;
    std::vector<int> c1(half), c2(half);
    std::iota(c1.begin(), c1.end(), 0);
    std::iota(c2.begin(), c2.end(), half);
    rng.shuffle(c1);
    rng.shuffle(c2);
    PreferenceVector pref;
    pref.task = Task::FR;
    pref.values.resize(n);
    // value = n - rank, so cluster-1 nodes take ranks 1..n/2
    for (int pos = 0; pos < half; ++pos) pref.values[c1[pos]] = static_cast<double>(n - (pos + 1));
    for (int pos = 0; pos < half; ++pos) pref.values[c2[pos]] = static_cast<double>(n - (half + pos + 1));
    return pref;
}

PreferenceVector gen_pref_cluster_or(int n, int levels, uint64_t seed) {
    if (n % 2 != 0) throw std::invalid_argument("gen_pref_cluster_or: n must be even");
    if (levels < 2) throw std::invalid_argument("gen_pref_cluster_or: need at least 2 levels");
    Rng rng(seed);
    const int half = n / 2;
    const int split = levels / 2;  // cluster 2 rates in [1, split], cluster 1 in (split, levels]
    PreferenceVector pref;
    pref.task = Task::OR;
    pref.levels = levels;
    pref.values.resize(n);
    for (int i = 0; i < n; ++i) {
        if (i < half)
            pref.values[i] = static_cast<double>(split + 1 + rng.uniform_index(levels - split));
        else
            pref.values[i] = static_cast<double>(1 + rng.uniform_index(split));
    }
    return pref;
}

PreferenceVector gen_pref_cluster_br(int n, double flip_prob, uint64_t seed) {
    if (n % 2 != 0) throw std::invalid_argument("gen_pref_cluster_br: n must be even");
    if (flip_prob < 0.0 || flip_prob > 1.0)
        throw std::invalid_argument("gen_pref_cluster_br: probability out of range");
    Rng rng(seed);
    const int half = n / 2;
    PreferenceVector pref;
    pref.task = Task::BR;
    pref.values.resize(n);
    for (int i = 0; i < n; ++i) {
        const double p_plus = i < half ? flip_prob : 1.0 - flip_prob;
        pref.values[i] = rng.bernoulli(p_plus) ? 1.0 : -1.0;
    }
    return pref;
}

MetricsRow run_single(const Graph& g, const PreferenceVector& pref, const std::string& algorithm,
                      const PreferenceSample& sample, const PrefRankOptions& options) {
    MetricsRow row;
    row.algorithm = algorithm;
    row.m_effective = sample.size();
    row.d_k = kNan;
    row.d_s = kNan;

    const auto t0 = std::chrono::steady_clock::now();
    Ranking predicted;
    std::vector<double> scores;
    if (algorithm == "rc") {
        predicted = rank_centrality(g.n(), sample).ranking;
        row.embedding = "-";
        row.er_d_scores = kNan;
        row.train_error = kNan;
    } else {
        Embedding embedding;
        if (algorithm == "pr-kron")
            embedding = Embedding::LSKron;
        else if (algorithm == "pr-pd")
            embedding = Embedding::LSPd;
        else if (algorithm == "gr")
            embedding = Embedding::LapPd;
        else
            throw std::invalid_argument("unknown algorithm: " + algorithm);
        PrefRankResult res = pref_rank(g, embedding, sample, options);
        predicted = res.ranking;
        scores = std::move(res.scores);
        row.embedding = embedding_name(embedding);
        row.er_d_scores = pairwise_error(scores, pref, PairSubset::DistinctPrefs, PairLoss::ZeroOne);
        row.train_error = pairwise_error(scores, pref, PairSubset::Train, PairLoss::ZeroOne, &sample);
    }
    row.er_d = ranking_pairwise_error(predicted, pref);
    if (preference_is_strict(pref)) {
        const Ranking truth = ranking_from_preference(pref);
        row.d_k = kendall_tau(truth, predicted);
        row.d_s = spearman_footrule(truth, predicted);
    }
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

std::string experiment_config_hash(const ExperimentConfig& config) {
    std::ostringstream os;
    os << "n=" << config.graph.n() << ";edges=" << config.graph.edge_count() << ";adj=";
    for (int i = 0; i < config.graph.n(); ++i)
        for (int j = i + 1; j < config.graph.n(); ++j) os << (config.graph.edge(i, j) ? '1' : '0');
    os << ";task=" << task_name(config.preference.task) << ";pref=";
    for (double v : config.preference.values) os << fmt(v) << ',';
    os << ";alg=";
    for (const auto& a : config.algorithms) os << a << ',';
    os << ";f=";
    for (double f : config.fractions) os << fmt(f) << ',';
    os << ";repeats=" << config.repeats << ";C=" << fmt(config.C) << ";tol=" << fmt(config.tol)
       << ";seed=" << config.seed;

    const std::string s = os.str();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.repeats < 1) throw std::invalid_argument("run_experiment: repeats must be >= 1");
    for (double f : config.fractions)
        if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("run_experiment: fraction outside (0,1]");
    if (config.preference.n() != config.graph.n())
        throw std::invalid_argument("run_experiment: preference/graph size mismatch");

    ExperimentResult result;
    result.config_hash = experiment_config_hash(config);

    PrefRankOptions options;
    options.C = config.C;
    options.tol = config.tol;
    options.cache_rows = config.cache_rows;

    for (const auto& algorithm : config.algorithms) {
        for (size_t fi = 0; fi < config.fractions.size(); ++fi) {
            const double f = config.fractions[fi];
            std::vector<MetricsRow> trials;
            for (int trial = 0; trial < config.repeats; ++trial) {
                // The sample stream depends on (seed, f, trial) only, so every
                // algorithm sees the same draw at a given (f, trial).
                const uint64_t trial_seed = derive_seed(config.seed, fi + 1, trial + 1);
                const PreferenceSample sample =
                    sample_pairs(config.graph.n(), f, config.preference, trial_seed);
                MetricsRow row = run_single(config.graph, config.preference, algorithm, sample, options);
                row.f = f;
                row.trial = trial;
                row.seed = trial_seed;
                row.config_hash = result.config_hash;
                trials.push_back(row);
            }

            MetricsRow mean = trials.front();
            MetricsRow stddev = trials.front();
            mean.trial = -1;
            stddev.trial = -1;
            mean.stat = "mean";
            stddev.stat = "std";
            mean.seed = config.seed;
            stddev.seed = config.seed;
            auto stats = [&](auto getter, double& mout, double& sout) {
                double s = 0.0;
                for (const auto& r : trials) s += getter(r);
                const double mu = s / trials.size();
                double var = 0.0;
                for (const auto& r : trials) var += (getter(r) - mu) * (getter(r) - mu);
                var = trials.size() > 1 ? var / (trials.size() - 1) : 0.0;
                mout = mu;
                sout = std::sqrt(var);
            };
            stats([](const MetricsRow& r) { return r.er_d; }, mean.er_d, stddev.er_d);
            stats([](const MetricsRow& r) { return r.er_d_scores; }, mean.er_d_scores,
                  stddev.er_d_scores);
            stats([](const MetricsRow& r) { return r.d_k; }, mean.d_k, stddev.d_k);
            stats([](const MetricsRow& r) { return r.d_s; }, mean.d_s, stddev.d_s);
            stats([](const MetricsRow& r) { return r.train_error; }, mean.train_error,
                  stddev.train_error);
            double m_mean = 0.0, m_std = 0.0;
            stats([](const MetricsRow& r) { return static_cast<double>(r.m_effective); }, m_mean, m_std);
            mean.m_effective = static_cast<int>(std::lround(m_mean));
            stddev.m_effective = static_cast<int>(std::lround(m_std));
            double t_mean = 0.0, t_std = 0.0;
            stats([](const MetricsRow& r) { return r.wall_time_ms; }, t_mean, t_std);
            mean.wall_time_ms = t_mean;
            stddev.wall_time_ms = t_std;

            for (auto& row : trials) result.rows.push_back(std::move(row));
            result.rows.push_back(std::move(mean));
            result.rows.push_back(std::move(stddev));
        }
    }
    return result;
}

std::string metrics_csv_header() {
    return "schema=1,algorithm,embedding,f,trial,stat,er_d,er_d_scores,d_k,d_s,train_error,"
           "m_effective,wall_time_ms,seed,config_hash";
}

void write_metrics_csv(const std::vector<MetricsRow>& rows, std::ostream& out) {
    out << metrics_csv_header() << '\n';
    for (const auto& r : rows) {
        out << "1," << r.algorithm << ',' << r.embedding << ',' << fmt(r.f) << ',' << r.trial << ','
            << r.stat << ',' << fmt(r.er_d) << ',' << fmt(r.er_d_scores) << ',' << fmt(r.d_k) << ','
            << fmt(r.d_s) << ',' << fmt(r.train_error) << ',' << r.m_effective << ','
            << fmt(r.wall_time_ms) << ',' << r.seed << ',' << r.config_hash << '\n';
    }
}

}  // namespace prefrank
