#include "prefrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "prefrank/rng.hpp"

namespace prefrank {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("Graph: n must be positive");
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("Graph: node out of range");
    if (i == j) throw std::invalid_argument("Graph: self-loop");
    adj_[static_cast<size_t>(i) * n_ + j] = 1;
    adj_[static_cast<size_t>(j) * n_ + i] = 1;
}

void Graph::remove_edge(int i, int j) {
    adj_[static_cast<size_t>(i) * n_ + j] = 0;
    adj_[static_cast<size_t>(j) * n_ + i] = 0;
}

int Graph::degree(int i) const {
    int d = 0;
    for (int j = 0; j < n_; ++j) d += adj_[static_cast<size_t>(i) * n_ + j];
    return d;
}

long Graph::edge_count() const {
    long c = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) c += edge(i, j) ? 1 : 0;
    return c;
}

Matrix Graph::adjacency() const {
    Matrix a(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a(i, j) = adj_[static_cast<size_t>(i) * n_ + j];
    return a;
}

PairIndex::PairIndex(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("PairIndex: n must be positive");
    pairs_.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

int PairIndex::index_of(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_ || i == j) throw std::out_of_range("PairIndex: bad pair");
    // offset of row i in the lexicographic enumeration
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

Graph gen_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph gen_union_cliques(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("gen_union_cliques: need 1 <= k <= n");
    Graph g(n);
    int start = 0;
    for (int b = 0; b < k; ++b) {
        const int size = n / k + (b < n % k ? 1 : 0);
        for (int i = start; i < start + size; ++i)
            for (int j = i + 1; j < start + size; ++j) g.add_edge(i, j);
        start += size;
    }
    return g;
}

Graph gen_regular(int n, int r, uint64_t seed, int max_restarts) {
    if (r < 0 || r >= n) throw std::invalid_argument("gen_regular: need 0 <= r < n");
    if ((static_cast<long>(n) * r) % 2 != 0)
        throw std::invalid_argument("gen_regular: n*r must be even");
    Graph g(n);
    if (r == 0) return g;

    Rng rng(seed);

    // Slots holding self-loops or edges duplicated elsewhere in the pairing.
    auto invalid_slots = [](const std::vector<std::pair<int, int>>& edges) {
        std::set<std::pair<int, int>> seen;
        std::set<std::pair<int, int>> dup;
        for (auto [a, b] : edges) {
            if (a == b) continue;
            auto e = std::make_pair(std::min(a, b), std::max(a, b));
            if (!seen.insert(e).second) dup.insert(e);
        }
        std::vector<size_t> out;
        for (size_t s = 0; s < edges.size(); ++s) {
            auto [a, b] = edges[s];
            if (a == b || dup.count({std::min(a, b), std::max(a, b)})) out.push_back(s);
        }
        return out;
    };

    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * r);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < r; ++c) stubs.push_back(i);
        rng.shuffle(stubs);

        std::vector<std::pair<int, int>> edges;
        edges.reserve(stubs.size() / 2);
        for (size_t s = 0; s < stubs.size(); s += 2) edges.emplace_back(stubs[s], stubs[s + 1]);

        // Edge-swap repair: exchange endpoints with a random other slot and
        // keep the swap when it does not make things worse.
        const long max_swaps = 200L * static_cast<long>(edges.size()) + 100;
        std::vector<size_t> invalid = invalid_slots(edges);
        for (long swaps = 0; !invalid.empty() && swaps < max_swaps; ++swaps) {
            const size_t e = invalid[rng.uniform_index(invalid.size())];
            const size_t o = rng.uniform_index(edges.size());
            if (o == e) continue;
            std::swap(edges[e].second, edges[o].second);
            std::vector<size_t> next = invalid_slots(edges);
            if (next.size() < invalid.size()) {
                invalid = std::move(next);
            } else {
                std::swap(edges[e].second, edges[o].second);
            }
        }
        if (!invalid.empty()) continue;

        Graph out(n);
        for (auto [a, b] : edges) out.add_edge(a, b);
        return out;
    }
    throw std::runtime_error("gen_regular: construction failed after max restarts");
}

Graph gen_erdos_renyi(int n, double q, uint64_t seed) {
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("gen_erdos_renyi: q must be in [0,1]");
    Graph g(n);
    Rng rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(q)) g.add_edge(i, j);
    return g;
}

Graph gen_two_cluster(int n, double p, double q, uint64_t seed) {
    if (n % 2 != 0) throw std::invalid_argument("gen_two_cluster: n must be even");
    if (q < 0.0 || p > 1.0 || q > p)
        throw std::invalid_argument("gen_two_cluster: need 0 <= q <= p <= 1");
    Graph g(n);
    Rng rng(seed);
    const int half = n / 2;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool same = (i < half) == (j < half);
            if (rng.bernoulli(same ? p : q)) g.add_edge(i, j);
        }
    }
    return g;
}

Graph graph_from_features(const std::vector<std::vector<double>>& x) {
    const int n = static_cast<int>(x.size());
    if (n < 2) throw std::invalid_argument("graph_from_features: need at least 2 points");
    const size_t dim = x[0].size();
    for (const auto& xi : x)
        if (xi.size() != dim) throw std::invalid_argument("graph_from_features: ragged features");

    auto dist = [&](int i, int j) {
        double s = 0.0;
        for (size_t d = 0; d < dim; ++d) {
            const double diff = x[i][d] - x[j][d];
            s += diff * diff;
        }
        return std::sqrt(s);
    };

    double mu = 0.0;
    long pairs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            mu += dist(i, j);
            ++pairs;
        }
    mu /= static_cast<double>(pairs);
    if (mu == 0.0) throw std::invalid_argument("graph_from_features: all points identical");

    Matrix sim(n, n);
    double mean_sim = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = dist(i, j);
            const double s = std::exp(-d * d / (2.0 * mu * mu));
            sim(i, j) = s;
            mean_sim += s;
        }
    }
    mean_sim /= static_cast<double>(pairs);

    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sim(i, j) > mean_sim) g.add_edge(i, j);
    return g;
}

}  // namespace prefrank
