#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefrank/matrix.hpp"

namespace prefrank {

// Simple undirected graph over nodes 0..n-1, stored as a dense 0/1
// adjacency matrix (n stays small enough here that sparsity never pays).
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);

    int n() const { return n_; }
    bool edge(int i, int j) const { return adj_[static_cast<size_t>(i) * n_ + j] != 0; }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    int degree(int i) const;
    long edge_count() const;

    // dense 0/1 adjacency as a Matrix
    Matrix adjacency() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    std::vector<uint8_t> adj_;
};

// Canonical lexicographic enumeration of node pairs (i, j), i < j:
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
class PairIndex {
public:
    explicit PairIndex(int n);

    int n() const { return n_; }
    int count() const { return static_cast<int>(pairs_.size()); }  // N = n(n-1)/2

    std::pair<int, int> pair_of(int k) const { return pairs_[k]; }
    int index_of(int i, int j) const;

    int first(int k) const { return pairs_[k].first; }
    int second(int k) const { return pairs_[k].second; }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

Graph gen_complete(int n);

// k near-equal contiguous blocks (sizes differ by at most one), each a clique
Graph gen_union_cliques(int n, int k);

// r-regular graph via the configuration model with edge-swap repair.
// Throws if n*r is odd or the construction fails after max_restarts.
Graph gen_regular(int n, int r, uint64_t seed, int max_restarts = 100);

Graph gen_erdos_renyi(int n, double q, uint64_t seed);

// Two balanced clusters: within-cluster edges w.p. p, cross-cluster w.p. q.
Graph gen_two_cluster(int n, double p, double q, uint64_t seed);

// RBF similarity s_ij = exp(-|x_i - x_j|^2 / (2 mu^2)) with mu the mean
// pairwise distance; edge iff s_ij is strictly above the mean off-diagonal
// similarity. Throws if all points coincide (mu = 0).
Graph graph_from_features(const std::vector<std::vector<double>>& x);

}  // namespace prefrank
