#include "doctest.h"

#include <cmath>

#include "prefrank/graph.hpp"

using namespace prefrank;

namespace {

void check_simple(const Graph& g) {
    for (int i = 0; i < g.n(); ++i) {
        CHECK_FALSE(g.edge(i, i));
        for (int j = 0; j < g.n(); ++j) CHECK(g.edge(i, j) == g.edge(j, i));
    }
}

}  // namespace

TEST_CASE("pair index is the lexicographic bijection") {
    const PairIndex pairs(5);
    CHECK(pairs.count() == 10);
    CHECK(pairs.pair_of(0) == std::pair<int, int>{0, 1});
    CHECK(pairs.pair_of(4) == std::pair<int, int>{1, 2});
    CHECK(pairs.pair_of(9) == std::pair<int, int>{3, 4});
    for (int k = 0; k < pairs.count(); ++k) {
        auto [i, j] = pairs.pair_of(k);
        CHECK(i < j);
        CHECK(pairs.index_of(i, j) == k);
        CHECK(pairs.index_of(j, i) == k);
    }
}

TEST_CASE("gen_complete") {
    CHECK(gen_complete(1).edge_count() == 0);
    CHECK(gen_complete(3).edge_count() == 3);
    CHECK(gen_complete(10).edge_count() == 45);
    check_simple(gen_complete(10));
}

TEST_CASE("gen_union_cliques") {
    CHECK(gen_union_cliques(4, 2).edge_count() == 2);
    CHECK(gen_union_cliques(30, 10).edge_count() == 30);
    // n=5, k=2: blocks of 3 and 2 -> C(3,2) + C(2,2) = 4 edges
    const Graph g = gen_union_cliques(5, 2);
    CHECK(g.edge_count() == 4);
    CHECK(g.edge(0, 1));
    CHECK(g.edge(0, 2));
    CHECK(g.edge(3, 4));
    CHECK_FALSE(g.edge(2, 3));
    CHECK_THROWS_AS(gen_union_cliques(3, 4), std::invalid_argument);
}

TEST_CASE("gen_regular") {
    const Graph k4 = gen_regular(4, 3, 0);
    CHECK(k4 == gen_complete(4));

    const Graph g = gen_regular(30, 5, 123);
    check_simple(g);
    for (int i = 0; i < g.n(); ++i) CHECK(g.degree(i) == 5);

    CHECK_THROWS_AS(gen_regular(3, 1, 0), std::invalid_argument);  // odd n*r

    CHECK(gen_regular(30, 5, 99) == gen_regular(30, 5, 99));
}

TEST_CASE("gen_erdos_renyi") {
    CHECK(gen_erdos_renyi(20, 0.0, 1).edge_count() == 0);
    CHECK(gen_erdos_renyi(20, 1.0, 1) == gen_complete(20));

    const Graph g = gen_erdos_renyi(100, 0.5, 7);
    check_simple(g);
    // mean 2475, sd sqrt(4950 * 0.25) ~ 35.2; allow four sigma
    CHECK(std::fabs(static_cast<double>(g.edge_count()) - 2475.0) < 4.0 * 35.2);

    CHECK(gen_erdos_renyi(40, 0.3, 5) == gen_erdos_renyi(40, 0.3, 5));
    CHECK_FALSE(gen_erdos_renyi(40, 0.3, 5) == gen_erdos_renyi(40, 0.3, 6));
}

TEST_CASE("gen_two_cluster") {
    CHECK(gen_two_cluster(10, 1.0, 0.0, 3) == gen_union_cliques(10, 2));
    const Graph g = gen_two_cluster(100, 0.6, 0.1, 11);
    check_simple(g);
    CHECK_THROWS_AS(gen_two_cluster(5, 0.5, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_two_cluster(10, 0.2, 0.5, 0), std::invalid_argument);
}

TEST_CASE("graph_from_features follows the strict mean threshold") {
    // two distinct points: the mean similarity equals their similarity
    CHECK(graph_from_features({{0.0}, {1.0}}).edge_count() == 0);

    // three collinear equally spaced points: short pairs above the mean
    const Graph g = graph_from_features({{0.0}, {1.0}, {2.0}});
    CHECK(g.edge(0, 1));
    CHECK(g.edge(1, 2));
    CHECK_FALSE(g.edge(0, 2));

    // identical cloud plus an outlier: dense core, detached outlier
    const Graph h = graph_from_features({{0.0}, {0.0}, {0.0}, {0.0}, {5.0}});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(h.edge(i, j));
    for (int i = 0; i < 4; ++i) CHECK_FALSE(h.edge(i, 4));

    CHECK_THROWS_AS(graph_from_features({{1.0}, {1.0}, {1.0}}), std::invalid_argument);
}
