#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prefrank/ranking.hpp"
#include "prefrank/rng.hpp"

using namespace prefrank;

namespace {

Ranking make_ranking(std::vector<int> sigma) {
    Ranking r;
    r.sigma = std::move(sigma);
    REQUIRE(r.valid());
    return r;
}

PreferenceVector fr_pref(std::vector<double> values) {
    PreferenceVector p;
    p.task = Task::FR;
    p.values = std::move(values);
    return p;
}

}  // namespace

TEST_CASE("sample_pairs") {
    const PreferenceVector pref = fr_pref({3.0, 2.0, 1.0});

    SUBCASE("full census with distinct preferences keeps every pair") {
        const PreferenceSample s = sample_pairs(3, 1.0, pref, 1);
        CHECK(s.size() == 3);
        CHECK(s.dropped_ties == 0);
        // lexicographic pairs (0,1), (0,2), (1,2) all prefer the lower index
        for (int i = 0; i < s.size(); ++i) CHECK(s.labels[i] == 1);
    }
    SUBCASE("all-equal preferences drop everything") {
        PreferenceVector tied;
        tied.task = Task::BR;
        tied.values = {1.0, 1.0, 1.0};
        const PreferenceSample s = sample_pairs(3, 1.0, tied, 1);
        CHECK(s.size() == 0);
        CHECK(s.dropped_ties == 3);
    }
    SUBCASE("sample size is ceil(N f) before tie removal") {
        const PreferenceVector p10 = [] {
            PreferenceVector p;
            p.task = Task::FR;
            for (int i = 0; i < 10; ++i) p.values.push_back(i);
            return p;
        }();
        const PreferenceSample s = sample_pairs(10, 0.3, p10, 5);
        CHECK(s.size() + s.dropped_ties == 14);  // ceil(45 * 0.3)
        std::vector<int> sorted = s.indices;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(sample_pairs(3, 0.0, pref, 1), std::invalid_argument);
        CHECK_THROWS_AS(sample_pairs(3, 1.5, pref, 1), std::invalid_argument);
    }
    SUBCASE("same seed, same sample") {
        const PreferenceSample a = sample_pairs(3, 0.5, pref, 42);
        const PreferenceSample b = sample_pairs(3, 0.5, pref, 42);
        CHECK(a.indices == b.indices);
        CHECK(a.labels == b.labels);
    }
}

TEST_CASE("win counts and the induced ranking") {
    const PairIndex pairs(3);

    SUBCASE("all positive scores rank by index") {
        const std::vector<int> c = win_counts({1.0, 1.0, 1.0}, pairs);
        CHECK(c == std::vector<int>{2, 1, 0});
        CHECK(ranking_from_win_counts(c).sigma == std::vector<int>{1, 2, 3});
    }
    SUBCASE("all negative scores reverse") {
        const std::vector<int> c = win_counts({-1.0, -1.0, -1.0}, pairs);
        CHECK(c == std::vector<int>{0, 1, 2});
        CHECK(ranking_from_win_counts(c).sigma == std::vector<int>{3, 2, 1});
    }
    SUBCASE("zero scores count for neither side; ties break by index") {
        const PairIndex one(2);
        const std::vector<int> c = win_counts({0.0}, one);
        CHECK(c == std::vector<int>{0, 0});
        CHECK(ranking_from_win_counts(c).sigma == std::vector<int>{1, 2});
    }
}

TEST_CASE("kendall tau") {
    const Ranking id = make_ranking({1, 2, 3});
    CHECK(kendall_tau(id, id) == 0.0);
    CHECK(kendall_tau(id, make_ranking({3, 2, 1})) == 1.0);
    CHECK(kendall_tau(id, make_ranking({2, 1, 3})) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(kendall_tau(id, make_ranking({1, 2})), std::invalid_argument);
}

TEST_CASE("spearman footrule") {
    const Ranking id = make_ranking({1, 2, 3});
    CHECK(spearman_footrule(id, id) == 0.0);
    CHECK(spearman_footrule(id, make_ranking({2, 1, 3})) == doctest::Approx(2.0 / 3.0));
    CHECK(spearman_footrule(make_ranking({1, 2}), make_ranking({2, 1})) == doctest::Approx(1.0));
}

TEST_CASE("Diaconis-Graham: K <= F <= 2K, exhaustive to n = 5, random to n = 8") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 1);
        do {
            std::iota(b.begin(), b.end(), 1);
            do {
                Ranking ra, rb;
                ra.sigma = a;
                rb.sigma = b;
                const long K = kendall_raw(ra, rb);
                const long F = footrule_raw(ra, rb);
                REQUIRE(K <= F);
                REQUIRE(F <= 2 * K);
            } while (std::next_permutation(b.begin(), b.end()));
        } while (std::next_permutation(a.begin(), a.end()));
    }
    Rng rng(3);
    for (int rep = 0; rep < 2000; ++rep) {
        const int n = 6 + static_cast<int>(rng.uniform_index(3));
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        rng.shuffle(a);
        rng.shuffle(b);
        Ranking ra, rb;
        ra.sigma = a;
        rb.sigma = b;
        const long K = kendall_raw(ra, rb);
        const long F = footrule_raw(ra, rb);
        REQUIRE(K <= F);
        REQUIRE(F <= 2 * K);
    }
}

TEST_CASE("distances are symmetric and invariant under relabeling") {
    Rng rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 3 + static_cast<int>(rng.uniform_index(6));
        std::vector<int> a(n), b(n), perm(n);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(a);
        rng.shuffle(b);
        rng.shuffle(perm);
        Ranking ra, rb, rap, rbp;
        ra.sigma = a;
        rb.sigma = b;
        rap.sigma.resize(n);
        rbp.sigma.resize(n);
        for (int i = 0; i < n; ++i) {
            rap.sigma[i] = a[perm[i]];
            rbp.sigma[i] = b[perm[i]];
        }
        CHECK(kendall_tau(ra, rb) == kendall_tau(rb, ra));
        CHECK(spearman_footrule(ra, rb) == spearman_footrule(rb, ra));
        CHECK(kendall_tau(ra, rb) == kendall_tau(rap, rbp));
        CHECK(spearman_footrule(ra, rb) == spearman_footrule(rap, rbp));
    }
}

TEST_CASE("pairwise_error losses") {
    const PreferenceVector pref = fr_pref({3.0, 2.0, 1.0});  // labels +1 on all pairs

    SUBCASE("perfect scores") {
        CHECK(pairwise_error({1.0, 2.0, 0.5}, pref, PairSubset::DistinctPrefs, PairLoss::ZeroOne) ==
              0.0);
    }
    SUBCASE("all-zero scores count as mispredictions") {
        CHECK(pairwise_error({0.0, 0.0, 0.0}, pref, PairSubset::DistinctPrefs, PairLoss::ZeroOne) ==
              1.0);
    }
    SUBCASE("hinge and ramp") {
        CHECK(pairwise_error({0.5, 1.0, 1.0}, pref, PairSubset::DistinctPrefs, PairLoss::Hinge) ==
              doctest::Approx(0.5 / 3.0));
        CHECK(pairwise_error({-9.0, 1.0, 1.0}, pref, PairSubset::DistinctPrefs, PairLoss::Ramp) ==
              doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("ramp is dominated by hinge and matches zero-one at unit margins") {
        Rng rng(8);
        PreferenceVector p;
        p.task = Task::FR;
        for (int i = 0; i < 6; ++i) p.values.push_back(6.0 - i);
        std::vector<double> scores(15);
        for (double& s : scores) s = rng.uniform() * 4.0 - 2.0;
        const double hinge = pairwise_error(scores, p, PairSubset::All, PairLoss::Hinge);
        const double ramp = pairwise_error(scores, p, PairSubset::All, PairLoss::Ramp);
        CHECK(ramp <= hinge + 1e-12);
        std::vector<double> big = scores;
        for (double& s : big) s = s >= 0.0 ? s + 1.0 : s - 1.0;  // push margins past 1
        CHECK(pairwise_error(big, p, PairSubset::All, PairLoss::Ramp) ==
              pairwise_error(big, p, PairSubset::All, PairLoss::ZeroOne));
    }
    SUBCASE("train/test need a sample") {
        CHECK_THROWS_AS(pairwise_error({1.0, 1.0, 1.0}, pref, PairSubset::Train, PairLoss::ZeroOne),
                        std::invalid_argument);
        const PreferenceSample s = sample_pairs(3, 0.4, pref, 2);  // 2 of 3 pairs
        const double train =
            pairwise_error({-1.0, -1.0, -1.0}, pref, PairSubset::Train, PairLoss::ZeroOne, &s);
        CHECK(train == 1.0);
    }
}

TEST_CASE("pref_rank end to end on a separable full census") {
    const Graph g = gen_union_cliques(6, 2);
    PreferenceVector pref = fr_pref({6.0, 5.0, 4.0, 3.0, 2.0, 1.0});
    const PreferenceSample sample = sample_pairs(6, 1.0, pref, 3);
    const PrefRankResult res = pref_rank(g, Embedding::LSKron, sample, {});
    CHECK(res.ranking.valid());
    // full information and separable scores recover the exact order
    CHECK(kendall_tau(ranking_from_preference(pref), res.ranking) == 0.0);
    const double train =
        pairwise_error(res.scores, pref, PairSubset::Train, PairLoss::ZeroOne, &sample);
    CHECK(train == 0.0);
}

TEST_CASE("PD-mode scores are additive over node triples") {
    Rng rng(29);
    for (int rep = 0; rep < 5; ++rep) {
        const int n = 5 + static_cast<int>(rng.uniform_index(6));  // n <= 10
        const Graph g = gen_erdos_renyi(n, 0.5, rng.next_u64());
        PreferenceVector pref;
        pref.task = Task::FR;
        for (int i = 0; i < n; ++i) pref.values.push_back(rng.uniform());
        const PreferenceSample sample = sample_pairs(n, 0.6, pref, rng.next_u64());
        if (sample.size() == 0) continue;
        const PrefRankResult res = pref_rank(g, Embedding::LSPd, sample, {});
        const PairIndex pairs(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int l = j + 1; l < n; ++l) {
                    const double fij = res.scores[pairs.index_of(i, j)];
                    const double fjl = res.scores[pairs.index_of(j, l)];
                    const double fil = res.scores[pairs.index_of(i, l)];
                    CHECK(std::fabs(fil - fij - fjl) <= 1e-8);
                }
    }
}

TEST_CASE("ranking_from_preference breaks ties by node index") {
    PreferenceVector p;
    p.task = Task::OR;
    p.levels = 3;
    p.values = {2.0, 3.0, 2.0, 1.0};
    CHECK(ranking_from_preference(p).sigma == std::vector<int>{2, 1, 3, 4});
}
