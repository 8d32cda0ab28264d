#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "prefrank/rng.hpp"
#include "prefrank/svm.hpp"

using namespace prefrank;

namespace {

// Dense-grid oracle for the box dual, grid step `step` per coordinate.
// The last coordinate's grid maximum of a concave 1-D quadratic sits at the
// grid point nearest the clamped vertex, so it is resolved analytically and
// the result equals exhaustive enumeration of the full grid.
double grid_oracle(const Matrix& q, double C, double step) {
    const int m = q.rows();
    const int steps = static_cast<int>(std::round(C / step));
    std::vector<double> alpha(m, 0.0);
    double best = 0.0;

    auto objective = [&](const std::vector<double>& a) {
        double lin = 0.0, quad = 0.0;
        for (int i = 0; i < m; ++i) {
            lin += a[i];
            for (int j = 0; j < m; ++j) quad += a[i] * a[j] * q(i, j);
        }
        return lin - 0.5 * quad;
    };

    std::function<void(int)> rec = [&](int coord) {
        if (coord == m - 1) {
            // maximize over the last coordinate's grid analytically
            double lin = 1.0, curv = q(coord, coord);
            for (int j = 0; j < m - 1; ++j) lin -= alpha[j] * q(coord, j);
            double target;
            if (curv > 0.0)
                target = std::clamp(lin / curv, 0.0, C);
            else
                target = lin > 0.0 ? C : 0.0;
            // nearest grid points around the clamped vertex
            const int lo = std::clamp(static_cast<int>(std::floor(target / step)), 0, steps);
            const int hi = std::clamp(lo + 1, 0, steps);
            for (int g : {lo, hi}) {
                alpha[coord] = g * step;
                best = std::max(best, objective(alpha));
            }
            alpha[coord] = 0.0;
            return;
        }
        for (int g = 0; g <= steps; ++g) {
            alpha[coord] = g * step;
            rec(coord + 1);
        }
        alpha[coord] = 0.0;
    };
    rec(0);
    return best;
}

PairKernel tiny_kernel(int n, PairMode mode, uint64_t seed) {
    return pair_kernel(ls_kernel(gen_erdos_renyi(n, 0.5, seed)), mode);
}

SvmProblem make_problem(const PairKernel& k, std::vector<int> idx, std::vector<int> y, double C,
                        double tol = 1e-9) {
    SvmProblem p;
    p.kernel = &k;
    p.indices = std::move(idx);
    p.labels = std::move(y);
    p.C = C;
    p.tol = tol;
    return p;
}

Matrix restricted_gram(const PairKernel& k, const std::vector<int>& idx, const std::vector<int>& y) {
    const int m = static_cast<int>(idx.size());
    Matrix q(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) q(a, b) = y[a] * y[b] * k.eval(idx[a], idx[b]);
    return q;
}

}  // namespace

TEST_CASE("one-dimensional closed forms") {
    const PairKernel k = pair_kernel(ls_kernel(gen_complete(2)), PairMode::Kronecker);
    REQUIRE(k.diagonal(0) == doctest::Approx(1.0));

    SUBCASE("interior optimum") {
        const SvmSolution sol = solve_dual(make_problem(k, {0}, {1}, 10.0));
        CHECK(sol.alpha[0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(sol.dual_objective == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(sol.scores[0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(sol.converged);
    }
    SUBCASE("box-clipped optimum") {
        const SvmSolution sol = solve_dual(make_problem(k, {0}, {1}, 0.3));
        CHECK(sol.alpha[0] == doctest::Approx(0.3));
        CHECK(sol.dual_objective == doctest::Approx(0.255));
    }
}

TEST_CASE("duplicate points with opposite labels saturate the box") {
    // two training pairs with identical embeddings: Gram is all ones
    const PairKernel k = pair_kernel(ls_kernel(gen_complete(3)), PairMode::Kronecker);
    const SvmSolution sol = solve_dual(make_problem(k, {0, 1}, {1, -1}, 1.0));
    CHECK(sol.alpha[0] == doctest::Approx(1.0));
    CHECK(sol.alpha[1] == doctest::Approx(1.0));
    CHECK(sol.dual_objective == doctest::Approx(2.0));
    CHECK(sol.scores[0] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("input validation") {
    const PairKernel k = tiny_kernel(5, PairMode::Kronecker, 1);
    CHECK_THROWS_AS(solve_dual(make_problem(k, {}, {}, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(solve_dual(make_problem(k, {0, 0}, {1, 1}, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(solve_dual(make_problem(k, {0}, {2}, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(solve_dual(make_problem(k, {0}, {1}, -1.0)), std::invalid_argument);
}

TEST_CASE("solver matches the dense grid oracle on m <= 3") {
    Rng rng(23);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 4 + static_cast<int>(rng.uniform_index(3));
        const PairMode mode = rep % 2 == 0 ? PairMode::Kronecker : PairMode::PairwiseDifference;
        const PairKernel k = tiny_kernel(n, mode, rng.next_u64());
        const int m = 1 + static_cast<int>(rng.uniform_index(3));
        std::vector<int> idx(k.count());
        std::iota(idx.begin(), idx.end(), 0);
        Rng shuffler(rng.next_u64());
        shuffler.shuffle(idx);
        idx.resize(m);
        std::vector<int> y(m);
        for (int& v : y) v = rng.bernoulli(0.5) ? 1 : -1;
        const double C = 1.0;

        const SvmSolution sol = solve_dual(make_problem(k, idx, y, C));
        const double oracle = grid_oracle(restricted_gram(k, idx, y), C, 1e-3);
        CHECK(std::fabs(sol.dual_objective - oracle) <= 1e-3);
        CHECK(sol.dual_objective >= oracle - 1e-7);  // grid points are feasible
    }
}

TEST_CASE("duality gap and KKT on random problems") {
    Rng rng(77);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 5 + static_cast<int>(rng.uniform_index(4));
        const PairMode mode = rep % 2 == 0 ? PairMode::Kronecker : PairMode::PairwiseDifference;
        const PairKernel k = tiny_kernel(n, mode, rng.next_u64());
        const int m = 2 + static_cast<int>(rng.uniform_index(std::min(k.count(), 20) - 1));
        std::vector<int> idx(k.count());
        std::iota(idx.begin(), idx.end(), 0);
        Rng shuffler(rng.next_u64());
        shuffler.shuffle(idx);
        idx.resize(m);
        std::vector<int> y(m);
        for (int& v : y) v = rng.bernoulli(0.5) ? 1 : -1;

        SvmProblem p = make_problem(k, idx, y, 0.25 + 1.5 * rng.uniform(), 1e-9);
        const SvmSolution sol = solve_dual(p);
        const double gap = dual_gap(p, sol);
        CHECK(gap <= 1e-6);
        CHECK(gap >= -1e-9);
        CHECK(kkt_violation(p, sol) <= 1e-8);
    }
}

TEST_CASE("alpha = 0 on separable data gives gap C*m") {
    const PairKernel k = tiny_kernel(5, PairMode::Kronecker, 3);
    SvmProblem p = make_problem(k, {0, 3, 7}, {1, -1, 1}, 0.5);
    SvmSolution zero;
    zero.alpha.assign(3, 0.0);
    zero.dual_objective = 0.0;
    zero.beta.assign(k.count(), 0.0);
    zero.scores.assign(k.count(), 0.0);
    CHECK(dual_gap(p, zero) == doctest::Approx(0.5 * 3.0));
}

TEST_CASE("permuting the sample permutes alpha and preserves scores") {
    const PairKernel k = tiny_kernel(6, PairMode::Kronecker, 9);
    const std::vector<int> idx = {0, 2, 5, 9, 11};
    const std::vector<int> y = {1, -1, 1, 1, -1};
    const SvmSolution a = solve_dual(make_problem(k, idx, y, 1.0));

    const std::vector<int> perm = {3, 0, 4, 1, 2};
    std::vector<int> idx_p(5), y_p(5);
    for (int i = 0; i < 5; ++i) {
        idx_p[i] = idx[perm[i]];
        y_p[i] = y[perm[i]];
    }
    const SvmSolution b = solve_dual(make_problem(k, idx_p, y_p, 1.0));
    for (int i = 0; i < 5; ++i) CHECK(b.alpha[i] == doctest::Approx(a.alpha[perm[i]]).epsilon(1e-7));
    for (int j = 0; j < k.count(); ++j) CHECK(b.scores[j] == doctest::Approx(a.scores[j]).epsilon(1e-7));
}

TEST_CASE("row cache size does not change the result") {
    const PairKernel k = tiny_kernel(8, PairMode::PairwiseDifference, 15);
    std::vector<int> idx(k.count());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> y(idx.size());
    Rng rng(4);
    for (int& v : y) v = rng.bernoulli(0.5) ? 1 : -1;

    SvmProblem big = make_problem(k, idx, y, 1.0);
    big.cache_rows = 1024;
    SvmProblem tiny = make_problem(k, idx, y, 1.0);
    tiny.cache_rows = 2;
    const SvmSolution a = solve_dual(big);
    const SvmSolution b = solve_dual(tiny);
    CHECK(a.dual_objective == doctest::Approx(b.dual_objective).epsilon(1e-12));
    for (size_t i = 0; i < a.alpha.size(); ++i) CHECK(a.alpha[i] == b.alpha[i]);
}

TEST_CASE("omega closed forms and unboundedness") {
    SUBCASE("identity kernel gives n/2") {
        for (int n : {1, 3, 6}) {
            std::vector<int> y(n);
            for (int i = 0; i < n; ++i) y[i] = i % 2 == 0 ? 1 : -1;
            CHECK(omega(Matrix::identity(n), y) == doctest::Approx(n / 2.0).epsilon(1e-7));
        }
    }
    SUBCASE("all-ones kernel with equal labels") {
        CHECK(omega(Matrix(2, 2, 1.0), {1, 1}) == doctest::Approx(0.5).epsilon(1e-7));
    }
    SUBCASE("identical points with opposite labels are unbounded") {
        // the dual ridge alpha_1 = alpha_2 grows without limit
        CHECK_THROWS_AS(omega(Matrix(2, 2, 1.0), {1, -1}), std::runtime_error);
    }
}

TEST_CASE("omega agrees with a 2-D grid oracle on a bounded problem") {
    Matrix k(2, 2);
    k(0, 0) = 2.0;
    k(1, 1) = 1.5;
    k(0, 1) = 0.5;
    k(1, 0) = 0.5;
    const std::vector<int> y = {1, -1};
    Matrix q(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q(i, j) = y[i] * y[j] * k(i, j);
    const double oracle = grid_oracle(q, 4.0, 1e-3);  // optimum is well inside [0,4]^2
    CHECK(omega(k, y) == doctest::Approx(oracle).epsilon(1e-3));
}
