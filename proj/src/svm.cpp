#include "prefrank/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace prefrank {

namespace {

// LRU cache over kernel rows restricted to the sample columns.
class RowCache {
public:
    RowCache(int m, int capacity, std::function<double(int, int)> entry)
        : m_(m), capacity_(std::max(capacity, 1)), entry_(std::move(entry)) {}

    const std::vector<double>& row(int k) {
        auto it = map_.find(k);
        if (it != map_.end()) {
            lru_.splice(lru_.begin(), lru_, it->second.first);
            return it->second.second;
        }
        if (static_cast<int>(map_.size()) >= capacity_) {
            map_.erase(lru_.back());
            lru_.pop_back();
        }
        lru_.push_front(k);
        std::vector<double> r(m_);
        for (int l = 0; l < m_; ++l) r[l] = entry_(k, l);
        auto [pos, inserted] = map_.emplace(k, std::make_pair(lru_.begin(), std::move(r)));
        return pos->second.second;
    }

private:
    int m_;
    int capacity_;
    std::function<double(int, int)> entry_;
    std::list<int> lru_;
    std::unordered_map<int, std::pair<std::list<int>::iterator, std::vector<double>>> map_;
};

double projected_gradient(double g, double a, double C) {
    if (a <= 0.0) return std::max(g, 0.0);
    if (a >= C) return std::min(g, 0.0);
    return g;
}

// Exact maximizer of g*d - q*d^2/2 over [lo, hi]; q >= 0.
double line_max(double g, double q, double lo, double hi) {
    if (q > 0.0) return std::clamp(g / q, lo, hi);
    if (g > 0.0) return hi;
    if (g < 0.0) return lo;
    return 0.0;
}

}  // namespace

namespace detail {

BoxQpResult box_qp_max(int m, const std::function<double(int, int)>& entry,
                       const std::vector<int>& y, double C, double tol, long max_sweeps,
                       int cache_rows) {
    if (m < 1) throw std::invalid_argument("box_qp_max: empty problem");
    RowCache cache(m, cache_rows, entry);

    std::vector<double> diag(m);
    double max_diag = 0.0;
    for (int k = 0; k < m; ++k) {
        diag[k] = entry(k, k);
        max_diag = std::max(max_diag, std::fabs(diag[k]));
    }
    const double neg_tol = 1e-10 * std::max(1.0, max_diag);
    for (int k = 0; k < m; ++k)
        if (diag[k] < -neg_tol)
            throw std::runtime_error("svm: negative curvature along coordinate (kernel not PSD)");

    BoxQpResult res;
    res.alpha.assign(m, 0.0);
    res.gradient.assign(m, 1.0);  // gradient of the dual: 1 - y_k f_k; f = 0 at start
    std::vector<double>& alpha = res.alpha;
    std::vector<double>& g = res.gradient;
    double obj = 0.0;

    // Change in (alpha_k1, alpha_k2) by (d1, d2); gradients are pre-update.
    auto apply = [&](int k1, int k2, double d1, double d2, double q11, double q12, double q22) {
        obj += g[k1] * d1 + g[k2] * d2 -
               0.5 * (q11 * d1 * d1 + 2.0 * q12 * d1 * d2 + q22 * d2 * d2);
        alpha[k1] += d1;
        alpha[k2] += d2;
        const std::vector<double>& r1 = cache.row(k1);
        for (int l = 0; l < m; ++l) g[l] -= d1 * y[k1] * y[l] * r1[l];
        if (d2 != 0.0) {
            const std::vector<double>& r2 = cache.row(k2);
            for (int l = 0; l < m; ++l) g[l] -= d2 * y[k2] * y[l] * r2[l];
        }
    };

    long sweeps_cap = max_sweeps > 0 ? max_sweeps : 10L * m;
    if (sweeps_cap < 8) sweeps_cap = 8;
    double prev_viol = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (long sweep = 0; sweep < sweeps_cap; ++sweep) {
        res.sweeps = static_cast<int>(sweep) + 1;
        for (int k1 = 0; k1 < m; ++k1) {
            const double pg1 = projected_gradient(g[k1], alpha[k1], C);
            if (std::fabs(pg1) <= tol) continue;

            // first-order working-set partner: largest projected gradient
            int k2 = -1;
            double best = tol;
            for (int l = 0; l < m; ++l) {
                if (l == k1) continue;
                const double pg = std::fabs(projected_gradient(g[l], alpha[l], C));
                if (pg > best) {
                    best = pg;
                    k2 = l;
                }
            }

            const double q11 = std::max(diag[k1], 0.0);
            if (k2 < 0) {
                const double d1 = line_max(g[k1], q11, -alpha[k1], C - alpha[k1]);
                if (d1 != 0.0) apply(k1, k1, d1, 0.0, q11, 0.0, 0.0);
                continue;
            }

            const double q22 = std::max(diag[k2], 0.0);
            const double q12 = y[k1] * y[k2] * cache.row(k1)[k2];
            const double l1 = -alpha[k1], u1 = C - alpha[k1];
            const double l2 = -alpha[k2], u2 = C - alpha[k2];

            // Exact 2-D box maximization of a concave quadratic:
            // interior stationary point if it exists, else the best of the
            // four clamped edge maximizers.
            double bd1 = 0.0, bd2 = 0.0, bval = 0.0;
            auto consider = [&](double d1, double d2) {
                const double v = g[k1] * d1 + g[k2] * d2 -
                                 0.5 * (q11 * d1 * d1 + 2.0 * q12 * d1 * d2 + q22 * d2 * d2);
                if (v > bval) {
                    bval = v;
                    bd1 = d1;
                    bd2 = d2;
                }
            };
            const double det = q11 * q22 - q12 * q12;
            if (det > 1e-14 * std::max(1.0, max_diag * max_diag)) {
                const double d1 = (q22 * g[k1] - q12 * g[k2]) / det;
                const double d2 = (q11 * g[k2] - q12 * g[k1]) / det;
                if (d1 >= l1 && d1 <= u1 && d2 >= l2 && d2 <= u2) consider(d1, d2);
            }
            for (double d1 : {l1, u1}) consider(d1, line_max(g[k2] - q12 * d1, q22, l2, u2));
            for (double d2 : {l2, u2}) consider(line_max(g[k1] - q12 * d2, q11, l1, u1), d2);

            if (bval > 0.0) apply(k1, k2, bd1, bd2, q11, q12, q22);
        }

        double maxviol = 0.0;
        for (int k = 0; k < m; ++k)
            maxviol = std::max(maxviol, std::fabs(projected_gradient(g[k], alpha[k], C)));
        if (maxviol <= tol) {
            res.converged = true;
            break;
        }
        if (maxviol >= prev_viol * (1.0 - 1e-3)) {
            if (++stalled >= 5) break;
        } else {
            stalled = 0;
        }
        prev_viol = maxviol;
    }

    res.objective = obj;
    return res;
}

}  // namespace detail

SvmSolution solve_dual(const SvmProblem& problem) {
    if (problem.kernel == nullptr) throw std::invalid_argument("solve_dual: no kernel");
    const int m = static_cast<int>(problem.indices.size());
    if (m < 1) throw std::invalid_argument("solve_dual: empty sample");
    if (static_cast<int>(problem.labels.size()) != m)
        throw std::invalid_argument("solve_dual: labels/indices size mismatch");
    const int N = problem.kernel->count();
    {
        std::unordered_set<int> seen;
        for (int idx : problem.indices) {
            if (idx < 0 || idx >= N) throw std::invalid_argument("solve_dual: pair index out of range");
            if (!seen.insert(idx).second) throw std::invalid_argument("solve_dual: duplicate pair index");
        }
        for (int y : problem.labels)
            if (y != 1 && y != -1) throw std::invalid_argument("solve_dual: labels must be +/-1");
    }
    if (problem.C <= 0.0) throw std::invalid_argument("solve_dual: C must be positive");

    const PairKernel& kernel = *problem.kernel;
    auto entry = [&](int k, int l) { return kernel.eval(problem.indices[k], problem.indices[l]); };
    detail::BoxQpResult qp = detail::box_qp_max(m, entry, problem.labels, problem.C, problem.tol,
                                                problem.max_passes, problem.cache_rows);

    SvmSolution sol;
    sol.alpha = std::move(qp.alpha);
    sol.dual_objective = qp.objective;
    sol.sweeps = qp.sweeps;
    sol.converged = qp.converged;
    sol.beta.assign(N, 0.0);
    for (int k = 0; k < m; ++k) sol.beta[problem.indices[k]] = problem.labels[k] * sol.alpha[k];

    sol.scores.assign(N, 0.0);
    for (int k = 0; k < m; ++k) {
        const double b = problem.labels[k] * sol.alpha[k];
        if (b == 0.0) continue;
        const int idx = problem.indices[k];
        for (int j = 0; j < N; ++j) sol.scores[j] += b * kernel.eval(idx, j);
    }
    return sol;
}

double dual_gap(const SvmProblem& problem, const SvmSolution& solution) {
    const int m = static_cast<int>(problem.indices.size());
    double w_norm_sq = 0.0;  // beta' Ktilde beta = beta' f*
    double hinge_sum = 0.0;
    for (int k = 0; k < m; ++k) {
        const int idx = problem.indices[k];
        const double fk = solution.scores[idx];
        w_norm_sq += solution.beta[idx] * fk;
        hinge_sum += std::max(0.0, 1.0 - problem.labels[k] * fk);
    }
    const double primal = 0.5 * w_norm_sq + problem.C * hinge_sum;
    return primal - solution.dual_objective;
}

double kkt_violation(const SvmProblem& problem, const SvmSolution& solution) {
    const int m = static_cast<int>(problem.indices.size());
    double viol = 0.0;
    for (int k = 0; k < m; ++k) {
        const double margin = problem.labels[k] * solution.scores[problem.indices[k]];
        const double a = solution.alpha[k];
        const double g = 1.0 - margin;
        viol = std::max(viol, std::fabs(projected_gradient(g, a, problem.C)));
    }
    return viol;
}

double omega(const Matrix& k, const std::vector<int>& y, OmegaOptions opts) {
    const int m = k.rows();
    if (m < 1 || k.cols() != m) throw std::invalid_argument("omega: bad kernel");
    if (static_cast<int>(y.size()) != m) throw std::invalid_argument("omega: label size mismatch");
    auto entry = [&](int a, int b) { return k(a, b); };
    detail::BoxQpResult qp =
        detail::box_qp_max(m, entry, y, opts.box, opts.tol, opts.max_passes, m);
    const double amax = *std::max_element(qp.alpha.begin(), qp.alpha.end());
    if (amax >= 0.999 * opts.box || qp.objective > opts.objective_cap)
        throw std::runtime_error("omega: dual appears unbounded (objective exceeds safeguard)");
    if (!qp.converged) throw std::runtime_error("omega: did not converge");
    return qp.objective;
}

}  // namespace prefrank
