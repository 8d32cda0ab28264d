#pragma once

#include <functional>
#include <vector>

#include "prefrank/kernels.hpp"

namespace prefrank {

// Box-constrained SVM dual over a pair kernel restricted to the labelled
// sample:
//   max_alpha  sum_k alpha_k - 1/2 sum_{k,l} alpha_k alpha_l y_k y_l Ktilde(k,l)
//   s.t.       0 <= alpha_k <= C
// There is no bias term, hence no equality constraint.
struct SvmProblem {
    const PairKernel* kernel = nullptr;
    std::vector<int> indices;  // distinct pair ids in [0, N)
    std::vector<int> labels;   // +1 / -1
    double C = 1.0;
    double tol = 1e-6;
    long max_passes = 0;  // sweep cap; 0 means 10*m
    int cache_rows = 256;
};

struct SvmSolution {
    std::vector<double> alpha;   // size m, in [0, C]
    double dual_objective = 0.0;
    std::vector<double> scores;  // size N: f*_k = sum_l y_l alpha_l Ktilde(l, k)
    std::vector<double> beta;    // size N: y_k alpha_k on sampled indices, else 0
    int sweeps = 0;
    bool converged = false;
};

SvmSolution solve_dual(const SvmProblem& problem);

// primal value (1/2 |w|^2 + C sum hinge) minus dual objective; >= 0 up to
// rounding at an optimum
double dual_gap(const SvmProblem& problem, const SvmSolution& solution);

// Largest KKT violation of the solution:
//   alpha = 0  =>  y f >= 1,   0 < alpha < C  =>  y f = 1,   alpha = C  =>  y f <= 1
double kkt_violation(const SvmProblem& problem, const SvmSolution& solution);

struct OmegaOptions {
    double box = 1e6;        // "C = infinity" stand-in
    double tol = 1e-8;
    long max_passes = 200000;
    double objective_cap = 1e12;
};

// One-class-of-constraints SVM dual optimum omega(K, y) with alpha >= 0 only.
// Throws std::runtime_error when the dual is detected to be unbounded.
double omega(const Matrix& k, const std::vector<int>& y, OmegaOptions opts = {});

namespace detail {

struct BoxQpResult {
    std::vector<double> alpha;
    double objective = 0.0;
    std::vector<double> gradient;  // dual gradient 1 - y_k f_k at the solution
    int sweeps = 0;
    bool converged = false;
};

// Deterministic sweeps of SMO-style two-coordinate updates; the partner of
// the sweep coordinate is chosen by largest projected gradient.
BoxQpResult box_qp_max(int m, const std::function<double(int, int)>& entry,
                       const std::vector<int>& y, double C, double tol, long max_sweeps,
                       int cache_rows);

}  // namespace detail

}  // namespace prefrank
