#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "prefrank/kernels.hpp"

namespace prefrank {

enum class ThetaGraphFamily { Complete, UnionOfCliques, ComplementPowerLaw, ComplementKColorable, ErdosRenyi };

struct ThetaFamily {
    ThetaGraphFamily family = ThetaGraphFamily::Complete;
    int k = 1;  // clique count / colorability, where it applies
};

// Upper-bound constant on theta(G) used by the consistency corollary for the
// special families. Power-law and random graphs are order-level (constant
// taken as 1, i.e. sqrt(n)).
double theta_bound(const ThetaFamily& family, int n);

// Analytic transductive Rademacher bounds:
//   Kronecker:           C lambda_1(K) sqrt(2p)
//   PairwiseDifference:  2C sqrt(p n lambda_1(K))
double rademacher_bound(const NodeKernel& k, PairMode mode, double C, double p);

// Generic bound from the largest pair-kernel eigenvalue: C sqrt(2p lambda_1).
double rademacher_bound_generic(double lambda1_pair, double C, double p);

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    int draws = 0;
};

// Monte Carlo estimate of the transductive Rademacher complexity of the
// box-bounded class: mean over draws of C |Ktilde gamma|_1 / N, with gamma
// entries +1/-1/0 w.p. (p, p, 1-2p). Needs the materialized pair kernel.
McEstimate rademacher_mc(const Matrix& pair_kernel, double C, double p, int draws, uint64_t seed);

struct GeneralizationInputs {
    PairMode mode = PairMode::Kronecker;
    double lambda1 = 1.0;  // lambda_1 of the node kernel
    int n = 0;             // node count (used by the PD slack)
    double C = 1.0;
    double f = 0.5;
    long N = 0;
    double delta = 0.05;
    double rho = 1.0;
    double B = 1.0;
    double C1 = 5.05;  // concentration constant, c = sqrt(32 ln(4e)/3) < 5.05
};

// Right-hand side of the generalization bound: train error + Rademacher
// slack at p = f(1-f) + confidence tail.
double generalization_rhs(double train_error, const GeneralizationInputs& in);

struct SampleComplexity {
    double f_star = 0.0;   // required fraction of pairs, clamped to (0, 1]
    long m_star = 0;       // ceil(N f*)
    double thm_bound = 0.0;  // (1/2) (n^{2+2eps} theta)^{2/3}
};

// f* = (sqrt(theta) / n^{1/2 - eps})^{4/3}; requires
// 1 <= theta <= n and 0 < eps < (1 - log_n theta)/2.
SampleComplexity sample_complexity(double theta, int n, double epsilon);

struct BoundReport {
    std::string embedding;
    double lambda1_node = 0.0;
    std::optional<double> lambda1_pair;
    double bound_value = 0.0;
    std::optional<double> mc_estimate;
    std::optional<double> mc_stderr;
    double p = 0.0;
    double C = 0.0;

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv() const;
};

}  // namespace prefrank
