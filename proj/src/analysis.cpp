#include "prefrank/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "prefrank/rng.hpp"

namespace prefrank {

double theta_bound(const ThetaFamily& family, int n) {
    if (n < 1) throw std::invalid_argument("theta_bound: n must be positive");
    switch (family.family) {
        case ThetaGraphFamily::Complete: return 1.0;
        case ThetaGraphFamily::UnionOfCliques:
            if (family.k < 1 || family.k > n)
                throw std::invalid_argument("theta_bound: need 1 <= k <= n");
            return static_cast<double>(family.k);
        case ThetaGraphFamily::ComplementKColorable:
            if (family.k < 1) throw std::invalid_argument("theta_bound: need k >= 1");
            return static_cast<double>(family.k);
        case ThetaGraphFamily::ComplementPowerLaw: return std::sqrt(static_cast<double>(n));
        case ThetaGraphFamily::ErdosRenyi: return std::sqrt(static_cast<double>(n));
    }
    throw std::invalid_argument("theta_bound: unknown family");
}

double rademacher_bound(const NodeKernel& k, PairMode mode, double C, double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("rademacher_bound: p must be in [0,1]");
    const double lambda1 = lambda1_node(k);
    if (mode == PairMode::Kronecker) return C * lambda1 * std::sqrt(2.0 * p);
    return 2.0 * C * std::sqrt(p * k.n() * lambda1);
}

double rademacher_bound_generic(double lambda1_pair, double C, double p) {
    return C * std::sqrt(2.0 * p * lambda1_pair);
}

McEstimate rademacher_mc(const Matrix& pair_kernel, double C, double p, int draws, uint64_t seed) {
    if (!(p > 0.0 && p <= 0.5)) throw std::invalid_argument("rademacher_mc: p must be in (0, 1/2]");
    if (draws < 2) throw std::invalid_argument("rademacher_mc: need at least 2 draws");
    const int N = pair_kernel.rows();
    if (pair_kernel.cols() != N) throw std::invalid_argument("rademacher_mc: kernel not square");

    Rng rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    std::vector<int> nonzero;
    std::vector<double> gamma_val;
    for (int d = 0; d < draws; ++d) {
        nonzero.clear();
        gamma_val.clear();
        for (int k = 0; k < N; ++k) {
            const double u = rng.uniform();
            if (u < p) {
                nonzero.push_back(k);
                gamma_val.push_back(1.0);
            } else if (u < 2.0 * p) {
                nonzero.push_back(k);
                gamma_val.push_back(-1.0);
            }
        }
        // sup over the box |beta|_inf <= C of beta' Ktilde gamma is C |Ktilde gamma|_1
        double l1 = 0.0;
        for (int row = 0; row < N; ++row) {
            double s = 0.0;
            for (size_t t = 0; t < nonzero.size(); ++t) s += pair_kernel(row, nonzero[t]) * gamma_val[t];
            l1 += std::fabs(s);
        }
        const double v = C * l1 / static_cast<double>(N);
        sum += v;
        sum_sq += v * v;
    }
    McEstimate out;
    out.draws = draws;
    out.estimate = sum / draws;
    const double var = std::max(0.0, (sum_sq - sum * sum / draws) / (draws - 1));
    out.stderr_ = std::sqrt(var / draws);
    return out;
}

double generalization_rhs(double train_error, const GeneralizationInputs& in) {
    if (!(in.f > 0.0 && in.f < 1.0)) throw std::invalid_argument("generalization_rhs: f in (0,1)");
    if (!(in.delta > 0.0 && in.delta < 1.0))
        throw std::invalid_argument("generalization_rhs: delta in (0,1)");
    const double p = in.f * (1.0 - in.f);
    double slack;
    if (in.mode == PairMode::Kronecker) {
        slack = in.C * in.lambda1 * std::sqrt(2.0) / (in.rho * std::sqrt(p));
    } else {
        slack = 2.0 * in.C * std::sqrt(static_cast<double>(in.n) * in.lambda1) /
                (in.rho * std::sqrt(p));
    }
    const double tail = in.C1 * in.B / (1.0 - in.f) *
                        std::sqrt(std::log(1.0 / in.delta) / (static_cast<double>(in.N) * in.f));
    return train_error + slack + tail;
}

SampleComplexity sample_complexity(double theta, int n, double epsilon) {
    if (n < 2) throw std::invalid_argument("sample_complexity: n must be >= 2");
    if (theta < 1.0 || theta > static_cast<double>(n))
        throw std::invalid_argument("sample_complexity: need 1 <= theta <= n");
    const double c = std::log(theta) / std::log(static_cast<double>(n));  // theta = n^c
    if (!(epsilon > 0.0 && epsilon < (1.0 - c) / 2.0))
        throw std::invalid_argument("sample_complexity: epsilon outside (0, (1 - log_n theta)/2)");

    SampleComplexity out;
    const double f = std::pow(std::sqrt(theta) / std::pow(n, 0.5 - epsilon), 4.0 / 3.0);
    out.f_star = std::min(f, 1.0);
    const double N = static_cast<double>(n) * (n - 1) / 2.0;
    out.m_star = static_cast<long>(std::ceil(N * out.f_star));
    out.thm_bound = 0.5 * std::pow(std::pow(n, 2.0 + 2.0 * epsilon) * theta, 2.0 / 3.0);
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string BoundReport::to_json() const {
    std::ostringstream os;
    os << "{\"embedding\":\"" << embedding << "\",\"lambda1_node\":" << fmt(lambda1_node);
    if (lambda1_pair) os << ",\"lambda1_pair\":" << fmt(*lambda1_pair);
    os << ",\"bound_value\":" << fmt(bound_value);
    if (mc_estimate) os << ",\"mc_estimate\":" << fmt(*mc_estimate);
    if (mc_stderr) os << ",\"mc_stderr\":" << fmt(*mc_stderr);
    os << ",\"p\":" << fmt(p) << ",\"C\":" << fmt(C) << "}";
    return os.str();
}

std::string BoundReport::csv_header() {
    return "embedding,lambda1_node,lambda1_pair,bound_value,mc_estimate,mc_stderr,p,C";
}

std::string BoundReport::to_csv() const {
    std::ostringstream os;
    os << embedding << ',' << fmt(lambda1_node) << ',';
    if (lambda1_pair) os << fmt(*lambda1_pair);
    os << ',' << fmt(bound_value) << ',';
    if (mc_estimate) os << fmt(*mc_estimate);
    os << ',';
    if (mc_stderr) os << fmt(*mc_stderr);
    os << ',' << fmt(p) << ',' << fmt(C);
    return os.str();
}

}  // namespace prefrank
