#include "prefrank/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "prefrank/rng.hpp"
#include "prefrank/spectral.hpp"

namespace prefrank {

PairKernel::PairKernel(NodeKernel source, PairMode mode)
    : source_(std::move(source)), mode_(mode), pairs_(source_.n()) {}

double PairKernel::eval(int k, int l) const {
    const Matrix& m = source_.matrix;
    const int i = pairs_.first(k), j = pairs_.second(k);
    const int a = pairs_.first(l), b = pairs_.second(l);
    if (mode_ == PairMode::Kronecker) return m(i, a) * m(j, b);
    return m(i, a) - m(i, b) - m(j, a) + m(j, b);
}

std::vector<double> PairKernel::matvec(const std::vector<double>& x) const {
    const int n = source_.n();
    const int N = pairs_.count();
    if (static_cast<int>(x.size()) != N) throw std::invalid_argument("PairKernel::matvec: bad size");
    const Matrix& m = source_.matrix;
    std::vector<double> out(N, 0.0);
    if (mode_ == PairMode::PairwiseDifference) {
        // Ktilde x = E' K (E x): expand pair weights onto nodes, smooth, re-difference
        std::vector<double> node(n, 0.0);
        for (int k = 0; k < N; ++k) {
            node[pairs_.first(k)] += x[k];
            node[pairs_.second(k)] -= x[k];
        }
        std::vector<double> g = prefrank::matvec(m, node);
        for (int k = 0; k < N; ++k) out[k] = g[pairs_.first(k)] - g[pairs_.second(k)];
        return out;
    }
    // Kronecker: out_(i,j) = [K X K]_(i,j) with X the strictly upper matrix of x
    Matrix xu(n, n);
    for (int k = 0; k < N; ++k) xu(pairs_.first(k), pairs_.second(k)) = x[k];
    Matrix tmp = matmul(m, xu);
    Matrix full = matmul(tmp, m);
    for (int k = 0; k < N; ++k) out[k] = full(pairs_.first(k), pairs_.second(k));
    return out;
}

Matrix PairKernel::materialize(int max_n) const {
    if (source_.n() > max_n)
        throw std::invalid_argument("PairKernel::materialize: n exceeds the materialization guard");
    const int N = pairs_.count();
    Matrix out(N, N);
    for (int k = 0; k < N; ++k)
        for (int l = k; l < N; ++l) {
            const double v = eval(k, l);
            out(k, l) = v;
            out(l, k) = v;
        }
    return out;
}

NodeKernel laplacian_kernel(const Graph& g, bool normalized) {
    const int n = g.n();
    Matrix lap(n, n);
    if (!normalized) {
        for (int i = 0; i < n; ++i) {
            lap(i, i) = g.degree(i);
            for (int j = 0; j < n; ++j)
                if (j != i && g.edge(i, j)) lap(i, j) = -1.0;
        }
    } else {
        std::vector<double> dinv(n);
        for (int i = 0; i < n; ++i) {
            const int d = g.degree(i);
            if (d == 0)
                throw std::invalid_argument("laplacian_kernel: normalized variant needs no isolated nodes");
            dinv[i] = 1.0 / std::sqrt(static_cast<double>(d));
        }
        for (int i = 0; i < n; ++i) {
            lap(i, i) = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i && g.edge(i, j)) lap(i, j) = -dinv[i] * dinv[j];
        }
    }
    NodeKernel k;
    k.matrix = pseudo_inverse(lap);
    k.kind = normalized ? KernelKind::NormalizedLaplacian : KernelKind::Laplacian;
    return k;
}

NodeKernel ls_kernel(const Graph& g) {
    const Matrix a = g.adjacency();
    SymmetricEigen eig = eig_sym(a);
    const double lambda_min = eig.eigenvalues.back();
    const double tau = std::max(std::fabs(lambda_min), 1.0);
    const int n = g.n();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j) / tau;
        m(i, i) += 1.0;
    }
    NodeKernel k;
    k.matrix = std::move(m);
    k.kind = KernelKind::LS;
    return k;
}

NodeKernel custom_kernel(Matrix m) {
    NodeKernel k;
    k.matrix = std::move(m);
    k.kind = KernelKind::Custom;
    return k;
}

PairKernel pair_kernel(NodeKernel k, PairMode mode) { return PairKernel(std::move(k), mode); }

MembershipReport validate_membership(const NodeKernel& k, const Graph& g, double tol) {
    if (k.n() != g.n()) throw std::invalid_argument("validate_membership: size mismatch");
    MembershipReport report;
    for (int i = 0; i < g.n(); ++i)
        if (std::fabs(k.matrix(i, i) - 1.0) > tol) report.diagonal_violations.push_back(i);
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.edge(i, j) && std::fabs(k.matrix(i, j)) > tol)
                report.offedge_violations.emplace_back(i, j);
    report.psd = is_psd(k.matrix, tol);
    return report;
}

double rkhs_norm(const std::vector<double>& f, const NodeKernel& k, double rel_tol) {
    if (static_cast<int>(f.size()) != k.n()) throw std::invalid_argument("rkhs_norm: size mismatch");
    const Matrix pinv = pseudo_inverse(k.matrix, rel_tol);
    return bilinear(pinv, f, f);
}

double lambda1_pair(const PairKernel& k, int max_iters, double tol) {
    const int N = k.count();
    Rng rng(0x9e3779b9u);
    std::vector<double> v(N);
    for (double& x : v) x = rng.uniform() - 0.5;
    double nrm = norm2(v);
    for (double& x : v) x /= nrm;

    double lambda = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        std::vector<double> w = k.matvec(v);
        const double next = dot(v, w);  // Rayleigh quotient, since |v| = 1
        nrm = norm2(w);
        if (nrm == 0.0) return 0.0;
        for (size_t i = 0; i < w.size(); ++i) w[i] /= nrm;
        v = std::move(w);
        if (it > 0 && std::fabs(next - lambda) <= tol * std::max(1.0, std::fabs(next))) {
            return next;
        }
        lambda = next;
    }
    return lambda;
}

double lambda1_node(const NodeKernel& k) {
    SymmetricEigen eig = eig_sym(k.matrix);
    return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
}

void write_kernel_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_kernel_csv: cannot open " + path);
    char buf[40];
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out << buf;
            if (j + 1 < m.cols()) out << ',';
        }
        out << '\n';
    }
}

}  // namespace prefrank
