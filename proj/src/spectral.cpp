#include "prefrank/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace prefrank {

Matrix SymmetricEigen::reconstruct() const {
    const int n = eigenvectors.rows();
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += eigenvalues[k] * eigenvectors(i, k) * eigenvectors(j, k);
            out(i, j) = s;
            out(j, i) = s;
        }
    }
    return out;
}

namespace {

double off_diag_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

SymmetricEigen eig_sym(const Matrix& m, double tol_sym) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig_sym: matrix not square");
    const int n = m.rows();
    const double scale = std::max(1.0, max_abs(m));
    if (!is_symmetric(m, tol_sym * scale))
        throw std::invalid_argument("eig_sym: matrix not symmetric within tolerance");

    // Work on the symmetrized copy so tiny asymmetries within tolerance
    // cannot leak into the result.
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
    Matrix v = Matrix::identity(n);

    const double stop = 1e-14 * std::max(1.0, off_diag_norm(a) + max_abs(a) * n);
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diag_norm(a) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                const double app = a(p, p), aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int x, int y) { return a(x, x) > a(y, y); });

    SymmetricEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

Matrix pseudo_inverse(const Matrix& m, double rel_tol) {
    SymmetricEigen eig = eig_sym(m);
    const int n = m.rows();
    const double lambda1 = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues[0];
    const double cut = rel_tol * std::max(lambda1, 0.0);
    Matrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam <= cut) continue;
        const double inv = 1.0 / lam;
        for (int i = 0; i < n; ++i) {
            const double w = inv * eig.eigenvectors(i, k);
            for (int j = i; j < n; ++j) {
                out(i, j) += w * eig.eigenvectors(j, k);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) out(i, j) = out(j, i);
    return out;
}

bool is_psd(const Matrix& m, double tol) {
    SymmetricEigen eig = eig_sym(m);
    if (eig.eigenvalues.empty()) return true;
    const double lambda1 = eig.eigenvalues.front();
    const double lambdan = eig.eigenvalues.back();
    return lambdan >= -tol * std::max(1.0, lambda1);
}

}  // namespace prefrank
