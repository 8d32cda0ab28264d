#include "prefrank/matrix.hpp"

#include <cmath>

namespace prefrank {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<double> out(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

double bilinear(const Matrix& m, const std::vector<double>& x, const std::vector<double>& y) {
    if (static_cast<int>(x.size()) != m.rows() || static_cast<int>(y.size()) != m.cols())
        throw std::invalid_argument("bilinear: shape mismatch");
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

double max_abs(const Matrix& m) {
    double v = 0.0;
    for (double x : m.data()) v = std::max(v, std::fabs(x));
    return v;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double v = 0.0;
    for (size_t i = 0; i < a.data().size(); ++i) v = std::max(v, std::fabs(a.data()[i] - b.data()[i]));
    return v;
}

bool is_symmetric(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (std::fabs(m(i, j) - m(j, i)) > tol) return false;
    return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace prefrank
