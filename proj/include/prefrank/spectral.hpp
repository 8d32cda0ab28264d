#pragma once

#include "prefrank/matrix.hpp"

namespace prefrank {

// Eigendecomposition of a symmetric matrix. Eigenvalues sorted descending,
// eigenvectors are the matching orthonormal columns.
struct SymmetricEigen {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const;
};

// Cyclic Jacobi. Input must be symmetric within tol_sym (absolute, scaled by
// max(1, |M|_max) inside); throws std::invalid_argument otherwise.
SymmetricEigen eig_sym(const Matrix& m, double tol_sym = 1e-8);

// Spectral Moore-Penrose pseudoinverse for symmetric PSD input. Eigenvalues
// at or below rel_tol * lambda_1 are treated as zero.
Matrix pseudo_inverse(const Matrix& m, double rel_tol = 1e-10);

// lambda_n(M) >= -tol * max(1, lambda_1(M))
bool is_psd(const Matrix& m, double tol = 1e-8);

}  // namespace prefrank
