#pragma once

#include <string>
#include <vector>

#include "prefrank/graph.hpp"
#include "prefrank/matrix.hpp"

namespace prefrank {

enum class KernelKind { LS, Laplacian, NormalizedLaplacian, Custom };

// Symmetric PSD kernel over graph nodes. For kind LS the matrix is a member
// of the orthonormal-representation kernel family: unit diagonal and zeros on
// non-edges.
struct NodeKernel {
    Matrix matrix;
    KernelKind kind = KernelKind::Custom;

    int n() const { return matrix.rows(); }
};

enum class PairMode { Kronecker, PairwiseDifference };

// Kernel over node pairs, evaluated lazily from the node kernel through the
// canonical pair enumeration. Kronecker: K(i,i')K(j,j'). PairwiseDifference:
// K(i,i') - K(i,j') - K(j,i') + K(j,j'). The full N x N matrix is O(n^4)
// dense, so only entries, rows and matvecs are materialized on demand.
class PairKernel {
public:
    PairKernel(NodeKernel source, PairMode mode);

    const NodeKernel& source() const { return source_; }
    PairMode mode() const { return mode_; }
    const PairIndex& pairs() const { return pairs_; }
    int count() const { return pairs_.count(); }

    double eval(int k, int l) const;
    double diagonal(int k) const { return eval(k, k); }

    // y = Ktilde x over all N pairs; O(n^3) per call
    std::vector<double> matvec(const std::vector<double>& x) const;

    // Dense N x N matrix; guarded to n <= max_n (N <= 780 by default)
    Matrix materialize(int max_n = 40) const;

private:
    NodeKernel source_;
    PairMode mode_;
    PairIndex pairs_;
};

// (D - A)^dagger, or (I - D^{-1/2} A D^{-1/2})^dagger when normalized.
// The normalized variant rejects graphs with isolated nodes.
NodeKernel laplacian_kernel(const Graph& g, bool normalized = false);

// A/tau + I with tau = max(|lambda_n(A)|, 1)
NodeKernel ls_kernel(const Graph& g);

NodeKernel custom_kernel(Matrix m);

PairKernel pair_kernel(NodeKernel k, PairMode mode);

struct MembershipReport {
    std::vector<int> diagonal_violations;            // nodes with K_ii != 1
    std::vector<std::pair<int, int>> offedge_violations;  // non-edges with K_ij != 0
    bool psd = true;

    bool valid() const {
        return psd && diagonal_violations.empty() && offedge_violations.empty();
    }
};

MembershipReport validate_membership(const NodeKernel& k, const Graph& g, double tol = 1e-8);

// f' K^dagger f
double rkhs_norm(const std::vector<double>& f, const NodeKernel& k, double rel_tol = 1e-10);

// Largest eigenvalue of the pair kernel, by power iteration on the lazy
// matvec (no materialization).
double lambda1_pair(const PairKernel& k, int max_iters = 20000, double tol = 1e-12);

double lambda1_node(const NodeKernel& k);

void write_kernel_csv(const Matrix& m, const std::string& path);

}  // namespace prefrank
