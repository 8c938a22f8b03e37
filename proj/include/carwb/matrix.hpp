#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "carwb/errors.hpp"

namespace carwb {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

// Spectral-norm matrix-equality tolerance used throughout the workbench.
inline constexpr double kEqTol = 1e-9;
// Rank decisions are made relative to the largest singular value.
inline constexpr double kRankTol = 1e-8;

// A subspace of matrices (commutant, intertwiner space, generated algebra),
// held as a basis orthonormal under the trace inner product <A,B> = tr(A*B).
struct LinearSubspace {
    Index ambient_dim = 0;
    std::vector<Mat> basis;

    Index dim() const { return static_cast<Index>(basis.size()); }
};

struct PolarDecomposition {
    Mat unitary;    // U, extended to a unitary on ker(A) by the index-order gauge
    Mat positive;   // P = (A*A)^{1/2}
};

Mat identity(Index n);
Mat zeros(Index rows, Index cols);

// Kronecker product with block (i,j) equal to a_ij * B.
Mat kron(const Mat& a, const Mat& b);

// A = U*P with P = (A*A)^{1/2}. For singular A the unitary factor maps the
// k-th null vector of A to the k-th null vector of A*, each phase-normalized
// so the largest-modulus entry is positive real.
PolarDecomposition polar(const Mat& a);

// Largest singular value.
double op_norm(const Mat& a);

// Eigenvalues of a Hermitian matrix, ascending, clustered at the given gap
// tolerance with the cluster midpoint as representative.
std::vector<std::pair<double, int>> herm_spectrum(const Mat& a, double cluster_tol = 1e-9);

// Orthonormal basis of the span of right singular vectors of L with singular
// value <= tol * sigma_max (every vector when sigma_max = 0). When
// reshape_rows/cols are nonzero the basis vectors are returned as matrices of
// that shape (column-major unvec); otherwise as L.cols() x 1 columns.
LinearSubspace null_space(const Mat& l, double tol, Index reshape_rows = 0,
                          Index reshape_cols = 0);

// Column-major vectorization and its inverse.
Vec vectorize(const Mat& a);
Mat unvectorize(const Vec& v, Index rows, Index cols);

inline bool approx_equal(const Mat& a, const Mat& b, double tol = kEqTol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return op_norm(a - b) <= tol;
}

}  // namespace carwb
