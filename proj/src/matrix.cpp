#include "carwb/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace carwb {

Mat identity(Index n) { return Mat::Identity(n, n); }

Mat zeros(Index rows, Index cols) { return Mat::Zero(rows, cols); }

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vec vectorize(const Mat& a) {
    return Eigen::Map<const Vec>(a.data(), a.size());
}

Mat unvectorize(const Vec& v, Index rows, Index cols) {
    return Eigen::Map<const Mat>(v.data(), rows, cols);
}

namespace {

// Phase-normalize so the largest-modulus entry is positive real.
Vec fix_phase(const Vec& v) {
    Index imax = 0;
    double best = -1.0;
    for (Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > best) {
            best = std::abs(v(i));
            imax = i;
        }
    }
    if (best <= 0.0) return v;
    Complex phase = v(imax) / std::abs(v(imax));
    return v / phase;
}

}  // namespace

PolarDecomposition polar(const Mat& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("polar: matrix must be square");
    const Index n = a.rows();
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = (n > 0) ? sv(0) : 0.0;
    const double cut = kRankTol * smax;

    Mat p = svd.matrixV();
    p = p * sv.asDiagonal() * p.adjoint();

    Mat u = Mat::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        if (sv(i) > cut && smax > 0.0) {
            u += svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
        } else {
            // ker(A) -> ker(A*) pairing, kept deterministic by phase-fixing
            // both null vectors independently.
            Vec vk = fix_phase(svd.matrixV().col(i));
            Vec uk = fix_phase(svd.matrixU().col(i));
            u += uk * vk.adjoint();
        }
    }
    return {std::move(u), std::move(p)};
}

double op_norm(const Mat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues()(0);
}

std::vector<std::pair<double, int>> herm_spectrum(const Mat& a, double cluster_tol) {
    if (a.rows() != a.cols()) throw ShapeMismatch("herm_spectrum: matrix must be square");
    const double scale = op_norm(a);
    if (op_norm(a - a.adjoint()) > 1e-10 * scale)
        throw NotHermitian("herm_spectrum: matrix is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Mat> es(Mat(((a + a.adjoint()) / 2.0)));
    Eigen::VectorXd ev = es.eigenvalues();  // ascending

    std::vector<std::pair<double, int>> out;
    Index i = 0;
    while (i < ev.size()) {
        Index j = i;
        while (j + 1 < ev.size() && ev(j + 1) - ev(j) <= cluster_tol) ++j;
        out.emplace_back((ev(i) + ev(j)) / 2.0, static_cast<int>(j - i + 1));
        i = j + 1;
    }
    return out;
}

LinearSubspace null_space(const Mat& l, double tol, Index reshape_rows, Index reshape_cols) {
    if (tol <= 0) throw DomainError("null_space: tol must be positive");
    const Index cols = l.cols();
    if (reshape_rows == 0 || reshape_cols == 0) {
        reshape_rows = cols;
        reshape_cols = 1;
    }
    if (reshape_rows * reshape_cols != cols)
        throw ShapeMismatch("null_space: reshape does not match column count");

    Eigen::JacobiSVD<Mat> svd(l, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Index k = sv.size();
    const double smax = (k > 0) ? sv(0) : 0.0;

    LinearSubspace space;
    space.ambient_dim = cols;
    for (Index i = 0; i < cols; ++i) {
        const bool in_kernel = (smax == 0.0) || (i >= k) || (sv(i) <= tol * smax);
        if (in_kernel)
            space.basis.push_back(unvectorize(svd.matrixV().col(i), reshape_rows, reshape_cols));
    }
    return space;
}

}  // namespace carwb
