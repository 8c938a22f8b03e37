#include "carwb/structure.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

namespace carwb {

namespace {

constexpr double kConjTol = 1e-8;

Mat sylvester_stack(const std::vector<Mat>& g1, const std::vector<Mat>& g2) {
    const Index n1 = g1[0].rows();
    const Index n2 = g2[0].rows();
    const Index nm = n1 * n2;
    Mat l(2 * static_cast<Index>(g1.size()) * nm, nm);
    const Mat i1 = identity(n1);
    const Mat i2 = identity(n2);
    Index row = 0;
    for (size_t k = 0; k < g1.size(); ++k) {
        // vec(A C) = (I (x) A) vec C,  vec(C B) = (B^T (x) I) vec C
        l.block(row, 0, nm, nm) = kron(i2, g1[k]) - kron(g2[k].transpose(), i1);
        row += nm;
        Mat a1 = g1[k].adjoint();
        Mat a2 = g2[k].adjoint();
        l.block(row, 0, nm, nm) = kron(i2, a1) - kron(a2.transpose(), i1);
        row += nm;
    }
    return l;
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Complex random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    return {dist(rng), dist(rng)};
}

// Phase so the largest-modulus entry becomes positive real.
Mat fix_matrix_phase(const Mat& c) {
    Index bi = 0, bj = 0;
    double best = -1.0;
    for (Index i = 0; i < c.rows(); ++i)
        for (Index j = 0; j < c.cols(); ++j)
            if (std::abs(c(i, j)) > best) {
                best = std::abs(c(i, j));
                bi = i;
                bj = j;
            }
    if (best <= 0.0) return c;
    return c / (c(bi, bj) / std::abs(c(bi, bj)));
}

double conjugation_residual(const Mat& u, const Representation& pi1, const Representation& pi2) {
    double worst = 0.0;
    for (size_t k = 0; k < pi1.generators.size(); ++k)
        worst = std::max(worst, op_norm(u.adjoint() * pi1.generators[k] * u - pi2.generators[k]));
    return worst;
}

}  // namespace

LinearSubspace intertwiners(const Representation& pi1, const Representation& pi2, double tol) {
    if (pi1.generators.size() != pi2.generators.size())
        throw ShapeMismatch("intertwiners: generator counts differ");
    if (pi1.generators.empty()) throw ShapeMismatch("intertwiners: empty representation");
    const Index n1 = pi1.dim();
    const Index n2 = pi2.dim();
    Mat l = sylvester_stack(pi1.generators, pi2.generators);
    return null_space(l, tol, n1, n2);
}

LinearSubspace commutant(const Representation& pi, double tol) {
    return intertwiners(pi, pi, tol);
}

bool is_irreducible(const Representation& pi) { return commutant(pi).dim() == 1; }

std::optional<Mat> are_equivalent(const Representation& pi1, const Representation& pi2,
                                  std::uint64_t seed) {
    if (pi1.generators.size() != pi2.generators.size())
        throw ShapeMismatch("are_equivalent: generator counts differ");
    if (pi1.dim() != pi2.dim()) return std::nullopt;
    LinearSubspace space = intertwiners(pi1, pi2);
    if (space.dim() == 0) return std::nullopt;

    auto invertible = [](const Mat& c) {
        Eigen::JacobiSVD<Mat> svd(c);
        const auto& sv = svd.singularValues();
        return sv(0) > 0.0 && sv(sv.size() - 1) > kRankTol * sv(0);
    };

    // Prefer the basis intertwiner with the largest leading singular value;
    // if every basis element is singular an invertible one may still exist in
    // the span, so fall back to seeded random combinations.
    Mat c = space.basis[0];
    double best = op_norm(c);
    for (const auto& b : space.basis) {
        double s = op_norm(b);
        if (s > best) {
            best = s;
            c = b;
        }
    }
    if (!invertible(c)) {
        auto rng = make_rng(seed);
        bool found = false;
        for (int attempt = 0; attempt < 8 && !found; ++attempt) {
            Mat trial = Mat::Zero(c.rows(), c.cols());
            for (const auto& b : space.basis) trial += random_complex(rng) * b;
            if (invertible(trial)) {
                c = trial;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }

    c = fix_matrix_phase(c);
    Mat u = polar(c).unitary;
    if (conjugation_residual(u, pi1, pi2) > kConjTol) return std::nullopt;
    return u;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.generators.size() != b.generators.size())
        throw ShapeMismatch("direct_sum: generator counts differ");
    Representation out;
    out.presentation = a.presentation;
    const Index na = a.dim();
    const Index nb = b.dim();
    for (size_t k = 0; k < a.generators.size(); ++k) {
        Mat g = Mat::Zero(na + nb, na + nb);
        g.topLeftCorner(na, na) = a.generators[k];
        g.bottomRightCorner(nb, nb) = b.generators[k];
        out.generators.push_back(std::move(g));
    }
    return out;
}

DecompositionReport decompose(const Representation& pi, std::uint64_t seed) {
    const Index n = pi.dim();
    DecompositionReport report;

    LinearSubspace com = commutant(pi);
    if (com.dim() <= 1) {
        report.blocks.push_back({pi, 1});
        report.change_of_basis = identity(n);
        report.residual = 0.0;
        return report;
    }

    auto rng = make_rng(seed);
    Mat x = Mat::Zero(n, n);
    for (const auto& b : com.basis) x += random_complex(rng) * b;
    Mat r = (x + x.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Mat> es(r);
    Eigen::VectorXd ev = es.eigenvalues();
    Mat q0 = es.eigenvectors();

    // Cluster eigenvalues; each eigenspace is invariant and generically
    // carries an irreducible subrepresentation.
    std::vector<std::pair<Index, Index>> clusters;  // [begin, end)
    Index i = 0;
    while (i < n) {
        Index j = i;
        while (j + 1 < n && ev(j + 1) - ev(j) <= 1e-8) ++j;
        clusters.emplace_back(i, j + 1);
        i = j + 1;
    }

    struct Position {
        Representation rep;
        Mat columns;
        int class_index = -1;
    };
    std::vector<Position> positions;
    for (auto [b, e] : clusters) {
        Position pos;
        pos.columns = q0.middleCols(b, e - b);
        for (const auto& g : pi.generators)
            pos.rep.generators.push_back(pos.columns.adjoint() * g * pos.columns);
        pos.rep.presentation = pi.presentation;
        positions.push_back(std::move(pos));
    }

    // Group by unitary equivalence and rotate each position onto its class
    // representative so the reassembled direct sum uses the representatives.
    std::vector<Representation> reps;
    std::vector<Mat> rotated_columns;
    std::vector<std::vector<Index>> class_positions;
    for (size_t p = 0; p < positions.size(); ++p) {
        int cls = -1;
        Mat u;
        for (size_t c = 0; c < reps.size(); ++c) {
            if (auto w = are_equivalent(positions[p].rep, reps[c], seed)) {
                cls = static_cast<int>(c);
                u = *w;
                break;
            }
        }
        if (cls < 0) {
            cls = static_cast<int>(reps.size());
            reps.push_back(positions[p].rep);
            class_positions.emplace_back();
            u = identity(positions[p].rep.dim());
        }
        positions[p].class_index = cls;
        rotated_columns.push_back(positions[p].columns * u);
        class_positions[cls].push_back(static_cast<Index>(p));
    }

    Mat q(n, n);
    Index col = 0;
    for (size_t c = 0; c < reps.size(); ++c) {
        for (Index p : class_positions[c]) {
            q.middleCols(col, rotated_columns[p].cols()) = rotated_columns[p];
            col += rotated_columns[p].cols();
        }
        report.blocks.push_back({reps[c], static_cast<int>(class_positions[c].size())});
    }
    report.change_of_basis = q;

    double worst = 0.0;
    for (size_t k = 0; k < pi.generators.size(); ++k) {
        Mat ds = Mat::Zero(n, n);
        Index at = 0;
        for (const auto& blk : report.blocks)
            for (int m = 0; m < blk.multiplicity; ++m) {
                const Index bn = blk.rep.dim();
                ds.block(at, at, bn, bn) = blk.rep.generators[k];
                at += bn;
            }
        worst = std::max(worst, op_norm(q.adjoint() * pi.generators[k] * q - ds));
    }
    report.residual = worst;
    return report;
}

int generated_dim(const Representation& pi, const std::vector<int>& subset) {
    if (subset.empty()) throw DomainError("generated_dim: subset must be non-empty");
    const Index n = pi.dim();
    std::vector<Mat> factors;
    for (int g : subset) {
        if (g < 0 || g >= static_cast<int>(pi.generators.size()))
            throw DomainError("generated_dim: generator index out of range");
        factors.push_back(pi.generators[g]);
        factors.push_back(pi.generators[g].adjoint());
    }

    Mat basis(n * n, 0);
    auto admit = [&](const Mat& cand) -> bool {
        Vec v = vectorize(cand);
        double norm0 = v.norm();
        if (norm0 <= 1e-13) return false;
        for (int pass = 0; pass < 2; ++pass)
            if (basis.cols() > 0) v -= basis * (basis.adjoint() * v).eval();
        if (v.norm() <= 1e-9 * norm0) return false;
        basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
        basis.col(basis.cols() - 1) = v / v.norm();
        return true;
    };

    admit(identity(n));
    std::vector<Mat> frontier = {identity(n)};
    const Index cutoff = 2 * n * n;
    for (Index len = 0; len < cutoff && !frontier.empty(); ++len) {
        std::vector<Mat> next;
        for (const auto& w : frontier)
            for (const auto& f : factors) {
                Mat cand = w * f;
                if (admit(cand)) next.push_back(std::move(cand));
            }
        frontier = std::move(next);
    }
    return static_cast<int>(basis.cols());
}

std::optional<Complex> central_value(const Representation& pi, const std::vector<Term>& expr) {
    Mat e = eval_terms(expr, pi.generators);
    Complex lambda = e.trace() / static_cast<double>(e.rows());
    if (op_norm(e - lambda * identity(e.rows())) > 1e-9) return std::nullopt;
    return lambda;
}

Mat find_intertwining_unitary_l12(double r1, double x2, double phi, double phi1, double phi2) {
    Representation source = global_rep(r1, 0.5, x2, phi, phi1, phi2);

    if (r1 <= 1e-12) {
        // The r1 = 0 slice is its own normal form.
        Complex z = std::exp(Complex(0, 1) * phi2) * std::sqrt(x2 * (1.0 - x2));
        double psi = std::abs(z) <= 1e-12 ? 0.0 : phi2;
        Representation target = global_rep(0.0, 0.5, x2, 0.0, phi1, psi);
        Mat u = identity(4);
        if (conjugation_residual(u, source, target) > 1e-8)
            throw NoIntertwiner("find_intertwining_unitary_l12: r1 = 0 slice mismatch");
        return u;
    }

    Lemma12Params lp = lemma12_params(r1, x2, phi, phi1, phi2);
    Representation target = global_rep(0.0, 0.5, lp.t, 0.0, phi1, lp.psi);
    auto u = are_equivalent(source, target);
    if (!u) throw NoIntertwiner("find_intertwining_unitary_l12: no intertwining unitary found");
    return *u;
}

}  // namespace carwb
