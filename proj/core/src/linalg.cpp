#include "pertcrit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace pertcrit {

double hermitian_defect(const ComplexMatrix& a) {
    return (a - a.adjoint()).norm();
}

EigenDecomposition eig_hermitian(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw InvalidInput("eig_hermitian: matrix is not square");
    const double scale = a.norm();
    const double defect = hermitian_defect(a);
    if (defect > kHermTol * std::max(scale, 1e-300))
        throw NotHermitian("eig_hermitian: symmetry defect " + std::to_string(defect) +
                               " exceeds tolerance",
                           defect);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()));
    if (es.info() != Eigen::Success)
        throw NoConvergence("eig_hermitian: QR iteration did not converge");
    EigenDecomposition out;
    out.values = es.eigenvalues().cast<Complex>();
    out.vectors = es.eigenvectors();
    return out;
}

EigenDecomposition eig_general(const ComplexMatrix& a, bool want_vectors) {
    if (a.rows() != a.cols())
        throw InvalidInput("eig_general: matrix is not square");
    Eigen::ComplexEigenSolver<ComplexMatrix> es(a, want_vectors);
    if (es.info() != Eigen::Success)
        throw NoConvergence("eig_general: QR iteration did not converge");

    const Index n = a.rows();
    std::vector<Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    const auto& ev = es.eigenvalues();
    std::sort(order.begin(), order.end(), [&](Index i, Index j) {
        if (ev(i).real() != ev(j).real()) return ev(i).real() < ev(j).real();
        return ev(i).imag() < ev(j).imag();
    });

    EigenDecomposition out;
    out.values.resize(n);
    for (Index k = 0; k < n; ++k) out.values(k) = ev(order[static_cast<size_t>(k)]);
    if (want_vectors) {
        ComplexMatrix v(n, n);
        for (Index k = 0; k < n; ++k) v.col(k) = es.eigenvectors().col(order[static_cast<size_t>(k)]);
        out.vectors = std::move(v);
    }
    return out;
}

SylvesterSolver::SylvesterSolver(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw InvalidInput("SylvesterSolver: A and B must be square");
    Eigen::ComplexSchur<ComplexMatrix> sa(a, true);
    if (sa.info() != Eigen::Success)
        throw NoConvergence("SylvesterSolver: Schur reduction of A failed");
    Eigen::ComplexSchur<ComplexMatrix> sb(b, true);
    if (sb.info() != Eigen::Success)
        throw NoConvergence("SylvesterSolver: Schur reduction of B failed");
    ta_ = sa.matrixT();
    ua_ = sa.matrixU();
    tb_ = sb.matrixT();
    ub_ = sb.matrixU();

    const double entry_scale =
        std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
    tol_div_ = kDivisorTol * std::max(entry_scale, 1e-300);

    min_divisor_ = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < ta_.rows(); ++i)
        for (Index j = 0; j < tb_.rows(); ++j)
            min_divisor_ = std::min(min_divisor_, std::abs(ta_(i, i) - tb_(j, j)));
}

ComplexMatrix SylvesterSolver::solve(const ComplexMatrix& c) const {
    const Index n = ta_.rows();
    const Index m = tb_.rows();
    if (c.rows() != n || c.cols() != m)
        throw InvalidInput("SylvesterSolver::solve: C has wrong shape");

    ComplexMatrix ct = ua_.adjoint() * c * ub_;
    const double rhs_floor = 1e-12 * std::max(ct.norm(), 1e-300);

    // T_A * Yt - Yt * T_B = Ct, columns in increasing j.
    ComplexMatrix yt(n, m);
    for (Index j = 0; j < m; ++j) {
        ComplexVector rhs = ct.col(j);
        for (Index k = 0; k < j; ++k) rhs += tb_(k, j) * yt.col(k);
        const Complex bjj = tb_(j, j);
        // back-substitution with (T_A - bjj I)
        for (Index i = n - 1; i >= 0; --i) {
            Complex acc = rhs(i);
            for (Index k = i + 1; k < n; ++k) acc -= ta_(i, k) * yt(k, j);
            const Complex div = ta_(i, i) - bjj;
            if (std::abs(div) < tol_div_) {
                if (std::abs(acc) <= rhs_floor) {
                    yt(i, j) = Complex(0, 0);
                    continue;
                }
                throw SpectraOverlap(
                    "solve_sylvester: divisor " + std::to_string(std::abs(div)) +
                        " below tolerance " + std::to_string(tol_div_) +
                        " with inconsistent right-hand side",
                    std::abs(div), tol_div_);
            }
            yt(i, j) = acc / div;
        }
    }
    return ua_ * yt * ub_.adjoint();
}

ComplexMatrix solve_sylvester(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& c) {
    return SylvesterSolver(a, b).solve(c);
}

ComplexMatrix solve_sylvester_diagonal(const RealVector& h0diag, double eps,
                                       const ComplexMatrix& c) {
    const Index n = h0diag.size();
    if (c.rows() != n || c.cols() != n)
        throw InvalidInput("solve_sylvester_diagonal: C has wrong shape");
    const double tol_div =
        kDivisorTol * std::max(h0diag.cwiseAbs().maxCoeff(), 1e-300);
    const double rhs_floor = 1e-12 * std::max(c.norm(), 1e-300);

    ComplexMatrix y(n, n);
    double min_div = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
        const double shifted = (1.0 + eps) * h0diag(i);
        for (Index j = 0; j < n; ++j) {
            const double div = h0diag(j) - shifted;
            min_div = std::min(min_div, std::abs(div));
            if (std::abs(div) < tol_div) {
                if (std::abs(c(j, i)) <= rhs_floor) {
                    y(j, i) = Complex(0, 0);
                    continue;
                }
                throw SpectraOverlap(
                    "solve_sylvester_diagonal: divisor below tolerance with "
                    "inconsistent right-hand side",
                    std::abs(div), tol_div);
            }
            y(j, i) = c(j, i) / div;
        }
    }
    return y;
}

}  // namespace pertcrit
