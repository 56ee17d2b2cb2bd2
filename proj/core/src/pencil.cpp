#include "pertcrit/pencil.hpp"

#include <cmath>

namespace pertcrit {

std::string HermitianPencil::label(Index i) const {
    if (i >= 0 && static_cast<size_t>(i) < labels.size()) return labels[static_cast<size_t>(i)];
    return "E" + std::to_string(i);
}

void validate_pencil(const HermitianPencil& pencil) {
    const auto& h0 = pencil.h0;
    const auto& v = pencil.v;
    if (h0.rows() != h0.cols() || v.rows() != v.cols())
        throw InvalidInput("pencil: H0 and V must be square");
    if (h0.rows() != v.rows())
        throw InvalidInput("pencil: H0 and V must have the same dimension");
    if (h0.rows() < 1) throw InvalidInput("pencil: empty matrices");
    if (!h0.allFinite() || !v.allFinite())
        throw InvalidInput("pencil: non-finite entries");
    const double d0 = hermitian_defect(h0);
    if (d0 > kHermTol * std::max(h0.norm(), 1e-300))
        throw NotHermitian("pencil: H0 is not Hermitian", d0);
    const double d1 = hermitian_defect(v);
    if (d1 > kHermTol * std::max(v.norm(), 1e-300))
        throw NotHermitian("pencil: V is not Hermitian", d1);
    if (!pencil.labels.empty() && pencil.labels.size() != static_cast<size_t>(h0.rows()))
        throw InvalidInput("pencil: labels must be empty or have length N");
}

HermitianPencil make_pencil(ComplexMatrix h0, ComplexMatrix v,
                            std::vector<std::string> labels,
                            nlohmann::ordered_json meta) {
    HermitianPencil p{std::move(h0), std::move(v), std::move(labels), std::move(meta)};
    validate_pencil(p);
    return p;
}

ComplexVector vec(const ComplexMatrix& x) {
    return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& x, Index n) {
    if (x.size() != n * n) throw InvalidInput("unvec: length is not N^2");
    return Eigen::Map<const ComplexMatrix>(x.data(), n, n);
}

DeltaOperator::DeltaOperator(HermitianPencil pencil, double eps)
    : pencil_(std::move(pencil)), eps_(eps) {
    validate_pencil(pencil_);
    if (!(eps_ > 0)) throw InvalidInput("DeltaOperator: eps must be positive");
    vt_ = pencil_.v.transpose();

    // auto-detected fast path: off-diagonal mass of H0 below 1e-14 * ||H0||
    ComplexMatrix off = pencil_.h0;
    off.diagonal().setZero();
    h0_diagonal_ = off.norm() <= 1e-14 * std::max(pencil_.h0.norm(), 1e-300);
    if (h0_diagonal_) h0diag_ = pencil_.h0.diagonal().real();
}

const SylvesterSolver& DeltaOperator::solver() const {
    if (!solver_)
        solver_ = std::make_shared<SylvesterSolver>(
            pencil_.h0, ComplexMatrix((1.0 + eps_) * pencil_.h0.transpose()));
    return *solver_;
}

ComplexVector DeltaOperator::apply_delta0(const ComplexVector& x) const {
    const Index n = pencil_.size();
    ComplexMatrix xm = unvec(x, n);
    ComplexMatrix c = -pencil_.v * xm + (1.0 + eps_) * xm * vt_;
    return vec(c);
}

ComplexVector DeltaOperator::apply_delta1(const ComplexVector& x) const {
    const Index n = pencil_.size();
    ComplexMatrix xm = unvec(x, n);
    ComplexMatrix c = pencil_.h0 * xm - (1.0 + eps_) * xm * pencil_.h0.transpose();
    return vec(c);
}

ComplexVector DeltaOperator::apply(const ComplexVector& x) const {
    const Index n = pencil_.size();
    ComplexMatrix xm = unvec(x, n);
    ComplexMatrix c = -pencil_.v * xm + (1.0 + eps_) * xm * vt_;
    if (h0_diagonal_) return vec(solve_sylvester_diagonal(h0diag_, eps_, c));
    return vec(solver().solve(c));
}

double DeltaOperator::min_divisor() const {
    if (h0_diagonal_) {
        double m = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < h0diag_.size(); ++i)
            for (Index j = 0; j < h0diag_.size(); ++j)
                m = std::min(m, std::abs(h0diag_(j) - (1.0 + eps_) * h0diag_(i)));
        return m;
    }
    return solver().min_divisor();
}

std::pair<ComplexMatrix, ComplexMatrix> materialize(const DeltaOperator& op, int dense_cap) {
    const Index n = op.pencil().size();
    if (n > dense_cap)
        throw TooLarge("materialize: N = " + std::to_string(n) + " exceeds dense cap " +
                       std::to_string(dense_cap));
    const double eps = op.eps();
    const auto& h0 = op.pencil().h0;
    const auto& v = op.pencil().v;
    const Index nn = n * n;
    ComplexMatrix d0 = ComplexMatrix::Zero(nn, nn);
    ComplexMatrix d1 = ComplexMatrix::Zero(nn, nn);
    // (A (x) B)(i*n+k, j*n+l) = A(i,j) B(k,l) with vec(X) stacking columns:
    // block (i, j) of size n x n equals A(i,j) * B.
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            // I (x) V and I (x) H0 contribute only for i == j
            if (i == j) {
                d0.block(i * n, j * n, n, n) -= v;
                d1.block(i * n, j * n, n, n) += h0;
            }
            d0.block(i * n, j * n, n, n) +=
                (1.0 + eps) * v(i, j) * ComplexMatrix::Identity(n, n);
            d1.block(i * n, j * n, n, n) -=
                (1.0 + eps) * h0(i, j) * ComplexMatrix::Identity(n, n);
        }
    }
    return {std::move(d0), std::move(d1)};
}

}  // namespace pertcrit
