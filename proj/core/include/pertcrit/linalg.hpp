#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "pertcrit/errors.hpp"

namespace pertcrit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative Hermiticity tolerance: A counts as Hermitian when
/// ||A - A^H||_F <= kHermTol * ||A||_F.
inline constexpr double kHermTol = 1e-12;

/// Sylvester divisors below kDivisorTol * max|entry| reject the solve.
inline constexpr double kDivisorTol = 1e-13;

struct EigenDecomposition {
    ComplexVector values;                   // aligned with vectors' columns
    std::optional<ComplexMatrix> vectors;
};

double hermitian_defect(const ComplexMatrix& a);

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order, orthonormal eigenvectors.  Throws NotHermitian if the symmetry
/// check fails and NoConvergence if the QR iteration stalls.
EigenDecomposition eig_hermitian(const ComplexMatrix& a);

/// Eigendecomposition of a general complex square matrix.  Eigenvalues are
/// sorted by (Re, Im) for reproducibility.
EigenDecomposition eig_general(const ComplexMatrix& a, bool want_vectors = false);

/// Factor-once / solve-many Bartels-Stewart solver for A*Y - Y*B = C with
/// complex Schur reduction on both sides.  Divisors T_A(i,i) - T_B(j,j)
/// whose magnitude falls below the tolerance make the solve throw
/// SpectraOverlap unless the corresponding right-hand-side component
/// vanishes too, in which case that component of the solution is set to
/// zero (the consistent minimum-norm choice).
class SylvesterSolver {
public:
    SylvesterSolver(const ComplexMatrix& a, const ComplexMatrix& b);

    ComplexMatrix solve(const ComplexMatrix& c) const;

    /// Smallest divisor magnitude over all (i, j); conditioning diagnostic.
    double min_divisor() const { return min_divisor_; }
    double divisor_tolerance() const { return tol_div_; }

private:
    ComplexMatrix ta_, ua_, tb_, ub_;
    double tol_div_ = 0.0;
    double min_divisor_ = 0.0;
};

/// One-shot A*Y - Y*B = C.
ComplexMatrix solve_sylvester(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& c);

/// Fast path of Eq-4 type for diagonal H0: solves
///   H0*Y - (1+eps)*Y*H0^T = C
/// column by column with divisors d_j = h0(j) - (1+eps)*h0(i), in O(N^2).
ComplexMatrix solve_sylvester_diagonal(const RealVector& h0diag, double eps,
                                       const ComplexMatrix& c);

}  // namespace pertcrit
