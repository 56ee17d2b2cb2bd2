#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pertcrit/linalg.hpp"

namespace pertcrit {

/// Default regularization parameter of the two-parameter relaxation.
inline constexpr double kDefaultEps = 1e-4;

/// Largest N for which the N^2 x N^2 operators may be materialized densely.
inline constexpr int kDenseCap = 40;

/// The Hermitian pencil H(lambda) = H0 + lambda * V.
struct HermitianPencil {
    ComplexMatrix h0;
    ComplexMatrix v;
    std::vector<std::string> labels;  // unperturbed-level names; empty or size N
    nlohmann::ordered_json meta;      // free-form provenance (model, M, L, dx, Z, a, lambda_phys)

    Index size() const { return h0.rows(); }

    /// Label of level `i` (ascending unperturbed order); synthesized when absent.
    std::string label(Index i) const;
};

/// Validates Hermiticity, matching dimensions and label count; throws
/// NotHermitian / InvalidInput.
HermitianPencil make_pencil(ComplexMatrix h0, ComplexMatrix v,
                            std::vector<std::string> labels = {},
                            nlohmann::ordered_json meta = nlohmann::ordered_json::object());

void validate_pencil(const HermitianPencil& pencil);

/// vec / unvec with the column-stacking convention.
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& x, Index n);

/// The regularized Kronecker operators
///   Delta0(eps) = -I (x) V  + (1+eps) V  (x) I
///   Delta1(eps) =  I (x) H0 - (1+eps) H0 (x) I
/// exposed through structured matrix-vector products; the N^2 x N^2 forms are
/// only ever materialized as a test oracle / dense fallback.
class DeltaOperator {
public:
    DeltaOperator(HermitianPencil pencil, double eps = kDefaultEps);

    /// y = Delta1^{-1} Delta0 x through the Sylvester equation
    ///   H0 Y - (1+eps) Y H0^T = -V X + (1+eps) X V^T,  x = vec(X), y = vec(Y).
    /// Dispatches to the O(N^2) diagonal path when H0 is diagonal.
    ComplexVector apply(const ComplexVector& x) const;

    ComplexVector apply_delta0(const ComplexVector& x) const;
    ComplexVector apply_delta1(const ComplexVector& x) const;

    const HermitianPencil& pencil() const { return pencil_; }
    double eps() const { return eps_; }
    Index dim() const { return pencil_.size() * pencil_.size(); }
    bool h0_diagonal() const { return h0_diagonal_; }

    /// Smallest |h_i - (1+eps) h_j| over the spectrum of H0; the solve is
    /// ill-posed when this collides with zero.
    double min_divisor() const;

private:
    const SylvesterSolver& solver() const;

    HermitianPencil pencil_;
    double eps_;
    bool h0_diagonal_;
    RealVector h0diag_;
    ComplexMatrix vt_;  // V^T cached for the right-hand side
    mutable std::shared_ptr<SylvesterSolver> solver_;  // lazily factored
};

/// Explicit (Delta0, Delta1); throws TooLarge above the cap.
std::pair<ComplexMatrix, ComplexMatrix> materialize(const DeltaOperator& op,
                                                    int dense_cap = kDenseCap);

}  // namespace pertcrit
