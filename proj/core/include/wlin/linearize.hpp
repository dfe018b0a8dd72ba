#ifndef WLIN_LINEARIZE_HPP
#define WLIN_LINEARIZE_HPP

#include <vector>

#include "wlin/adjoint.hpp"
#include "wlin/homological.hpp"
#include "wlin/time_dependent.hpp"

namespace wlin {

struct DegreeCertificate {
    long degree = 0;
    std::size_t dimension = 0;
    bool invertible = false;
    Rational determinant;  // fraction-free determinant of the adjoint matrix
};

/// Outcome of a linearization run. phi pulls X back to its weighted linear
/// approximation: pullback_vf(phi, X) = X_[0] through the guaranteed order.
/// phi_inverse gives the new coordinate functions (a coordinate change
/// written "u = ..." corresponds to phi_inverse). All fields live at the padded
/// working context; results are guaranteed through weighted degree
/// report_cutoff + w_i per component.
struct LinearizationResult {
    FormalDiffeo phi;
    FormalDiffeo phi_inverse;
    TimeVectorField generator;  // coefficient k is U_[k+1], quasi-homogeneous of degree k+1
    VectorField residual;       // pullback_vf(phi, X) - X_[0]; zero through the guarantee
    std::vector<DegreeCertificate> certificates;
    bool verified = false;
    long report_cutoff = 0;
};

/// The Moser-flow pipeline: decompose X into quasi-homogeneous slices,
/// solve the weighted homological equation degree by degree, integrate the
/// generator, evaluate the flow at t = 1, and verify the pullback. The
/// input is treated as an exact polynomial field and re-embedded at the
/// padded working cutoff. Throws NotAdmissibleError or
/// SingularAdjointError (adjoint invertibility is required for every degree
/// 1..report_cutoff even when the corresponding right-hand side vanishes).
LinearizationResult moser_linearize(const VectorField& X, long report_cutoff);

/// Fast path for weighted Euler-like fields: the generator coefficients are
/// the slices themselves and the adjoint acts by multiplication by the
/// degree, so no linear solves are needed. Identical output to
/// moser_linearize on its domain.
LinearizationResult euler_like_linearize(const VectorField& X, long report_cutoff);

/// Independent degree-by-degree oracle: at each degree k, one adjoint solve
/// picks V_k killing the degree-k slice of the current field, which is then
/// conjugated by the time-1 exponential flow of V_k. The returned phi may
/// differ from the Moser one; the residual contract is identical.
LinearizationResult iterative_linearize_oracle(const VectorField& X, long report_cutoff);

struct VerificationResult {
    VectorField residual;  // pullback_vf(phi, X) - X_[0] at phi's context
    bool zero_through_guarantee = false;
};

/// Recomputes pullback_vf(phi, X) - X_[0] at phi's (padded) context and
/// checks that component i vanishes through weighted degree
/// report_cutoff + w_i.
VerificationResult verify_linearization(const VectorField& X, const FormalDiffeo& phi,
                                        long report_cutoff);

}  // namespace wlin

#endif
