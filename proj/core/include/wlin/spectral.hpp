#ifndef WLIN_SPECTRAL_HPP
#define WLIN_SPECTRAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "wlin/grading.hpp"
#include "wlin/polynomial.hpp"
#include "wlin/vector_field.hpp"

namespace wlin {

/// The linear approximation of a field acting on the dual space: the matrix
/// is the transpose of DX(0) in the coordinate basis {x^1, ..., x^n}.
struct LinearPart {
    RationalMatrix matrix;
    BlockStructure blocks;
    Weighting weighting;
};

/// Linear part of X (which must vanish at the origin).
LinearPart linear_part(const VectorField& X);

/// Linear part of the weighted linear approximation X_[0]. Computes both
/// orders (slice-then-linearize and linearize-then-slice) and asserts they
/// agree.
LinearPart weighted_linear_part(const VectorField& X);

/// Restriction of the operator to block ell (axes sharing one weight).
RationalMatrix block_submatrix(const LinearPart& lp, std::size_t ell);

/// True when the matrix is block diagonal along the weight blocks.
bool is_block_diagonal(const LinearPart& lp);

Polynomial char_poly(const LinearPart& lp);

/// Eigenvalue ordering respecting the weight blocks: lambda_i is an
/// eigenvalue of the block containing axis i. Supported exactly when each
/// block's characteristic polynomial splits over the rationals; otherwise
/// the per-block unresolved factors are reported.
struct CompatibleOrdering {
    bool supported = false;
    std::vector<Rational> lambda;          // when supported
    std::vector<Polynomial> unresolved;    // non-splitting factors per block
};

CompatibleOrdering compatible_ordering(const LinearPart& lp);

struct Resonance {
    std::size_t axis;   // i with <lambda, alpha> = lambda_i
    MultiIndex alpha;
    long degree;        // <w, alpha> - w_i >= 1
};

struct ResonanceReport {
    Weighting weighting;
    std::vector<std::string> lambda;  // printed eigenvalues
    std::vector<Resonance> resonances;
    bool exact = true;
    double tolerance = 0.0;  // float comparison tolerance on the heuristic path
};

/// All resonances of weighted degree 1..k_max for an exact rational
/// spectrum, by slice-basis enumeration.
ResonanceReport enumerate_resonances(const std::vector<Rational>& lambda, const Weighting& w,
                                     long k_max);

/// Floating-point fallback for non-rational spectra: per-block eigenvalues
/// at double precision, resonance equality within 1e-9. The report is
/// stamped heuristic.
ResonanceReport enumerate_resonances_heuristic(const LinearPart& lp, long k_max);

/// Exact hyperbolicity over the rationals: no zero eigenvalue and no purely
/// imaginary pair, decided via Sturm sequences on the real/imaginary parts
/// of p(it) without computing eigenvalues.
bool is_hyperbolic(const Polynomial& char_polynomial);
bool is_hyperbolic(const LinearPart& lp);

struct ConsistencyDiagnostic {
    bool consistent = false;
    std::string detail;
};

/// Cross-check used in tests: an empty resonance report through the degrees
/// forced by zero eigenvalues implies the characteristic polynomial has no
/// zero root.
ConsistencyDiagnostic nonresonance_implies_hyperbolic_check(const VectorField& X, long k_max);

}  // namespace wlin

#endif
