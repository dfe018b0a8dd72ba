#ifndef WLIN_ADJOINT_HPP
#define WLIN_ADJOINT_HPP

#include <vector>

#include "wlin/grading.hpp"
#include "wlin/linalg.hpp"

namespace wlin {

/// Matrix of ad_{X0} = [X0, .] restricted to the degree-k slice, in the
/// ordered monomial basis of slice_basis. Column b holds the coordinates
/// of [X0, basis_b].
struct AdjointMatrix {
    long degree = 0;
    GradedSliceBasis basis;
    RationalMatrix entries;
};

/// Builds the field sum coords[b] * basis_b.
VectorField from_slice_coordinates(const SeriesContext& ctx, const GradedSliceBasis& basis,
                                   const std::vector<Rational>& coords);

/// Coordinates of a field lying in the slice spanned by basis. Throws
/// std::invalid_argument when a term falls outside the slice.
std::vector<Rational> to_slice_coordinates(const VectorField& X, const GradedSliceBasis& basis);

/// Requires X0 quasi-homogeneous of weighted degree 0; any off-slice term in
/// a bracket [X0, basis_b] is reported as leakage (std::invalid_argument).
AdjointMatrix adjoint_matrix(const VectorField& X0, long k);

struct InvertibilityReport {
    bool invertible = false;
    Rational determinant;
    /// Kernel basis in slice coordinates; empty when invertible.
    std::vector<std::vector<Rational>> kernel;
};

InvertibilityReport is_adjoint_invertible(const AdjointMatrix& a);

}  // namespace wlin

#endif
