#ifndef WLIN_HOMOLOGICAL_HPP
#define WLIN_HOMOLOGICAL_HPP

#include <vector>

#include "wlin/adjoint.hpp"

namespace wlin {

/// Solves the weighted homological equation at target degree d >= 1:
///
///   [X_[0], U_[d]] = d * X_[d] - sum_{i=1}^{d-1} [X_[d-i], U_[i]]
///
/// X_slices holds X_[0], X_[1], ... (missing entries are zero); U_prev holds
/// the previously solved U_[1], ..., U_[d-1]. The solution is checked by
/// exact back-substitution. Throws SingularAdjointError (with kernel) when
/// ad_{X_[0]} is singular on the degree-d slice.
VectorField solve_homological(const std::vector<VectorField>& X_slices, long d,
                              const std::vector<VectorField>& U_prev);

/// The right-hand side of the homological equation at degree d.
VectorField homological_rhs(const std::vector<VectorField>& X_slices, long d,
                            const std::vector<VectorField>& U_prev);

}  // namespace wlin

#endif
