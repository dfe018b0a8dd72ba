#ifndef WLIN_GRADING_HPP
#define WLIN_GRADING_HPP

#include <optional>
#include <vector>

#include "wlin/time_dependent.hpp"
#include "wlin/vector_field.hpp"

namespace wlin {

/// The quasi-homogeneous slice of X raising weighted degree by exactly k:
/// keeps the monomial terms x^alpha d/dx^i with <w, alpha> - w_i = k.
VectorField graded_component_vf(const VectorField& X, long k);

struct AdmissibilityWitness {
    std::size_t axis;
    MultiIndex alpha;
};

struct AdmissibilityReport {
    bool admissible = false;
    std::optional<AdmissibilityWitness> witness;  // first offending term when not
};

/// Admissible: no monomial term of negative weighted degree, i.e. every
/// x^alpha d/dx^i satisfies <w, alpha> >= w_i.
AdmissibilityReport is_admissible(const VectorField& X);

/// The degree-0 slice X_[0].
VectorField weighted_linear_approximation(const VectorField& X);

/// sum_i w_i x^i d/dx^i.
VectorField euler_field(const SeriesContext& ctx);

/// Admissible with X_[0] equal to the weighted Euler field.
bool is_weighted_euler_like(const VectorField& X);

struct SliceBasisElement {
    std::size_t axis;  // the d/dx^axis factor (0-based)
    MultiIndex alpha;
};

/// Ordered basis of monomial vector fields x^alpha d/dx^i spanning the
/// degree-k slice. The order is the triangularity order: decreasing |alpha|,
/// then decreasing axis, then decreasing lexicographic alpha.
class GradedSliceBasis {
public:
    GradedSliceBasis(Weighting w, long degree, std::vector<SliceBasisElement> elements);

    const Weighting& weighting() const { return w_; }
    long degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    const SliceBasisElement& element(std::size_t b) const { return elements_[b]; }
    const std::vector<SliceBasisElement>& elements() const { return elements_; }

    /// Position of (axis, alpha) in the basis, or nullopt when not a member.
    std::optional<std::size_t> index_of(std::size_t axis, const MultiIndex& alpha) const;

private:
    Weighting w_;
    long degree_;
    std::vector<SliceBasisElement> elements_;
};

/// All multi-indices with <w, alpha> = m (finite since weights are positive).
std::vector<MultiIndex> monomials_of_weighted_degree(const Weighting& w, long m);

GradedSliceBasis slice_basis(const Weighting& w, long k);
std::size_t slice_dimension(const Weighting& w, long k);

/// The slice decomposition as a time-dependent field: coefficient k is
/// X_[k] for 0 <= k <= cutoff. Throws NotAdmissibleError when a negative
/// slice is present.
TimeVectorField kappa_family(const VectorField& X);

}  // namespace wlin

#endif
