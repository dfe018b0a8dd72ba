#ifndef WLIN_DIFFEO_HPP
#define WLIN_DIFFEO_HPP

#include <string>

#include "wlin/vector_field.hpp"

namespace wlin {

struct DiffeoCheck {
    bool ok = false;
    std::string diagnostic;  // names the violated condition when !ok
};

/// True iff every component has zero constant term and the constant
/// Jacobian D phi(0) is invertible.
DiffeoCheck is_formal_diffeo(const SeriesTuple& phi);

/// Coordinate tuple of a formal diffeomorphism: validated on construction.
class FormalDiffeo {
public:
    static FormalDiffeo create(SeriesTuple components);
    static FormalDiffeo identity(const SeriesContext& ctx);

    const SeriesContext& context() const { return ctx_; }
    const SeriesTuple& components() const { return comps_; }
    const TruncatedSeries& component(std::size_t i) const { return comps_[i]; }

    FormalDiffeo embedded(const SeriesContext& target) const;

    friend bool operator==(const FormalDiffeo& a, const FormalDiffeo& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const FormalDiffeo& a, const FormalDiffeo& b) { return !(a == b); }

private:
    FormalDiffeo(SeriesContext ctx, SeriesTuple comps)
        : ctx_(std::move(ctx)), comps_(std::move(comps)) {}
    SeriesContext ctx_;
    SeriesTuple comps_;
};

/// Composite whose components are psi's components evaluated at phi:
/// (psi . phi)^i = psi^i(phi). Pullbacks then satisfy
/// pullback_vf(psi . phi, X) = pullback_vf(phi, pullback_vf(psi, X)).
FormalDiffeo compose_diffeo(const FormalDiffeo& psi, const FormalDiffeo& phi);

/// Two-sided inverse modulo the cutoff: the linear part is inverted
/// exactly, higher corrections are solved by degree recursion.
FormalDiffeo invert_diffeo(const FormalDiffeo& phi);

/// Pullback of a vector field: (phi^* X)(x) = D phi(x)^{-1} [X(phi(x))].
VectorField pullback_vf(const FormalDiffeo& phi, const VectorField& X);

/// Pullback of a function: compose(f, phi).
TruncatedSeries pullback_function(const FormalDiffeo& phi, const TruncatedSeries& f);

/// Solves J * z = v for a square matrix of series whose constant term
/// J(0) is invertible. Elimination pivots on nonzero constant terms and
/// divides with series reciprocals.
SeriesTuple solve_series_system(const SeriesMatrix& J, const SeriesTuple& v);

}  // namespace wlin

#endif
