#ifndef WLIN_VECTOR_FIELD_HPP
#define WLIN_VECTOR_FIELD_HPP

#include <iosfwd>
#include <vector>

#include "wlin/linalg.hpp"
#include "wlin/series.hpp"

namespace wlin {

/// Formal vector field as a derivation, identified with the tuple of its
/// values on the coordinates: component i is X(x^i).
class VectorField {
public:
    VectorField(const SeriesContext& ctx, SeriesTuple components);

    static VectorField zero(const SeriesContext& ctx);
    /// c * x^alpha d/dx^axis
    static VectorField monomial(const SeriesContext& ctx, std::size_t axis,
                                const MultiIndex& alpha, const Rational& c);

    const SeriesContext& context() const { return ctx_; }
    const SeriesTuple& components() const { return comps_; }
    const TruncatedSeries& component(std::size_t i) const { return comps_[i]; }

    bool is_zero() const;
    bool vanishes_at_origin() const;

    VectorField operator-() const;
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    VectorField scaled(const Rational& c) const;

    VectorField embedded(const SeriesContext& target) const;

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.ctx_ == b.ctx_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

private:
    SeriesContext ctx_;
    SeriesTuple comps_;
};

/// Derivation action: X(f) = sum_i X^i * df/dx^i.
TruncatedSeries apply(const VectorField& X, const TruncatedSeries& f);

/// Commutator [X, Y]; component i is X(Y^i) - Y(X^i).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

/// Jacobian matrix of a tuple: entry (i, j) = d phi^i / d x^j.
SeriesMatrix jacobian(const SeriesTuple& phi);

/// Constant term of the Jacobian, D phi(0).
RationalMatrix jacobian_at_zero(const SeriesTuple& phi);

std::ostream& operator<<(std::ostream& os, const VectorField& X);

}  // namespace wlin

#endif
