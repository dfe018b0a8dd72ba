#include "wlin/vector_field.hpp"

#include <ostream>
#include <stdexcept>

namespace wlin {

VectorField::VectorField(const SeriesContext& ctx, SeriesTuple components)
    : ctx_(ctx), comps_(std::move(components)) {
    if (comps_.size() != ctx.dimension())
        throw std::invalid_argument("VectorField: component count does not match dimension");
    for (const auto& c : comps_) require_same_context(ctx_, c.context(), "VectorField");
}

VectorField VectorField::zero(const SeriesContext& ctx) {
    return VectorField(ctx, SeriesTuple(ctx.dimension(), TruncatedSeries(ctx)));
}

VectorField VectorField::monomial(const SeriesContext& ctx, std::size_t axis,
                                  const MultiIndex& alpha, const Rational& c) {
    if (axis >= ctx.dimension())
        throw std::invalid_argument("VectorField::monomial: axis out of range");
    VectorField X = zero(ctx);
    X.comps_[axis].add_term(alpha, c);
    return X;
}

bool VectorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

bool VectorField::vanishes_at_origin() const {
    for (const auto& c : comps_)
        if (!c.constant_term().is_zero()) return false;
    return true;
}

VectorField VectorField::operator-() const {
    SeriesTuple t;
    t.reserve(comps_.size());
    for (const auto& c : comps_) t.push_back(-c);
    return VectorField(ctx_, std::move(t));
}

VectorField& VectorField::operator+=(const VectorField& o) {
    require_same_context(ctx_, o.ctx_, "VectorField::operator+=");
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    require_same_context(ctx_, o.ctx_, "VectorField::operator-=");
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

VectorField VectorField::scaled(const Rational& c) const {
    SeriesTuple t;
    t.reserve(comps_.size());
    for (const auto& s : comps_) t.push_back(s.scaled(c));
    return VectorField(ctx_, std::move(t));
}

VectorField VectorField::embedded(const SeriesContext& target) const {
    SeriesTuple t;
    t.reserve(comps_.size());
    for (const auto& s : comps_) t.push_back(s.embedded(target));
    return VectorField(target, std::move(t));
}

TruncatedSeries apply(const VectorField& X, const TruncatedSeries& f) {
    require_same_context(X.context(), f.context(), "apply");
    TruncatedSeries r(f.context());
    for (std::size_t i = 0; i < X.context().dimension(); ++i) {
        if (X.component(i).is_zero()) continue;
        r += X.component(i) * f.derivative(i);
    }
    return r;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    require_same_context(X.context(), Y.context(), "lie_bracket");
    SeriesTuple t;
    t.reserve(X.context().dimension());
    for (std::size_t i = 0; i < X.context().dimension(); ++i)
        t.push_back(apply(X, Y.component(i)) - apply(Y, X.component(i)));
    return VectorField(X.context(), std::move(t));
}

SeriesMatrix jacobian(const SeriesTuple& phi) {
    const std::size_t n = phi.size();
    SeriesMatrix J(n);
    for (std::size_t i = 0; i < n; ++i) {
        J[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) J[i].push_back(phi[i].derivative(j));
    }
    return J;
}

RationalMatrix jacobian_at_zero(const SeriesTuple& phi) {
    const std::size_t n = phi.size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ctx = phi[i].context();
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = phi[i].coefficient(MultiIndex::unit(ctx.dimension(), j));
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const VectorField& X) {
    bool printed = false;
    for (std::size_t i = 0; i < X.context().dimension(); ++i) {
        if (X.component(i).is_zero()) continue;
        if (printed) os << " + ";
        os << "(" << X.component(i) << ")*d/dx" << (i + 1);
        printed = true;
    }
    if (!printed) os << "0";
    return os;
}

}  // namespace wlin
