#include "wlin/diffeo.hpp"

#include <sstream>
#include <stdexcept>

namespace wlin {

DiffeoCheck is_formal_diffeo(const SeriesTuple& phi) {
    if (phi.empty()) return {false, "empty tuple"};
    const SeriesContext& ctx = phi[0].context();
    if (phi.size() != ctx.dimension())
        return {false, "tuple length does not match dimension"};
    for (std::size_t i = 0; i < phi.size(); ++i) {
        require_same_context(ctx, phi[i].context(), "is_formal_diffeo");
        if (!phi[i].constant_term().is_zero()) {
            std::ostringstream msg;
            msg << "component " << (i + 1) << " has nonzero constant term "
                << phi[i].constant_term();
            return {false, msg.str()};
        }
    }
    if (determinant(jacobian_at_zero(phi)).is_zero())
        return {false, "Jacobian at the origin is singular"};
    return {true, ""};
}

FormalDiffeo FormalDiffeo::create(SeriesTuple components) {
    const DiffeoCheck check = is_formal_diffeo(components);
    if (!check.ok)
        throw std::invalid_argument("FormalDiffeo: not a formal diffeomorphism: " +
                                    check.diagnostic);
    SeriesContext ctx = components[0].context();
    return FormalDiffeo(std::move(ctx), std::move(components));
}

FormalDiffeo FormalDiffeo::identity(const SeriesContext& ctx) {
    return FormalDiffeo(ctx, identity_tuple(ctx));
}

FormalDiffeo FormalDiffeo::embedded(const SeriesContext& target) const {
    SeriesTuple t;
    t.reserve(comps_.size());
    for (const auto& c : comps_) t.push_back(c.embedded(target));
    return FormalDiffeo(target, std::move(t));
}

FormalDiffeo compose_diffeo(const FormalDiffeo& psi, const FormalDiffeo& phi) {
    require_same_context(psi.context(), phi.context(), "compose_diffeo");
    SeriesTuple t;
    t.reserve(psi.components().size());
    for (const auto& c : psi.components()) t.push_back(compose(c, phi.components()));
    return FormalDiffeo::create(std::move(t));
}

FormalDiffeo invert_diffeo(const FormalDiffeo& phi) {
    const SeriesContext& ctx = phi.context();
    const std::size_t n = ctx.dimension();

    const RationalMatrix L = jacobian_at_zero(phi.components());
    const auto Linv = inverse(L);
    if (!Linv) throw std::invalid_argument("invert_diffeo: singular linear part");

    // Split phi = L + h with h the terms of total degree >= 2, and solve
    // psi = Linv[ x - h(psi) ] by degree recursion: each pass pins down one
    // more weighted degree, and weighted cutoff N bounds total degree by N.
    SeriesTuple h;
    h.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TruncatedSeries hi(ctx);
        for (const auto& [a, c] : phi.component(i).terms())
            if (a.total_degree() >= 2) hi.add_term(a, c);
        h.push_back(std::move(hi));
    }
    auto linear_apply = [&](const RationalMatrix& M, const SeriesTuple& v) {
        SeriesTuple out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            TruncatedSeries s(ctx);
            for (std::size_t j = 0; j < n; ++j)
                if (!M(i, j).is_zero()) s += v[j].scaled(M(i, j));
            out.push_back(std::move(s));
        }
        return out;
    };

    SeriesTuple psi = linear_apply(*Linv, identity_tuple(ctx));
    bool higher = false;
    for (const auto& hi : h) higher |= !hi.is_zero();
    if (higher) {
        for (long pass = 0; pass < ctx.cutoff(); ++pass) {
            SeriesTuple rhs;
            rhs.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                rhs.push_back(TruncatedSeries::coordinate(ctx, i) - compose(h[i], psi));
            SeriesTuple next = linear_apply(*Linv, rhs);
            if (next == psi) break;
            psi = std::move(next);
        }
    }
    return FormalDiffeo::create(std::move(psi));
}

SeriesTuple solve_series_system(const SeriesMatrix& J, const SeriesTuple& v) {
    const std::size_t n = v.size();
    if (J.size() != n) throw std::invalid_argument("solve_series_system: shape mismatch");

    // Augmented elimination [J | v] -> [I | z].
    SeriesMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (J[i].size() != n) throw std::invalid_argument("solve_series_system: shape mismatch");
        m[i] = J[i];
        m[i].push_back(v[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i) {
            if (!m[i][col].constant_term().is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == n)
            throw std::invalid_argument(
                "solve_series_system: no unit-constant pivot (singular constant Jacobian)");
        std::swap(m[pivot], m[col]);
        const TruncatedSeries inv = m[col][col].reciprocal();
        for (std::size_t j = col; j <= n; ++j) m[col][j] = m[col][j] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            const TruncatedSeries f = m[i][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    SeriesTuple z;
    z.reserve(n);
    for (std::size_t i = 0; i < n; ++i) z.push_back(m[i][n]);
    return z;
}

VectorField pullback_vf(const FormalDiffeo& phi, const VectorField& X) {
    require_same_context(phi.context(), X.context(), "pullback_vf");
    const std::size_t n = X.context().dimension();
    SeriesTuple x_at_phi;
    x_at_phi.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        x_at_phi.push_back(compose(X.component(i), phi.components()));
    SeriesTuple z = solve_series_system(jacobian(phi.components()), x_at_phi);
    return VectorField(X.context(), std::move(z));
}

TruncatedSeries pullback_function(const FormalDiffeo& phi, const TruncatedSeries& f) {
    require_same_context(phi.context(), f.context(), "pullback_function");
    return compose(f, phi.components());
}

}  // namespace wlin
