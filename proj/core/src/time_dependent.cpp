#include "wlin/time_dependent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "wlin/errors.hpp"

namespace wlin {

TPolySeries::TPolySeries(const SeriesContext& ctx, long t_cap)
    : ctx_(ctx), t_cap_(t_cap), c_(static_cast<std::size_t>(t_cap) + 1, TruncatedSeries(ctx)) {
    if (t_cap < 0) throw std::invalid_argument("TPolySeries: negative t cap");
}

TPolySeries TPolySeries::from_series(const TruncatedSeries& f, long t_cap) {
    TPolySeries p(f.context(), t_cap);
    p.c_[0] = f;
    return p;
}

const TruncatedSeries& TPolySeries::coefficient(long k) const {
    if (k < 0 || k > t_cap_)
        throw std::out_of_range("TPolySeries::coefficient: t degree out of range");
    return c_[static_cast<std::size_t>(k)];
}

void TPolySeries::set_coefficient(long k, TruncatedSeries f) {
    if (k < 0 || k > t_cap_) throw std::invalid_argument("TPolySeries: t degree out of range");
    require_same_context(ctx_, f.context(), "TPolySeries::set_coefficient");
    c_[static_cast<std::size_t>(k)] = std::move(f);
}

bool TPolySeries::is_zero() const {
    for (const auto& f : c_)
        if (!f.is_zero()) return false;
    return true;
}

TPolySeries& TPolySeries::operator+=(const TPolySeries& o) {
    require_same_context(ctx_, o.ctx_, "TPolySeries::operator+=");
    for (long k = 0; k <= t_cap_ && k <= o.t_cap_; ++k)
        c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

TPolySeries& TPolySeries::operator-=(const TPolySeries& o) {
    require_same_context(ctx_, o.ctx_, "TPolySeries::operator-=");
    for (long k = 0; k <= t_cap_ && k <= o.t_cap_; ++k)
        c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

TPolySeries operator*(const TPolySeries& a, const TPolySeries& b) {
    require_same_context(a.context(), b.context(), "TPolySeries::operator*");
    const long cap = a.t_cap();
    TPolySeries r(a.context(), cap);
    for (long i = 0; i <= a.t_cap(); ++i) {
        if (a.coefficient(i).is_zero()) continue;
        for (long j = 0; j <= b.t_cap() && i + j <= cap; ++j) {
            if (b.coefficient(j).is_zero()) continue;
            r.set_coefficient(i + j, r.coefficient(i + j) + a.coefficient(i) * b.coefficient(j));
        }
    }
    return r;
}

TPolySeries TPolySeries::scaled(const Rational& c) const {
    TPolySeries r(ctx_, t_cap_);
    for (long k = 0; k <= t_cap_; ++k)
        r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)].scaled(c);
    return r;
}

TPolySeries TPolySeries::t_shifted(long k) const {
    TPolySeries r(ctx_, t_cap_);
    for (long j = 0; j + k <= t_cap_ && j <= t_cap_; ++j)
        r.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
    return r;
}

TPolySeries TPolySeries::derivative(std::size_t axis) const {
    TPolySeries r(ctx_, t_cap_);
    for (long k = 0; k <= t_cap_; ++k)
        r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)].derivative(axis);
    return r;
}

TPolySeries TPolySeries::reciprocal() const {
    const Rational c00 = c_[0].constant_term();
    if (c00.is_zero())
        throw std::invalid_argument("TPolySeries::reciprocal: zero constant term");
    // f = c00 (1 - u); every term of u has t-degree + weighted x-degree >= 1,
    // so the geometric series terminates at t_cap + cutoff.
    const Rational inv = c00.reciprocal();
    TPolySeries one(ctx_, t_cap_);
    one.set_coefficient(0, TruncatedSeries::constant(ctx_, Rational(1)));
    TPolySeries u = one - scaled(inv);
    TPolySeries acc = one;
    TPolySeries upow = one;
    for (long k = 1; k <= t_cap_ + ctx_.cutoff(); ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        acc += upow;
    }
    return acc.scaled(inv);
}

TPolySeries compose_tpoly(const TruncatedSeries& f, const std::vector<TPolySeries>& phi) {
    const SeriesContext& ctx = f.context();
    const std::size_t n = ctx.dimension();
    if (phi.size() != n)
        throw std::invalid_argument("compose_tpoly: tuple length does not match dimension");
    long cap = 0;
    for (std::size_t i = 0; i < n; ++i) {
        require_same_context(ctx, phi[i].context(), "compose_tpoly");
        cap = std::max(cap, phi[i].t_cap());
        if (!phi[i].coefficient(0).constant_term().is_zero())
            throw std::invalid_argument(
                "compose_tpoly: t^0 coefficient must have zero constant term");
    }

    std::vector<std::vector<TPolySeries>> pows(n);
    TPolySeries one(ctx, cap);
    one.set_coefficient(0, TruncatedSeries::constant(ctx, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) pows[i].push_back(one);
    auto power = [&](std::size_t i, std::uint32_t k) -> const TPolySeries& {
        while (pows[i].size() <= k) pows[i].push_back(pows[i].back() * phi[i]);
        return pows[i][k];
    };

    TPolySeries result(ctx, cap);
    for (const auto& [alpha, c] : f.terms()) {
        TPolySeries term = one.scaled(c);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
            if (alpha[i] == 0) continue;
            term = term * power(i, alpha[i]);
        }
        result += term;
    }
    return result;
}

TimeVectorField::TimeVectorField(const SeriesContext& ctx, std::vector<VectorField> coefficients)
    : ctx_(ctx), coeffs_(std::move(coefficients)), zero_(VectorField::zero(ctx)) {
    if (coeffs_.empty()) coeffs_.push_back(zero_);
    for (const auto& X : coeffs_)
        require_same_context(ctx_, X.context(), "TimeVectorField");
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TimeVectorField TimeVectorField::constant(const VectorField& X) {
    return TimeVectorField(X.context(), {X});
}

TimeVectorField TimeVectorField::zero(const SeriesContext& ctx) {
    return TimeVectorField(ctx, {VectorField::zero(ctx)});
}

const VectorField& TimeVectorField::coefficient(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return zero_;
    return coeffs_[static_cast<std::size_t>(k)];
}

bool TimeVectorField::is_time_independent() const {
    return coeffs_.size() == 1;
}

TimeVectorField TimeVectorField::time_derivative() const {
    std::vector<VectorField> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(coeffs_[k].scaled(Rational(static_cast<long>(k))));
    if (d.empty()) d.push_back(VectorField::zero(ctx_));
    return TimeVectorField(ctx_, std::move(d));
}

VectorField evaluate_time_vf(const TimeVectorField& X, const Rational& tau) {
    // Horner over the finite t-support.
    VectorField acc = X.coefficient(X.t_degree());
    for (long k = X.t_degree() - 1; k >= 0; --k)
        acc = acc.scaled(tau) + X.coefficient(k);
    return acc;
}

TimeVectorField lie_bracket(const TimeVectorField& U, const TimeVectorField& X, long t_cap) {
    require_same_context(U.context(), X.context(), "lie_bracket(TimeVectorField)");
    std::vector<VectorField> out;
    for (long k = 0; k <= t_cap; ++k) {
        VectorField acc = VectorField::zero(U.context());
        for (long i = 0; i <= k; ++i) {
            if (i > U.t_degree() || k - i > X.t_degree()) continue;
            acc += lie_bracket(U.coefficient(i), X.coefficient(k - i));
        }
        out.push_back(std::move(acc));
    }
    return TimeVectorField(U.context(), std::move(out));
}

Isotopy::Isotopy(const SeriesContext& ctx, std::vector<SeriesTuple> coefficients)
    : ctx_(ctx), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("Isotopy: no coefficients");
    for (const auto& tup : coeffs_) {
        if (tup.size() != ctx.dimension())
            throw std::invalid_argument("Isotopy: tuple length does not match dimension");
        for (const auto& f : tup) require_same_context(ctx_, f.context(), "Isotopy");
    }
    const DiffeoCheck check = is_formal_diffeo(coeffs_[0]);
    if (!check.ok)
        throw std::invalid_argument("Isotopy: t = 0 slice is not a formal diffeomorphism: " +
                                    check.diagnostic);
}

Isotopy Isotopy::identity(const SeriesContext& ctx, long t_cap) {
    std::vector<SeriesTuple> coeffs;
    coeffs.push_back(identity_tuple(ctx));
    for (long k = 1; k <= t_cap; ++k)
        coeffs.push_back(SeriesTuple(ctx.dimension(), TruncatedSeries(ctx)));
    return Isotopy(ctx, std::move(coeffs));
}

const SeriesTuple& Isotopy::coefficient(long k) const {
    static const SeriesTuple empty;
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) {
        throw std::out_of_range("Isotopy::coefficient: t degree beyond the computed cap");
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

long Isotopy::last_active_t_degree() const {
    for (long k = t_cap(); k >= 1; --k) {
        for (const auto& f : coeffs_[static_cast<std::size_t>(k)])
            if (!f.is_zero()) return k;
    }
    return -1;
}

TPolySeries Isotopy::component_tpoly(std::size_t i) const {
    TPolySeries p(ctx_, t_cap());
    for (long k = 0; k <= t_cap(); ++k)
        p.set_coefficient(k, coeffs_[static_cast<std::size_t>(k)][i]);
    return p;
}

std::vector<TPolySeries> Isotopy::tuple_tpoly() const {
    std::vector<TPolySeries> t;
    t.reserve(ctx_.dimension());
    for (std::size_t i = 0; i < ctx_.dimension(); ++i) t.push_back(component_tpoly(i));
    return t;
}

Isotopy flow(const TimeVectorField& X, long t_cap, bool require_weighted_order_bound) {
    const SeriesContext& ctx = X.context();
    const std::size_t n = ctx.dimension();
    const Weighting& w = ctx.weights();
    if (t_cap < 0) throw std::invalid_argument("flow: negative t cap");

    if (require_weighted_order_bound) {
        for (long k = 0; k <= X.t_degree(); ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (!X.coefficient(k).component(i).order().at_least(w[i] + k + 1)) {
                    std::ostringstream msg;
                    msg << "flow: coefficient " << k << ", component " << (i + 1)
                        << " violates the weighted order bound Theta_w >= w_i + k + 1";
                    throw std::invalid_argument(msg.str());
                }
    }

    // Degree-by-degree recursion from the flow property: the t^m coefficient
    // of d/dt phi_t(x^i) is (m+1) phi_{m+1}^i, matched against the t^m
    // coefficient of phi_t(X_t(x^i)).
    std::vector<TPolySeries> Phi;
    Phi.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        Phi.push_back(TPolySeries::from_series(TruncatedSeries::coordinate(ctx, i), t_cap));

    for (long m = 0; m < t_cap; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            TruncatedSeries rhs(ctx);
            for (long k = 0; k <= std::min<long>(m, X.t_degree()); ++k) {
                const TruncatedSeries& g = X.coefficient(k).component(i);
                if (g.is_zero()) continue;
                rhs += compose_tpoly(g, Phi).coefficient(m - k);
            }
            Phi[i].set_coefficient(m + 1, rhs.scaled(Rational(1, m + 1)));
        }
    }

    std::vector<SeriesTuple> coeffs;
    coeffs.reserve(static_cast<std::size_t>(t_cap) + 1);
    for (long k = 0; k <= t_cap; ++k) {
        SeriesTuple tup;
        tup.reserve(n);
        for (std::size_t i = 0; i < n; ++i) tup.push_back(Phi[i].coefficient(k));
        coeffs.push_back(std::move(tup));
    }

    if (require_weighted_order_bound) {
        for (long k = 0; k <= t_cap; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (!coeffs[static_cast<std::size_t>(k)][i].order().at_least(w[i] + k))
                    throw std::logic_error(
                        "flow: computed coefficients violate Theta_w(phi_k^i) >= w_i + k");
    }
    return Isotopy(ctx, std::move(coeffs));
}

Isotopy exponential_flow(const VectorField& X, long t_cap) {
    const SeriesContext& ctx = X.context();
    const std::size_t n = ctx.dimension();
    std::vector<SeriesTuple> coeffs;
    SeriesTuple iter = identity_tuple(ctx);  // X^(k) applied to coordinates
    Rational factorial(1);
    for (long k = 0; k <= t_cap; ++k) {
        if (k > 0) {
            factorial *= Rational(k);
            SeriesTuple next;
            next.reserve(n);
            for (std::size_t i = 0; i < n; ++i) next.push_back(apply(X, iter[i]));
            iter = std::move(next);
        }
        SeriesTuple tup;
        tup.reserve(n);
        const Rational inv = factorial.reciprocal();
        for (std::size_t i = 0; i < n; ++i) tup.push_back(iter[i].scaled(inv));
        coeffs.push_back(std::move(tup));
    }
    return Isotopy(ctx, std::move(coeffs));
}

FormalDiffeo evaluate_isotopy(const Isotopy& phi, const Rational& tau,
                              EvalCertificate certificate) {
    const SeriesContext& ctx = phi.context();
    const std::size_t n = ctx.dimension();
    if (!tau.is_zero() && certificate == EvalCertificate::Detected) {
        const long active = phi.last_active_t_degree();
        if (active == phi.t_cap()) {
            std::ostringstream msg;
            msg << "evaluate_isotopy: t-support still nonzero at the cap " << phi.t_cap()
                << "; the stored coefficients cannot certify a finite sum";
            throw NonEvaluativeError(msg.str());
        }
    }
    SeriesTuple acc = phi.coefficient(phi.t_cap());
    for (long k = phi.t_cap() - 1; k >= 0; --k) {
        for (std::size_t i = 0; i < n; ++i)
            acc[i] = acc[i].scaled(tau) + phi.coefficient(k)[i];
    }
    const DiffeoCheck check = is_formal_diffeo(acc);
    if (!check.ok)
        throw NonEvaluativeError("evaluate_isotopy: evaluation at t = " + tau.str() +
                                 " is not a formal diffeomorphism: " + check.diagnostic);
    return FormalDiffeo::create(std::move(acc));
}

Isotopy compose_isotopy(const Isotopy& psi, const Isotopy& phi) {
    require_same_context(psi.context(), phi.context(), "compose_isotopy");
    const SeriesContext& ctx = psi.context();
    const std::size_t n = ctx.dimension();
    const long cap = std::max(psi.t_cap(), phi.t_cap());
    std::vector<TPolySeries> Phi;
    Phi.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TPolySeries p(ctx, cap);
        for (long k = 0; k <= phi.t_cap(); ++k) p.set_coefficient(k, phi.coefficient(k)[i]);
        Phi.push_back(std::move(p));
    }
    std::vector<SeriesTuple> out(static_cast<std::size_t>(cap) + 1,
                                 SeriesTuple(n, TruncatedSeries(ctx)));
    for (std::size_t i = 0; i < n; ++i) {
        TPolySeries comp(ctx, cap);
        for (long k = 0; k <= psi.t_cap(); ++k) {
            const TruncatedSeries& psik = psi.coefficient(k)[i];
            if (psik.is_zero()) continue;
            comp += compose_tpoly(psik, Phi).t_shifted(k);
        }
        for (long k = 0; k <= cap; ++k) out[static_cast<std::size_t>(k)][i] = comp.coefficient(k);
    }
    return Isotopy(ctx, std::move(out));
}

Isotopy invert_isotopy(const Isotopy& phi) {
    const SeriesContext& ctx = phi.context();
    const std::size_t n = ctx.dimension();
    const long cap = phi.t_cap();
    const std::vector<TPolySeries> Phi = phi.tuple_tpoly();

    const FormalDiffeo psi0 = invert_diffeo(FormalDiffeo::create(phi.time_zero_slice()));

    // Matching t-degrees in psi(phi) = id: the t^m coefficient of the
    // already-determined part, composed with phi, must be cancelled by
    // psi_m(phi_0); solve by substituting phi_0's inverse.
    std::vector<SeriesTuple> psi;
    psi.push_back(psi0.components());
    for (long m = 1; m <= cap; ++m) {
        SeriesTuple next(n, TruncatedSeries(ctx));
        for (std::size_t i = 0; i < n; ++i) {
            TruncatedSeries residual(ctx);
            for (long k = 0; k < m; ++k) {
                const TruncatedSeries& psik = psi[static_cast<std::size_t>(k)][i];
                if (psik.is_zero()) continue;
                residual += compose_tpoly(psik, Phi).coefficient(m - k);
            }
            next[i] = -compose(residual, psi0.components());
        }
        psi.push_back(std::move(next));
    }
    return Isotopy(ctx, std::move(psi));
}

TimeVectorField pullback_tvf(const Isotopy& phi, const TimeVectorField& X) {
    require_same_context(phi.context(), X.context(), "pullback_tvf");
    const SeriesContext& ctx = phi.context();
    const std::size_t n = ctx.dimension();
    const long cap = phi.t_cap();
    const std::vector<TPolySeries> Phi = phi.tuple_tpoly();

    // Right-hand side: X_t written in the moving coordinates.
    std::vector<TPolySeries> rhs;
    rhs.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        TPolySeries v(ctx, cap);
        for (long k = 0; k <= X.t_degree(); ++k) {
            const TruncatedSeries& g = X.coefficient(k).component(j);
            if (g.is_zero()) continue;
            v += compose_tpoly(g, Phi).t_shifted(k);
        }
        rhs.push_back(std::move(v));
    }

    // Augmented elimination on D_x phi(t, x) over the t-truncated ring.
    std::vector<std::vector<TPolySeries>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i].push_back(Phi[i].derivative(j));
        m[i].push_back(rhs[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i) {
            if (!m[i][col].coefficient(0).constant_term().is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == n)
            throw std::invalid_argument("pullback_tvf: singular constant Jacobian");
        std::swap(m[pivot], m[col]);
        const TPolySeries inv = m[col][col].reciprocal();
        for (std::size_t j = col; j <= n; ++j) m[col][j] = m[col][j] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            const TPolySeries f = m[i][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }

    std::vector<VectorField> out;
    for (long k = 0; k <= cap; ++k) {
        SeriesTuple tup;
        tup.reserve(n);
        for (std::size_t i = 0; i < n; ++i) tup.push_back(m[i][n].coefficient(k));
        out.push_back(VectorField(ctx, std::move(tup)));
    }
    return TimeVectorField(ctx, std::move(out));
}

std::vector<Rational> det_jacobian_at_zero_tpoly(const Isotopy& phi) {
    const SeriesContext& ctx = phi.context();
    const std::size_t n = ctx.dimension();
    const long cap = phi.t_cap();

    // Entry (i, j): polynomial in t given by the x^j-coefficients of the
    // t-coefficients of component i.
    auto entry = [&](std::size_t i, std::size_t j) {
        std::vector<Rational> p(static_cast<std::size_t>(cap) + 1, Rational(0));
        for (long k = 0; k <= cap; ++k)
            p[static_cast<std::size_t>(k)] =
                phi.coefficient(k)[i].coefficient(MultiIndex::unit(n, j));
        return p;
    };
    auto poly_mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(static_cast<std::size_t>(cap) + 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j + i < r.size() && j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
        }
        return r;
    };

    // Cofactor expansion over the polynomial ring; fine for small n.
    std::vector<std::vector<std::vector<Rational>>> mat(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mat[i].push_back(entry(i, j));

    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;

    std::function<std::vector<Rational>(std::size_t, std::vector<std::size_t>&)> det =
        [&](std::size_t row, std::vector<std::size_t>& active) -> std::vector<Rational> {
        std::vector<Rational> acc(static_cast<std::size_t>(cap) + 1, Rational(0));
        if (active.empty()) {
            acc[0] = Rational(1);
            return acc;
        }
        for (std::size_t pos = 0; pos < active.size(); ++pos) {
            const std::size_t j = active[pos];
            std::vector<std::size_t> rest = active;
            rest.erase(rest.begin() + static_cast<long>(pos));
            auto sub = det(row + 1, rest);
            auto term = poly_mul(mat[row][j], sub);
            const bool neg = (pos % 2) == 1;
            for (std::size_t k = 0; k < acc.size(); ++k)
                acc[k] += neg ? -term[k] : term[k];
        }
        return acc;
    };
    return det(0, cols);
}

}  // namespace wlin
