#include "wlin/series.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wlin/errors.hpp"

namespace wlin {

void require_same_context(const SeriesContext& a, const SeriesContext& b, const char* where) {
    if (a != b) {
        std::ostringstream msg;
        msg << where << ": context mismatch (" << a << " vs " << b << ")";
        throw ContextMismatchError(msg.str());
    }
}

TruncatedSeries::TruncatedSeries(const SeriesContext& ctx)
    : ctx_(ctx), terms_(MonomialOrder{ctx.weights().weights()}) {}

TruncatedSeries TruncatedSeries::constant(const SeriesContext& ctx, const Rational& c) {
    TruncatedSeries f(ctx);
    f.add_term(MultiIndex::zero(ctx.dimension()), c);
    return f;
}

TruncatedSeries TruncatedSeries::monomial(const SeriesContext& ctx, const MultiIndex& alpha,
                                          const Rational& c) {
    if (alpha.size() != ctx.dimension())
        throw std::invalid_argument("TruncatedSeries::monomial: exponent length mismatch");
    TruncatedSeries f(ctx);
    f.add_term(alpha, c);
    return f;
}

TruncatedSeries TruncatedSeries::coordinate(const SeriesContext& ctx, std::size_t axis) {
    if (axis >= ctx.dimension())
        throw std::invalid_argument("TruncatedSeries::coordinate: axis out of range");
    return monomial(ctx, MultiIndex::unit(ctx.dimension(), axis), Rational(1));
}

Rational TruncatedSeries::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const {
    return coefficient(MultiIndex::zero(ctx_.dimension()));
}

void TruncatedSeries::add_term(const MultiIndex& alpha, const Rational& c) {
    if (c.is_zero()) return;
    if (weighted_degree(alpha, ctx_.weights()) > ctx_.cutoff()) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeightedOrder TruncatedSeries::order() const {
    if (terms_.empty()) return WeightedOrder::infinity();
    // The map is graded: the first key has minimal weighted degree.
    return WeightedOrder::finite(weighted_degree(terms_.begin()->first, ctx_.weights()));
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(ctx_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_context(ctx_, o.ctx_, "TruncatedSeries::operator+=");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_context(ctx_, o.ctx_, "TruncatedSeries::operator-=");
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_context(a.ctx_, b.ctx_, "TruncatedSeries::operator*");
    const auto& w = a.ctx_.weights();
    const long cutoff = a.ctx_.cutoff();
    TruncatedSeries r(a.ctx_);
    const std::size_t n = a.ctx_.dimension();
    for (const auto& [alpha, ca] : a.terms_) {
        const long da = weighted_degree(alpha, w);
        for (const auto& [beta, cb] : b.terms_) {
            if (da + weighted_degree(beta, w) > cutoff) continue;
            MultiIndex gamma = alpha;
            for (std::size_t i = 0; i < n; ++i) gamma[i] += beta[i];
            r.add_term(gamma, ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [a, v] : terms_) r.terms_.emplace(a, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::derivative(std::size_t axis) const {
    if (axis >= ctx_.dimension())
        throw std::invalid_argument("TruncatedSeries::derivative: axis out of range");
    TruncatedSeries r(ctx_);
    for (const auto& [a, c] : terms_) {
        if (a[axis] == 0) continue;
        MultiIndex b = a;
        b[axis] -= 1;
        r.add_term(b, c * Rational(static_cast<long>(a[axis])));
    }
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const Rational c0 = constant_term();
    if (c0.is_zero())
        throw std::invalid_argument("TruncatedSeries::reciprocal: zero constant term");
    // f = c0 (1 - u) with Theta_w(u) >= 1, so 1/f = (1/c0) sum u^k; the
    // powers vanish modulo the cutoff once k exceeds it.
    const Rational inv = c0.reciprocal();
    TruncatedSeries u = constant(ctx_, Rational(1)) - scaled(inv);
    TruncatedSeries acc = constant(ctx_, Rational(1));
    TruncatedSeries upow = constant(ctx_, Rational(1));
    for (long k = 1; k <= ctx_.cutoff(); ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        acc += upow;
    }
    return acc.scaled(inv);
}

TruncatedSeries TruncatedSeries::embedded(const SeriesContext& target) const {
    if (target.weights() != ctx_.weights())
        throw std::invalid_argument("TruncatedSeries::embedded: different weights");
    TruncatedSeries r(target);
    for (const auto& [a, c] : terms_) r.add_term(a, c);
    return r;
}

TruncatedSeries TruncatedSeries::graded_part(long k) const {
    TruncatedSeries r(ctx_);
    for (const auto& [a, c] : terms_)
        if (weighted_degree(a, ctx_.weights()) == k) r.terms_.emplace(a, c);
    return r;
}

TruncatedSeries TruncatedSeries::truncated_to_degree(long k) const {
    TruncatedSeries r(ctx_);
    for (const auto& [a, c] : terms_) {
        if (weighted_degree(a, ctx_.weights()) > k) break;  // graded iteration order
        r.terms_.emplace(a, c);
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

TruncatedSeries compose(const TruncatedSeries& f, const std::vector<TruncatedSeries>& phi) {
    const SeriesContext& ctx = f.context();
    const std::size_t n = ctx.dimension();
    if (phi.size() != n)
        throw std::invalid_argument("compose: tuple length does not match dimension");
    for (std::size_t i = 0; i < n; ++i) {
        require_same_context(ctx, phi[i].context(), "compose");
        if (!phi[i].constant_term().is_zero())
            throw std::invalid_argument("compose: substituted series must have zero constant term");
    }

    // pows[i][k] = phi[i]^k, built on demand. Since Theta_w(phi^i) >= 1,
    // powers die off at the cutoff.
    std::vector<std::vector<TruncatedSeries>> pows(n);
    for (std::size_t i = 0; i < n; ++i)
        pows[i].push_back(TruncatedSeries::constant(ctx, Rational(1)));
    auto power = [&](std::size_t i, std::uint32_t k) -> const TruncatedSeries& {
        while (pows[i].size() <= k) pows[i].push_back(pows[i].back() * phi[i]);
        return pows[i][k];
    };

    TruncatedSeries result(ctx);
    for (const auto& [alpha, c] : f.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(ctx, c);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
            if (alpha[i] == 0) continue;
            term = term * power(i, alpha[i]);
        }
        result += term;
    }
    return result;
}

SeriesTuple identity_tuple(const SeriesContext& ctx) {
    SeriesTuple t;
    t.reserve(ctx.dimension());
    for (std::size_t i = 0; i < ctx.dimension(); ++i)
        t.push_back(TruncatedSeries::coordinate(ctx, i));
    return t;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [a, c] : f.terms()) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.abs();
        if (a.is_zero()) {
            os << mag.str();
        } else {
            bool printed = false;
            if (mag != Rational(1)) {
                os << mag.str();
                printed = true;
            }
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                if (printed) os << "*";
                os << "x" << (i + 1);
                if (a[i] > 1) os << "^" << a[i];
                printed = true;
            }
        }
    }
    return os;
}

}  // namespace wlin
