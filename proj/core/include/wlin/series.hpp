#ifndef WLIN_SERIES_HPP
#define WLIN_SERIES_HPP

#include <iosfwd>
#include <map>
#include <vector>

#include "wlin/context.hpp"
#include "wlin/multi_index.hpp"
#include "wlin/order.hpp"
#include "wlin/rational.hpp"

namespace wlin {

/// Canonical monomial order: ascending weighted degree, ties broken by
/// descending lexicographic exponents. Determines map iteration and all
/// printed/serialized term orders.
struct MonomialOrder {
    std::vector<int> weights;

    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            da += static_cast<long>(weights[i]) * a[i];
            db += static_cast<long>(weights[i]) * b[i];
        }
        if (da != db) return da < db;
        return b.exponents() < a.exponents();
    }
};

/// Sparse multivariate power series with exact rational coefficients,
/// truncated at the context's weighted-degree cutoff. Operations truncate
/// eagerly: no stored monomial ever exceeds the cutoff, and no stored
/// coefficient is zero. Values are immutable in spirit; all operations
/// return new series.
class TruncatedSeries {
public:
    using TermMap = std::map<MultiIndex, Rational, MonomialOrder>;

    explicit TruncatedSeries(const SeriesContext& ctx);

    static TruncatedSeries constant(const SeriesContext& ctx, const Rational& c);
    static TruncatedSeries monomial(const SeriesContext& ctx, const MultiIndex& alpha,
                                    const Rational& c);
    /// The coordinate function x^axis (0-based axis).
    static TruncatedSeries coordinate(const SeriesContext& ctx, std::size_t axis);

    const SeriesContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const MultiIndex& alpha) const;
    Rational constant_term() const;

    /// Adds c * x^alpha. Terms beyond the cutoff are dropped (eager
    /// truncation); cancellations to zero are erased.
    void add_term(const MultiIndex& alpha, const Rational& c);

    /// Weighted order Theta_w: least weighted degree of a stored term,
    /// infinity for the zero series.
    WeightedOrder order() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries scaled(const Rational& c) const;

    /// Termwise partial derivative with respect to x^axis; context unchanged.
    TruncatedSeries derivative(std::size_t axis) const;

    /// Multiplicative inverse modulo the cutoff; requires a nonzero
    /// constant term.
    TruncatedSeries reciprocal() const;

    /// Re-truncates into a context with a different cutoff. Lowering the
    /// cutoff is always sound; raising it treats the stored terms as the
    /// whole series (exact for polynomial data).
    TruncatedSeries embedded(const SeriesContext& target) const;

    /// Terms of weighted degree exactly k.
    TruncatedSeries graded_part(long k) const;
    /// Terms of weighted degree <= k.
    TruncatedSeries truncated_to_degree(long k) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    SeriesContext ctx_;
    TermMap terms_;
};

/// Substitutes the tuple phi into f: f(phi^1, ..., phi^n). Every phi^i must
/// have zero constant term and share f's context. Evaluation walks f's
/// monomials with cached powers of the phi^i, truncating eagerly.
TruncatedSeries compose(const TruncatedSeries& f, const std::vector<TruncatedSeries>& phi);

using SeriesTuple = std::vector<TruncatedSeries>;

/// The identity tuple (x^1, ..., x^n).
SeriesTuple identity_tuple(const SeriesContext& ctx);

void require_same_context(const SeriesContext& a, const SeriesContext& b, const char* where);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

}  // namespace wlin

#endif
