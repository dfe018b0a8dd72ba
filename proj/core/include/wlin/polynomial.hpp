#ifndef WLIN_POLYNOMIAL_HPP
#define WLIN_POLYNOMIAL_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "wlin/linalg.hpp"
#include "wlin/rational.hpp"

namespace wlin {

/// Dense univariate polynomial over the rationals; coefficient k multiplies t^k.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coefficient(std::size_t k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const { return c_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational evaluate(const Rational& t) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divide(const Polynomial& d) const;

private:
    void trim();
    std::vector<Rational> c_;  // no trailing zeros
};

/// Monic greatest common divisor (Euclid over the rationals).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'): same roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Number of distinct real roots, by Sturm's theorem (sign variations of
/// the Sturm chain at -inf and +inf).
int count_real_roots(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots_between(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Rational roots with multiplicities, via integer root candidates on the
/// primitive integer scaling; also returns the (root-free) cofactor.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;
    Polynomial cofactor;  // what remains after dividing the roots out
};
RationalRoots rational_roots(const Polynomial& p);

/// Characteristic polynomial det(t I - M), exact, by the Faddeev-LeVerrier
/// recurrence.
Polynomial char_poly(const RationalMatrix& m);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace wlin

#endif
