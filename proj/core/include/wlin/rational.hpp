#ifndef WLIN_RATIONAL_HPP
#define WLIN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace wlin {

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin value wrapper over GMP's mpq_class; zero is canonically 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v);

    /// Parses "p", "-p", or "p/q". Throws std::invalid_argument on bad input.
    static Rational parse(const std::string& text);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(unsigned long e) const;

    /// Combined bit length of numerator and denominator; pivot-selection heuristic.
    std::size_t bit_length() const;

    double to_double() const { return v_.get_d(); }

    /// Lowest-terms string: "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wlin

#endif
