#include "wlin/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace wlin {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::logic_error("Polynomial: leading() of zero");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(-x);
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * c);
    return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().reciprocal());
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("Polynomial: division by zero");
    Polynomial r = *this;
    std::vector<Rational> q(
        degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree()) + 1 : 0,
        Rational(0));
    const Rational inv = d.leading().reciprocal();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        const Rational factor = r.leading() * inv;
        q[shift] = factor;
        r = r - (d * Polynomial::monomial(shift, factor));
    }
    return {Polynomial(std::move(q)), std::move(r)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divide(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p;
    const Polynomial g = gcd(p, p.derivative());
    return p.divide(g).first;
}

namespace {

int sign_at_pos_inf(const Polynomial& p) { return p.is_zero() ? 0 : p.leading().sign(); }

int sign_at_neg_inf(const Polynomial& p) {
    if (p.is_zero()) return 0;
    const int s = p.leading().sign();
    return (p.degree() % 2 == 0) ? s : -s;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Polynomial r = chain[chain.size() - 2].divide(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int count_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    const Polynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    const auto chain = sturm_chain(sf);
    std::vector<int> at_neg, at_pos;
    for (const auto& q : chain) {
        at_neg.push_back(sign_at_neg_inf(q));
        at_pos.push_back(sign_at_pos_inf(q));
    }
    return variations(at_neg) - variations(at_pos);
}

int count_real_roots_between(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots_between: zero polynomial");
    const Polynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    const auto chain = sturm_chain(sf);
    std::vector<int> at_lo, at_hi;
    for (const auto& q : chain) {
        at_lo.push_back(q.evaluate(lo).sign());
        at_hi.push_back(q.evaluate(hi).sign());
    }
    return variations(at_lo) - variations(at_hi);
}

RationalRoots rational_roots(const Polynomial& p) {
    RationalRoots out;
    out.cofactor = p;
    if (p.degree() <= 0) return out;

    // Candidates are +-d/q with d dividing the constant term and q dividing
    // the leading coefficient of the integer-scaled polynomial.
    Polynomial rem = p;
    bool progress = true;
    while (progress && rem.degree() > 0) {
        progress = false;
        // Re-derive integer data from the current cofactor.
        mpz_class l(1);
        for (const auto& c : rem.coefficients())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> z;
        for (const auto& c : rem.coefficients())
            z.push_back(c.numerator() * (l / c.denominator()));

        // t = 0 roots first.
        if (z[0] == 0) {
            int mult = 0;
            const Polynomial tpoly = Polynomial::monomial(1, Rational(1));
            while (rem.degree() > 0 && rem.coefficient(0).is_zero()) {
                rem = rem.divide(tpoly).first;
                ++mult;
            }
            out.roots.emplace_back(Rational(0), mult);
            progress = true;
            continue;
        }

        auto divisors = [](const mpz_class& n) {
            std::vector<mpz_class> divs;
            for (mpz_class i(1); i * i <= n; ++i) {
                if (n % i != 0) continue;
                divs.push_back(i);
                mpz_class j = n / i;
                if (j != i) divs.push_back(j);
            }
            return divs;
        };
        const mpz_class a0 = abs(z.front());
        const mpz_class an = abs(z.back());
        bool found = false;
        for (const auto& d : divisors(a0)) {
            for (const auto& q : divisors(an)) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    const Rational candidate{sign > 0 ? d : mpz_class(-d), q};
                    if (!rem.evaluate(candidate).is_zero()) continue;
                    int mult = 0;
                    const Polynomial lin({-candidate, Rational(1)});
                    while (rem.degree() > 0 && rem.evaluate(candidate).is_zero()) {
                        rem = rem.divide(lin).first;
                        ++mult;
                    }
                    out.roots.emplace_back(candidate, mult);
                    found = true;
                    progress = true;
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    out.cofactor = rem;
    return out;
}

Polynomial char_poly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: c_{n-k} = -tr(M B_{k-1}) / k, B_k = M B_{k-1} + c_{n-k} I.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RationalMatrix b = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix mb = m * b;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mb(i, i);
        c[n - k] = -(tr / Rational(static_cast<long>(k)));
        b = mb;
        for (std::size_t i = 0; i < n; ++i) b(i, i) += c[n - k];
    }
    return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational c = p.coefficient(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.abs();
        if (k == 0 || mag != Rational(1)) os << mag.str();
        if (k > 0) {
            if (mag != Rational(1)) os << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os;
}

}  // namespace wlin
