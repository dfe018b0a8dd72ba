#ifndef WLIN_TIME_DEPENDENT_HPP
#define WLIN_TIME_DEPENDENT_HPP

#include <vector>

#include "wlin/diffeo.hpp"
#include "wlin/vector_field.hpp"

namespace wlin {

/// Polynomial in t with truncated-series coefficients, t-degree capped.
/// The working ring for flow recursions and isotopy algebra.
class TPolySeries {
public:
    TPolySeries(const SeriesContext& ctx, long t_cap);
    static TPolySeries from_series(const TruncatedSeries& f, long t_cap);

    const SeriesContext& context() const { return ctx_; }
    long t_cap() const { return t_cap_; }

    const TruncatedSeries& coefficient(long k) const;
    void set_coefficient(long k, TruncatedSeries f);

    bool is_zero() const;

    TPolySeries& operator+=(const TPolySeries& o);
    TPolySeries& operator-=(const TPolySeries& o);
    friend TPolySeries operator+(TPolySeries a, const TPolySeries& b) { return a += b; }
    friend TPolySeries operator-(TPolySeries a, const TPolySeries& b) { return a -= b; }
    friend TPolySeries operator*(const TPolySeries& a, const TPolySeries& b);

    TPolySeries scaled(const Rational& c) const;
    /// Multiplication by t^k (dropping degrees above the cap).
    TPolySeries t_shifted(long k) const;
    /// Coefficient-wise x-derivative.
    TPolySeries derivative(std::size_t axis) const;
    /// Inverse in the truncated ring; requires a nonzero (t^0, x^0) term.
    TPolySeries reciprocal() const;

private:
    SeriesContext ctx_;
    long t_cap_;
    std::vector<TruncatedSeries> c_;
};

/// Substitutes a time-dependent tuple into a time-independent series:
/// f(Phi^1, ..., Phi^n). Each Phi^i's t^0 coefficient must have zero
/// constant term.
TPolySeries compose_tpoly(const TruncatedSeries& f, const std::vector<TPolySeries>& phi);

/// Time-dependent formal vector field with finite t-support:
/// X_t = sum t^k X_k over the stored coefficients.
class TimeVectorField {
public:
    TimeVectorField(const SeriesContext& ctx, std::vector<VectorField> coefficients);
    static TimeVectorField constant(const VectorField& X);
    static TimeVectorField zero(const SeriesContext& ctx);

    const SeriesContext& context() const { return ctx_; }
    long t_degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of t^k; zero field beyond the stored support.
    const VectorField& coefficient(long k) const;
    const std::vector<VectorField>& coefficients() const { return coeffs_; }

    bool is_time_independent() const;

    /// d/dt: coefficient k becomes (k+1) * X_{k+1}.
    TimeVectorField time_derivative() const;

private:
    SeriesContext ctx_;
    std::vector<VectorField> coeffs_;
    VectorField zero_;
};

/// sum tau^k X_k (finite t-support makes this structural).
VectorField evaluate_time_vf(const TimeVectorField& X, const Rational& tau);

/// Coefficient-wise bracket: [U_t, X_t]_k = sum_{i+j=k} [U_i, X_j],
/// truncated at t-degree t_cap.
TimeVectorField lie_bracket(const TimeVectorField& U, const TimeVectorField& X, long t_cap);

/// Formal isotopy with finite t-support: phi(t, x) = sum t^k phi_k(x).
/// The t^0 slice must have zero constant terms and invertible Jacobian.
class Isotopy {
public:
    Isotopy(const SeriesContext& ctx, std::vector<SeriesTuple> coefficients);
    static Isotopy identity(const SeriesContext& ctx, long t_cap);

    const SeriesContext& context() const { return ctx_; }
    /// Largest computed t-exponent.
    long t_cap() const { return static_cast<long>(coeffs_.size()) - 1; }
    const SeriesTuple& coefficient(long k) const;
    const std::vector<SeriesTuple>& coefficients() const { return coeffs_; }

    /// Largest k >= 1 with nonzero coefficient, or -1 when the isotopy is
    /// constant in t.
    long last_active_t_degree() const;

    /// Component i as a t-polynomial.
    TPolySeries component_tpoly(std::size_t i) const;
    std::vector<TPolySeries> tuple_tpoly() const;

    const SeriesTuple& time_zero_slice() const { return coeffs_[0]; }

private:
    SeriesContext ctx_;
    std::vector<SeriesTuple> coeffs_;
};

/// Flow of X_t: the unique isotopy with identity t = 0 slice satisfying the
/// flow property, computed degree-by-degree in t up to t_cap. When
/// require_weighted_order_bound is set, the input must satisfy
/// Theta_w(X_k^i) >= w_i + k + 1 for every stored coefficient, and the
/// computed coefficients are checked against Theta_w(phi_k^i) >= w_i + k.
Isotopy flow(const TimeVectorField& X, long t_cap, bool require_weighted_order_bound = false);

/// Flow of a time-independent field by the exponential formula:
/// coefficient k is X^(k) applied to the coordinates, divided by k!.
Isotopy exponential_flow(const VectorField& X, long t_cap);

/// How a fixed-time evaluation is certified: Detected requires the stored
/// t-support to have died out before the cap; OrderBound is supplied by
/// callers who know the flow coefficients vanish beyond the cap.
enum class EvalCertificate { Detected, OrderBound };

/// sum tau^k phi_k as a formal diffeomorphism. Throws NonEvaluativeError
/// when the certificate fails or the sum is not a diffeomorphism.
FormalDiffeo evaluate_isotopy(const Isotopy& phi, const Rational& tau,
                              EvalCertificate certificate = EvalCertificate::Detected);

/// Composite isotopy with components psi^i(t, phi(t, x)).
Isotopy compose_isotopy(const Isotopy& psi, const Isotopy& phi);

/// t-coefficientwise inverse: compose_isotopy(result, phi) is the identity
/// through the stored t-degrees.
Isotopy invert_isotopy(const Isotopy& phi);

/// Pullback of a time-dependent field along an isotopy:
/// D_x phi(t,x)^{-1} [X_t(phi(t,x))], truncated at phi's t-cap.
TimeVectorField pullback_tvf(const Isotopy& phi, const TimeVectorField& X);

/// Coefficients of det D_x phi(t, 0) as a polynomial in t.
std::vector<Rational> det_jacobian_at_zero_tpoly(const Isotopy& phi);

}  // namespace wlin

#endif
