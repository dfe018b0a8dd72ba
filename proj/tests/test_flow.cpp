#include <doctest.h>

#include "support/builders.hpp"
#include "wlin/errors.hpp"
#include "wlin/grading.hpp"
#include "wlin/time_dependent.hpp"

using namespace wlin;
using namespace wtest;

namespace {

/// Random time-dependent field whose coefficient k lies in filtration
/// degree k + 1 (the evaluative-flow hypothesis).
TimeVectorField bounded_time_field(Rng& rng, const SeriesContext& ctx, long t_support) {
    std::vector<VectorField> coeffs;
    for (long k = 0; k <= t_support; ++k) {
        SeriesTuple tuple;
        for (std::size_t i = 0; i < ctx.dimension(); ++i)
            tuple.push_back(rng.series(ctx, 3, ctx.weights()[i] + k + 1));
        coeffs.push_back(VectorField(ctx, std::move(tuple)));
    }
    return TimeVectorField(ctx, std::move(coeffs));
}

}  // namespace

TEST_SUITE_BEGIN("flow");

TEST_CASE("exponential flow of a nilpotent field") {
    const auto ctx = make_ctx({1, 2}, 8);
    const auto ydx = field(ctx, {{{"1", {0, 1}}}, {}});
    const auto iso = exponential_flow(ydx, 5);
    CHECK(iso.coefficient(0) == identity_tuple(ctx));
    CHECK(iso.coefficient(1)[0] == series(ctx, {{"1", {0, 1}}}));
    CHECK(iso.coefficient(1)[1].is_zero());
    for (long k = 2; k <= 5; ++k) {
        CHECK(iso.coefficient(k)[0].is_zero());
        CHECK(iso.coefficient(k)[1].is_zero());
    }
}

TEST_CASE("exponential flow of x^2 d/dx") {
    const auto c1 = make_ctx({1}, 8);
    const auto X = field(c1, {{{"1", {2}}}});
    const auto iso = exponential_flow(X, 7);
    for (long k = 0; k <= 7; ++k) {
        CHECK(iso.coefficient(k)[0] ==
              series(c1, {{"1", {static_cast<std::uint32_t>(k + 1)}}}));
    }
}

TEST_CASE("exponential flow of the Euler field") {
    const auto c1 = make_ctx({1}, 4);
    const auto X = field(c1, {{{"1", {1}}}});
    const auto iso = exponential_flow(X, 6);
    Rational factorial(1);
    for (long k = 0; k <= 6; ++k) {
        if (k > 0) factorial *= Rational(k);
        CHECK(iso.coefficient(k)[0] == series(c1, {{"1", {1}}}).scaled(factorial.reciprocal()));
    }
}

TEST_CASE("flow recursion matches the quadratic example") {
    const auto c1 = make_ctx({1}, 8);
    const auto X = TimeVectorField::constant(field(c1, {{{"1", {2}}}}));
    const auto iso = flow(X, 7);
    for (long k = 0; k <= 7; ++k)
        CHECK(iso.coefficient(k)[0] ==
              series(c1, {{"1", {static_cast<std::uint32_t>(k + 1)}}}));
}

TEST_CASE("flow of the zero field is the identity isotopy") {
    const auto ctx = make_ctx({1, 2}, 6);
    const auto iso = flow(TimeVectorField::zero(ctx), 4);
    CHECK(iso.coefficient(0) == identity_tuple(ctx));
    CHECK(iso.last_active_t_degree() == -1);
}

TEST_CASE("flow agrees with the exponential formula for time-independent fields") {
    Rng rng(41);
    const auto ctx = make_ctx({1, 2}, 6);
    for (int it = 0; it < 8; ++it) {
        const auto X = rng.admissible_field(ctx, 3);
        const auto a = flow(TimeVectorField::constant(X), 5);
        const auto b = exponential_flow(X, 5);
        for (long k = 0; k <= 5; ++k) CHECK(a.coefficient(k) == b.coefficient(k));
    }
}

TEST_CASE("weighted order bound of flow coefficients") {
    Rng rng(42);
    const auto ctx = make_ctx({1, 2, 3}, 7);
    for (int it = 0; it < 6; ++it) {
        const auto X = bounded_time_field(rng, ctx, 2);
        // require_weighted_order_bound both validates the hypothesis and
        // asserts the conclusion Theta_w(phi_k^i) >= w_i + k.
        const auto iso = flow(X, 5, true);
        for (long k = 0; k <= 5; ++k)
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(iso.coefficient(k)[i].order().at_least(ctx.weights()[i] + k));
    }
}

TEST_CASE("flow property holds beyond the coordinates") {
    Rng rng(43);
    const auto ctx = make_ctx({1, 2}, 6);
    const long cap = 4;
    for (int it = 0; it < 6; ++it) {
        const auto X = bounded_time_field(rng, ctx, 2);
        const auto iso = flow(X, cap);
        const auto Phi = iso.tuple_tpoly();
        const auto f = rng.series(ctx, 4);

        // d/dt (phi_t(f)) = phi_t(X_t(f)) coefficient-wise through t^(cap-1).
        const TPolySeries phif = compose_tpoly(f, Phi);
        TPolySeries rhs(ctx, cap);
        for (long k = 0; k <= X.t_degree(); ++k) {
            const TruncatedSeries xf = apply(X.coefficient(k), f);
            rhs += compose_tpoly(xf, Phi).t_shifted(k);
        }
        for (long m = 0; m < cap; ++m) {
            const TruncatedSeries lhs_m = phif.coefficient(m + 1).scaled(Rational(m + 1));
            CHECK(lhs_m == rhs.coefficient(m));
        }
    }
}

TEST_CASE("isotopy evaluation") {
    const auto ctx = make_ctx({1, 2}, 8);
    const auto ydx = field(ctx, {{{"1", {0, 1}}}, {}});

    SUBCASE("flow of y d/dx at time one") {
        const auto iso = flow(TimeVectorField::constant(ydx), 5);
        const auto phi = evaluate_isotopy(iso, Rational(1));
        CHECK(phi == FormalDiffeo::create({series(ctx, {{"1", {1, 0}}, {"1", {0, 1}}}),
                                           TruncatedSeries::coordinate(ctx, 1)}));
    }

    SUBCASE("time zero returns the base slice") {
        Rng rng(44);
        const auto X = bounded_time_field(rng, ctx, 2);
        const auto iso = flow(X, 4);
        CHECK(evaluate_isotopy(iso, Rational(0)) ==
              FormalDiffeo::create(iso.time_zero_slice()));
    }

    SUBCASE("Euler flow is not evaluative") {
        const auto c1 = make_ctx({1}, 3);
        const auto iso = flow(TimeVectorField::constant(field(c1, {{{"1", {1}}}})), 6);
        CHECK_THROWS_AS(evaluate_isotopy(iso, Rational(1)), NonEvaluativeError);
    }

    SUBCASE("translation flow evaluates to a non-diffeomorphism") {
        const auto c1 = make_ctx({1}, 3);
        const auto iso = flow(TimeVectorField::constant(field(c1, {{{"1", {0}}}})), 6);
        CHECK_THROWS_AS(evaluate_isotopy(iso, Rational(1)), NonEvaluativeError);
    }
}

TEST_CASE("time vector field evaluation") {
    Rng rng(45);
    const auto ctx = make_ctx({1, 2}, 6);
    const auto Y = rng.field(ctx);
    const auto X = TimeVectorField(ctx, {VectorField::zero(ctx), Y});  // t * Y
    CHECK(evaluate_time_vf(X, Rational(2)) == Y.scaled(Rational(2)));
    CHECK(evaluate_time_vf(X, Rational(0)).is_zero());
}

TEST_CASE("inverse flow law") {
    Rng rng(46);
    const auto ctx = make_ctx({1, 2}, 8);
    const long cap = 4;
    const long compare = 8 - 2 - 2;
    for (int it = 0; it < 5; ++it) {
        const auto X = bounded_time_field(rng, ctx, 2);
        const auto phi = flow(X, cap);
        const auto psi = invert_isotopy(phi);

        // The coefficient-wise inverse isotopy is the flow of -phi_t^* X_t.
        const auto pulled = pullback_tvf(phi, X);
        std::vector<VectorField> negated;
        for (long k = 0; k <= pulled.t_degree(); ++k)
            negated.push_back(-pulled.coefficient(k));
        const auto expected = flow(TimeVectorField(ctx, std::move(negated)), cap);
        for (long k = 0; k <= cap; ++k)
            CHECK(truncate_tuple(psi.coefficient(k), compare) ==
                  truncate_tuple(expected.coefficient(k), compare));
    }
}

TEST_CASE("inverse isotopy composes to the identity") {
    Rng rng(47);
    const auto ctx = make_ctx({1, 2}, 7);
    for (int it = 0; it < 5; ++it) {
        const auto X = bounded_time_field(rng, ctx, 2);
        const auto phi = flow(X, 4);
        const auto psi = invert_isotopy(phi);
        const auto comp = compose_isotopy(psi, phi);
        CHECK(comp.coefficient(0) == identity_tuple(ctx));
        CHECK(comp.last_active_t_degree() == -1);
    }
}

TEST_CASE("time zero slices are functorial under composition") {
    Rng rng(48);
    const auto ctx = make_ctx({1, 2}, 6);
    for (int it = 0; it < 6; ++it) {
        const auto phi = flow(bounded_time_field(rng, ctx, 2), 3);
        const auto psi = flow(bounded_time_field(rng, ctx, 2), 3);
        const auto comp = compose_isotopy(psi, phi);
        const auto lhs = FormalDiffeo::create(comp.time_zero_slice());
        const auto rhs = compose_diffeo(FormalDiffeo::create(psi.time_zero_slice()),
                                        FormalDiffeo::create(phi.time_zero_slice()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("evaluation commutes with pullback") {
    Rng rng(49);
    const auto ctx = make_ctx({1, 2}, 8);
    const long compare = 8 - 2 - 2;
    for (int it = 0; it < 5; ++it) {
        const auto X = bounded_time_field(rng, ctx, 2);
        const auto phi = flow(X, 4);
        const auto pulled = pullback_tvf(phi, X);
        for (const long num : {0L, 1L}) {
            const Rational tau(num);
            const auto lhs = evaluate_time_vf(pulled, tau);
            const auto rhs = pullback_vf(evaluate_isotopy(phi, tau, EvalCertificate::OrderBound),
                                         evaluate_time_vf(X, tau));
            CHECK(truncate_field(lhs, compare) == truncate_field(rhs, compare));
        }
    }
}

TEST_CASE("determinant of the isotopy Jacobian is constant in t") {
    Rng rng(50);
    const auto ctx = make_ctx({1, 2, 2}, 6);
    for (int it = 0; it < 5; ++it) {
        const auto X = bounded_time_field(rng, ctx, 1);
        const auto iso = flow(X, 4, true);
        const auto det = det_jacobian_at_zero_tpoly(iso);
        CHECK(det[0] == Rational(1));
        for (std::size_t k = 1; k < det.size(); ++k) CHECK(det[k].is_zero());
    }
}

TEST_SUITE_END();
