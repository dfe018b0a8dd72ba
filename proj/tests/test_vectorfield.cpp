#include <doctest.h>

#include "support/builders.hpp"
#include "wlin/grading.hpp"

using namespace wlin;
using namespace wtest;

TEST_SUITE_BEGIN("vectorfield");

TEST_CASE("derivation action") {
    const auto ctx = make_ctx({1, 2}, 8);
    const auto X = field(ctx, {{{"1", {1, 0}}}, {{"2", {0, 1}}}});  // x d/dx + 2y d/dy
    const auto f = series(ctx, {{"1", {1, 0}}, {"-1", {0, 1}}});
    CHECK(apply(X, f) == series(ctx, {{"1", {1, 0}}, {"-2", {0, 1}}}));

    CHECK(apply(X, TruncatedSeries::constant(ctx, Rational(1))).is_zero());

    const auto ctx23 = make_ctx({2, 3}, 9);
    const auto euler = euler_field(ctx23);
    const auto xy = series(ctx23, {{"1", {1, 1}}});
    CHECK(apply(euler, xy) == series(ctx23, {{"5", {1, 1}}}));
}

TEST_CASE("lie bracket") {
    const auto ctx = make_ctx({2, 3}, 12);
    const auto euler = euler_field(ctx);
    const auto xy_dy = field(ctx, {{}, {{"1", {1, 1}}}});
    CHECK(lie_bracket(euler, xy_dy) == field(ctx, {{}, {{"2", {1, 1}}}}));

    SUBCASE("antisymmetry on random fields") {
        Rng rng(21);
        const auto c = make_ctx({1, 2}, 6);
        for (int it = 0; it < 20; ++it) {
            const auto X = rng.field(c);
            CHECK(lie_bracket(X, X).is_zero());
        }
    }

    SUBCASE("hand-computed rotation bracket") {
        const auto c = make_ctx({1, 1}, 5);
        const auto ydx = field(c, {{{"1", {0, 1}}}, {}});
        const auto xdy = field(c, {{}, {{"1", {1, 0}}}});
        CHECK(lie_bracket(ydx, xdy) ==
              field(c, {{{"-1", {1, 0}}}, {{"1", {0, 1}}}}));
    }
}

TEST_CASE("jacobian") {
    const auto ctx = make_ctx({1, 2}, 6);
    const SeriesTuple phi = {series(ctx, {{"1", {1, 0}}, {"1/3", {0, 2}}}),
                             TruncatedSeries::coordinate(ctx, 1)};
    CHECK(jacobian_at_zero(phi) == RationalMatrix::identity(2));

    const auto id = identity_tuple(ctx);
    const auto J = jacobian(id);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(J[i][j] == TruncatedSeries::constant(ctx, Rational(i == j ? 1 : 0)));

    // phi_t(x) = x(1 - t) at the fixed rational time t = 2.
    const auto c1 = make_ctx({1}, 4);
    const SeriesTuple scaled = {series(c1, {{"-1", {1}}})};
    CHECK(jacobian_at_zero(scaled)(0, 0) == Rational(-1));
}

TEST_CASE("formal diffeomorphism check") {
    const auto c1 = make_ctx({1}, 4);
    const auto shifted = SeriesTuple{series(c1, {{"1", {0}}, {"1", {1}}})};  // x + 1
    CHECK_FALSE(is_formal_diffeo(shifted).ok);

    const auto ctx = make_ctx({1, 1}, 4);
    CHECK_FALSE(is_formal_diffeo(SeriesTuple{TruncatedSeries(ctx), TruncatedSeries(ctx)}).ok);

    CHECK(is_formal_diffeo(SeriesTuple{series(ctx, {{"1", {1, 0}}, {"1", {0, 1}}}),
                                       TruncatedSeries::coordinate(ctx, 1)})
              .ok);
}

TEST_CASE("diffeo composition") {
    const auto ctx = make_ctx({1, 1}, 6);
    const auto id = FormalDiffeo::identity(ctx);
    const auto phi = FormalDiffeo::create({series(ctx, {{"1", {1, 0}}, {"1", {0, 1}}}),
                                           TruncatedSeries::coordinate(ctx, 1)});
    const auto psi = FormalDiffeo::create({series(ctx, {{"1", {1, 0}}, {"-1", {0, 1}}}),
                                           TruncatedSeries::coordinate(ctx, 1)});
    CHECK(compose_diffeo(id, phi) == phi);
    CHECK(compose_diffeo(phi, id) == phi);
    CHECK(compose_diffeo(psi, phi) == id);
}

TEST_CASE("diffeo inversion") {
    const auto ctx = make_ctx({1, 1}, 6);
    const auto phi = FormalDiffeo::create({series(ctx, {{"1", {1, 0}}, {"1", {0, 1}}}),
                                           TruncatedSeries::coordinate(ctx, 1)});
    CHECK(invert_diffeo(phi) ==
          FormalDiffeo::create({series(ctx, {{"1", {1, 0}}, {"-1", {0, 1}}}),
                                TruncatedSeries::coordinate(ctx, 1)}));

    const auto c1 = make_ctx({1}, 4);
    CHECK(invert_diffeo(FormalDiffeo::create({series(c1, {{"2", {1}}})})) ==
          FormalDiffeo::create({series(c1, {{"1/2", {1}}})}));

    const auto c12 = make_ctx({1, 2}, 8);
    const auto u = FormalDiffeo::create({series(c12, {{"1", {1, 0}}, {"-1/3", {0, 2}}}),
                                         TruncatedSeries::coordinate(c12, 1)});
    CHECK(invert_diffeo(u) ==
          FormalDiffeo::create({series(c12, {{"1", {1, 0}}, {"1/3", {0, 2}}}),
                                TruncatedSeries::coordinate(c12, 1)}));

    SUBCASE("two-sided identity for weight-respecting diffeos") {
        Rng rng(31);
        const auto c = make_ctx({1, 2}, 6);
        const auto id = FormalDiffeo::identity(c);
        for (int it = 0; it < 12; ++it) {
            const auto f = rng.diffeo(c);
            const auto g = invert_diffeo(f);
            CHECK(compose_diffeo(g, f) == id);
            CHECK(compose_diffeo(f, g) == id);
        }
    }
}

TEST_CASE("pullback of vector fields") {
    const auto ctx = make_ctx({1, 2}, 10);
    const auto euler = euler_field(ctx);

    SUBCASE("quadratic example") {
        const auto phi = FormalDiffeo::create({series(ctx, {{"1", {1, 0}}, {"1/3", {0, 2}}}),
                                               TruncatedSeries::coordinate(ctx, 1)});
        const auto X = field(ctx, {{{"1", {1, 0}}, {"1", {0, 2}}}, {{"2", {0, 1}}}});
        CHECK(pullback_vf(phi, X) == euler);
    }

    SUBCASE("linear example removes the mixed term") {
        const auto phi = FormalDiffeo::create({series(ctx, {{"1", {1, 0}}, {"1", {0, 1}}}),
                                               TruncatedSeries::coordinate(ctx, 1)});
        const auto X = field(ctx, {{{"1", {1, 0}}, {"1", {0, 1}}}, {{"2", {0, 1}}}});
        CHECK(pullback_vf(phi, X) == euler);
    }

    SUBCASE("identity pullback") {
        Rng rng(32);
        for (int it = 0; it < 10; ++it) {
            const auto X = rng.field(ctx);
            CHECK(pullback_vf(FormalDiffeo::identity(ctx), X) == X);
        }
    }
}

TEST_CASE("pullback of functions") {
    const auto ctx = make_ctx({1, 2}, 8);
    Rng rng(33);
    const auto phi = rng.diffeo(ctx);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(pullback_function(phi, TruncatedSeries::coordinate(ctx, i)) == phi.component(i));
    const auto c = TruncatedSeries::constant(ctx, Rational(5, 7));
    CHECK(pullback_function(phi, c) == c);
}

TEST_CASE("pullback intertwines the derivation action") {
    // (phi^* X)(phi^* f) = phi^*(X f), compared below both fields' guarantee.
    Rng rng(34);
    const auto work = make_ctx({1, 2}, 8);
    const long compare = 8 - 2;
    for (int it = 0; it < 10; ++it) {
        const auto phi = rng.diffeo(work);
        const auto X = rng.admissible_field(work);
        const auto f = rng.series(work);
        const auto lhs = apply(pullback_vf(phi, X), pullback_function(phi, f));
        const auto rhs = pullback_function(phi, apply(X, f));
        CHECK(lhs.truncated_to_degree(compare) == rhs.truncated_to_degree(compare));
    }
}

TEST_CASE("Leibniz rule") {
    Rng rng(35);
    const auto ctx = make_ctx({1, 1, 2}, 6);
    const long compare = 6 - 2;  // derivative loss: exact modulo the padded cutoff
    for (int it = 0; it < 50; ++it) {
        const auto X = rng.field(ctx);
        const auto f = rng.series(ctx), g = rng.series(ctx);
        const auto lhs = apply(X, f * g);
        const auto rhs = apply(X, f) * g + f * apply(X, g);
        CHECK(lhs.truncated_to_degree(compare) == rhs.truncated_to_degree(compare));
    }
}

TEST_CASE("Jacobi identity") {
    Rng rng(36);
    const auto ctx = make_ctx({1, 2, 2}, 6);
    for (int it = 0; it < 25; ++it) {
        const auto X = rng.admissible_field(ctx, 3);
        const auto Y = rng.admissible_field(ctx, 3);
        const auto Z = rng.admissible_field(ctx, 3);
        const auto total = lie_bracket(X, lie_bracket(Y, Z)) +
                           lie_bracket(Y, lie_bracket(Z, X)) +
                           lie_bracket(Z, lie_bracket(X, Y));
        CHECK(total.is_zero());
    }
}

TEST_CASE("pullback functoriality") {
    Rng rng(37);
    const auto work = make_ctx({1, 2}, 9);
    const long compare = 9 - 2 - 2;  // two pullbacks, each may cost w_max
    for (int it = 0; it < 8; ++it) {
        const auto phi = rng.diffeo(work);
        const auto psi = rng.diffeo(work);
        const auto X = rng.admissible_field(work);
        const auto lhs = pullback_vf(compose_diffeo(psi, phi), X);
        const auto rhs = pullback_vf(phi, pullback_vf(psi, X));
        CHECK(truncate_field(lhs, compare) == truncate_field(rhs, compare));
    }
}

TEST_SUITE_END();
