#include <doctest.h>

#include "support/builders.hpp"
#include "wlin/adjoint.hpp"
#include "wlin/spectral.hpp"

using namespace wlin;
using namespace wtest;

namespace {

VectorField five_var_linear(const SeriesContext& ctx) {
    // x d/dx + (4y+z) d/dy - 4y d/dz + (4u-v) d/du + (u+2v) d/dv
    return field(ctx, {
        {{"1", {1, 0, 0, 0, 0}}},
        {{"4", {0, 1, 0, 0, 0}}, {"1", {0, 0, 1, 0, 0}}},
        {{"-4", {0, 1, 0, 0, 0}}},
        {{"4", {0, 0, 0, 1, 0}}, {"-1", {0, 0, 0, 0, 1}}},
        {{"1", {0, 0, 0, 1, 0}}, {"2", {0, 0, 0, 0, 1}}},
    });
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("linear part of the five-variable example") {
    const auto ctx = make_ctx({1, 2, 2, 3, 3}, 4);
    const auto lp = weighted_linear_part(five_var_linear(ctx));
    CHECK(is_block_diagonal(lp));
    CHECK(lp.blocks.distinct == 3);
    CHECK(lp.blocks.sizes == std::vector<std::size_t>{1, 2, 2});

    CHECK(char_poly(block_submatrix(lp, 0)) == Polynomial({Rational(-1), Rational(1)}));
    // (t-2)^2 and (t-3)^2
    CHECK(char_poly(block_submatrix(lp, 1)) ==
          Polynomial({Rational(4), Rational(-4), Rational(1)}));
    CHECK(char_poly(block_submatrix(lp, 2)) ==
          Polynomial({Rational(9), Rational(-6), Rational(1)}));
}

TEST_CASE("linear part requires a vanishing constant term") {
    const auto ctx = make_ctx({1, 2}, 4);
    const auto X = field(ctx, {{{"1", {0, 0}}, {"1", {1, 0}}}, {{"2", {0, 1}}}});
    CHECK_THROWS_AS(linear_part(X), std::invalid_argument);
}

TEST_CASE("linear part of the Euler field is diagonal") {
    const auto ctx = make_ctx({1, 2, 2}, 4);
    const auto lp = linear_part(euler_field(ctx));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(lp.matrix(i, j) == (i == j ? Rational(ctx.weights()[i]) : Rational(0)));
}

TEST_CASE("weighted and unweighted linear approximations commute") {
    Rng rng(91);
    const auto ctx = make_ctx({1, 2, 3}, 6);
    for (int it = 0; it < 100; ++it) {
        const auto X = rng.admissible_field(ctx);
        // weighted_linear_part asserts the commutation internally.
        const auto lp = weighted_linear_part(X);
        CHECK(is_block_diagonal(lp));
        // Spectrum invariance: characteristic polynomials agree.
        CHECK(char_poly(lp) == char_poly(linear_part(X)));
    }
}

TEST_CASE("compatible ordering") {
    SUBCASE("five-variable example") {
        const auto ctx = make_ctx({1, 2, 2, 3, 3}, 4);
        const auto ordering = compatible_ordering(weighted_linear_part(five_var_linear(ctx)));
        REQUIRE(ordering.supported);
        const std::vector<Rational> expected = {Rational(1), Rational(2), Rational(2),
                                                Rational(3), Rational(3)};
        CHECK(ordering.lambda == expected);
    }

    SUBCASE("Euler field returns the weights") {
        const auto ctx = make_ctx({1, 2, 2}, 4);
        const auto ordering = compatible_ordering(weighted_linear_part(euler_field(ctx)));
        REQUIRE(ordering.supported);
        CHECK(ordering.lambda ==
              std::vector<Rational>{Rational(1), Rational(2), Rational(2)});
    }

    SUBCASE("irrational block is unsupported with its factor") {
        // Components x' = 2y, y' = x: characteristic polynomial t^2 - 2.
        const auto ctx = make_ctx({1, 1}, 4);
        const auto X = field(ctx, {{{"2", {0, 1}}}, {{"1", {1, 0}}}});
        const auto ordering = compatible_ordering(weighted_linear_part(X));
        CHECK_FALSE(ordering.supported);
        REQUIRE(ordering.unresolved.size() == 1);
        CHECK(ordering.unresolved[0].monic() ==
              Polynomial({Rational(-2), Rational(0), Rational(1)}));
    }
}

TEST_CASE("exact resonance enumeration") {
    SUBCASE("lambda = (1,2) under the trivial weighting") {
        const auto report =
            enumerate_resonances({Rational(1), Rational(2)}, Weighting({1, 1}), 2);
        CHECK(report.exact);
        REQUIRE(report.resonances.size() == 1);
        CHECK(report.resonances[0].axis == 1);
        CHECK(report.resonances[0].alpha == mi({2, 0}));
        CHECK(report.resonances[0].degree == 1);
    }

    SUBCASE("lambda = w kills all resonances") {
        CHECK(enumerate_resonances({Rational(1), Rational(2)}, Weighting({1, 2}), 8)
                  .resonances.empty());
        CHECK(enumerate_resonances(
                  {Rational(1), Rational(2), Rational(2), Rational(3), Rational(3)},
                  Weighting({1, 2, 2, 3, 3}), 12)
                  .resonances.empty());
    }

    SUBCASE("zero eigenvalue forces (j, 2e_j)") {
        const auto report =
            enumerate_resonances({Rational(0), Rational(3)}, Weighting({1, 2}), 2);
        bool found = false;
        for (const auto& r : report.resonances)
            found |= (r.axis == 0 && r.alpha == mi({2, 0}));
        CHECK(found);
    }
}

TEST_CASE("heuristic resonance report for irrational spectra") {
    const auto ctx = make_ctx({1, 1}, 4);
    const auto X = field(ctx, {{{"2", {0, 1}}}, {{"1", {1, 0}}}});  // eigenvalues +-sqrt(2)
    const auto report = enumerate_resonances_heuristic(weighted_linear_part(X), 4);
    CHECK_FALSE(report.exact);
    CHECK(report.tolerance == doctest::Approx(1e-9));
    // sqrt(2) = 2 sqrt(2) + 1 (-sqrt(2)): the pair (1, alpha=(2,1)) resonates
    // at degree 2.
    bool found = false;
    for (const auto& r : report.resonances)
        found |= (r.alpha == mi({2, 1})) || (r.alpha == mi({1, 2}));
    CHECK(found);
}

TEST_CASE("exact hyperbolicity") {
    // (t-1)(t-2)^2(t-3)^2
    const Polynomial p = Polynomial({Rational(-1), Rational(1)}) *
                         Polynomial({Rational(4), Rational(-4), Rational(1)}) *
                         Polynomial({Rational(9), Rational(-6), Rational(1)});
    CHECK(is_hyperbolic(p));
    CHECK_FALSE(is_hyperbolic(Polynomial({Rational(1), Rational(0), Rational(1)})));  // t^2+1
    CHECK_FALSE(is_hyperbolic(Polynomial({Rational(0), Rational(-1), Rational(1)})));  // t(t-1)

    SUBCASE("mixed spectra") {
        // (t^2 + 1)(t - 5): purely imaginary pair.
        CHECK_FALSE(is_hyperbolic(Polynomial({Rational(1), Rational(0), Rational(1)}) *
                                  Polynomial({Rational(-5), Rational(1)})));
        // (t^2 - 2)(t + 1): real irrational roots, no imaginary part.
        CHECK(is_hyperbolic(Polynomial({Rational(-2), Rational(0), Rational(1)}) *
                            Polynomial({Rational(1), Rational(1)})));
        // (t^2 + 2t + 2): roots -1 +- i, hyperbolic.
        CHECK(is_hyperbolic(Polynomial({Rational(2), Rational(2), Rational(1)})));
    }
}

TEST_CASE("Sturm counts match a grid-isolation brute force") {
    Rng rng(92);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        std::vector<Rational> coeffs;
        const long deg = rng.integer(1, 6);
        for (long k = 0; k <= deg; ++k) coeffs.push_back(Rational(rng.integer(-5, 5)));
        Polynomial p(std::move(coeffs));
        if (p.degree() < 1) continue;
        const Polynomial sf = squarefree_part(p);

        // Cauchy bound, then sign scans at halving steps until stable.
        Rational bound(1);
        for (long k = 0; k < sf.degree(); ++k) {
            const Rational q =
                (sf.coefficient(static_cast<std::size_t>(k)) / sf.leading()).abs();
            if (q > bound) bound = q;
        }
        bound += Rational(1);
        auto grid_count = [&](long steps) {
            int count = 0;
            Rational prev = sf.evaluate(-bound);
            for (long s = 1; s <= steps; ++s) {
                const Rational t =
                    -bound + (bound + bound) * Rational(s) / Rational(steps);
                const Rational val = sf.evaluate(t);
                if (val.is_zero()) {
                    ++count;  // grid point hits a root exactly
                    prev = val;
                    continue;
                }
                if (!prev.is_zero() && prev.sign() != val.sign()) ++count;
                prev = val;
            }
            return count;
        };
        long steps = 64;
        int a = grid_count(steps), b = grid_count(steps * 2);
        while (a != b && steps < (1 << 14)) {
            steps *= 2;
            a = b;
            b = grid_count(steps * 2);
        }
        CHECK(count_real_roots(p) == b);
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("resonance and adjoint invertibility are dual") {
    Rng rng(93);
    for (int it = 0; it < 20; ++it) {
        const std::vector<int> wv = (it % 2 == 0) ? std::vector<int>{1, 2} : std::vector<int>{1, 1};
        const auto ctx = make_ctx(wv, 14);
        std::vector<Rational> lambda;
        SeriesTuple comps;
        for (std::size_t i = 0; i < 2; ++i) {
            lambda.push_back(Rational(rng.integer(-3, 3)));
            comps.push_back(TruncatedSeries::coordinate(ctx, i).scaled(lambda.back()));
        }
        const VectorField X0(ctx, std::move(comps));
        for (long k = 1; k <= 6; ++k) {
            const auto report = enumerate_resonances(lambda, ctx.weights(), k);
            bool resonant_at_k = false;
            for (const auto& r : report.resonances) resonant_at_k |= (r.degree == k);
            const auto inv = is_adjoint_invertible(adjoint_matrix(X0, k));
            CHECK(inv.invertible == !resonant_at_k);
        }
    }
}

TEST_CASE("nonresonance and hyperbolicity consistency") {
    const auto ctx = make_ctx({1, 2, 2, 3, 3}, 4);
    CHECK(nonresonance_implies_hyperbolic_check(five_var_linear(ctx), 6).consistent);

    const auto c12 = make_ctx({1, 2}, 4);
    CHECK(nonresonance_implies_hyperbolic_check(euler_field(c12), 6).consistent);

    // A zero eigenvalue must be witnessed by a resonance.
    const auto zero_field = field(c12, {{}, {{"1", {0, 1}}}});
    CHECK(nonresonance_implies_hyperbolic_check(zero_field, 6).consistent);
}

TEST_SUITE_END();
