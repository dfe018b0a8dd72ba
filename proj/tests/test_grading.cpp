#include <doctest.h>

#include <functional>

#include <set>

#include "support/builders.hpp"
#include "wlin/errors.hpp"
#include "wlin/grading.hpp"

using namespace wlin;
using namespace wtest;

TEST_SUITE_BEGIN("grading");

TEST_CASE("graded components of the quadratic example") {
    const auto ctx = make_ctx({1, 2}, 10);
    const auto X = field(ctx, {{{"1", {1, 0}}, {"1", {0, 2}}}, {{"2", {0, 1}}}});
    CHECK(graded_component_vf(X, 0) == field(ctx, {{{"1", {1, 0}}}, {{"2", {0, 1}}}}));
    CHECK(graded_component_vf(X, 3) == field(ctx, {{{"1", {0, 2}}}, {}}));
    for (long k : {1L, 2L, 4L}) CHECK(graded_component_vf(X, k).is_zero());
    CHECK(graded_component_vf(X, -3).is_zero());  // below the grading floor

    SUBCASE("slices sum back to the field") {
        Rng rng(61);
        for (int it = 0; it < 10; ++it) {
            const auto Y = rng.field(ctx);
            VectorField total = VectorField::zero(ctx);
            for (long k = -ctx.weights().max(); k <= ctx.cutoff(); ++k)
                total += graded_component_vf(Y, k);
            CHECK(total == Y);
        }
    }
}

TEST_CASE("admissibility") {
    const auto ctx = make_ctx({1, 2}, 8);
    CHECK(is_admissible(field(ctx, {{{"1", {1, 0}}, {"1", {0, 1}}}, {{"2", {0, 1}}}}))
              .admissible);

    // x d/dy has weighted degree 1 - 2 < 0.
    const auto report = is_admissible(field(ctx, {{}, {{"1", {1, 0}}}}));
    CHECK_FALSE(report.admissible);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->axis == 1);
    CHECK(report.witness->alpha == mi({1, 0}));

    SUBCASE("diagonal linear fields are admissible for every weighting") {
        for (auto w : {std::vector<int>{1, 1}, {1, 2}, {2, 3}}) {
            const auto c = make_ctx(w, 6);
            auto diag = field(c, {{{"5", {1, 0}}}, {{"-7", {0, 1}}}});
            CHECK(is_admissible(diag).admissible);
        }
    }
}

TEST_CASE("weighted linear approximation") {
    const auto ctx = make_ctx({1, 2}, 10);
    const auto euler = euler_field(ctx);
    for (std::uint32_t m : {1u, 2u, 3u}) {
        const auto X = field(ctx, {{{"1", {1, 0}}, {"1", {0, m}}}, {{"2", {0, 1}}}});
        CHECK(weighted_linear_approximation(X) == euler);
    }
    CHECK(weighted_linear_approximation(euler) == euler);
}

TEST_CASE("weighted Euler field") {
    const auto ctx = make_ctx({1, 2}, 6);
    CHECK(euler_field(ctx) == field(ctx, {{{"1", {1, 0}}}, {{"2", {0, 1}}}}));

    const auto trivial = make_ctx({1, 1}, 6);
    CHECK(euler_field(trivial) == field(trivial, {{{"1", {1, 0}}}, {{"1", {0, 1}}}}));

    SUBCASE("monomials are eigenvectors") {
        Rng rng(62);
        const auto c = make_ctx({2, 3}, 12);
        const auto E = euler_field(c);
        for (int it = 0; it < 15; ++it) {
            const auto alpha = rng.index_with_degree_at_most(c, c.cutoff());
            const auto xa = TruncatedSeries::monomial(c, alpha, Rational(1));
            CHECK(apply(E, xa) == xa.scaled(Rational(weighted_degree(alpha, c.weights()))));
        }
    }
}

TEST_CASE("weighted Euler-like detection") {
    const auto ctx = make_ctx({1, 2}, 8);
    CHECK(is_weighted_euler_like(
        field(ctx, {{{"1", {1, 0}}, {"1", {0, 2}}}, {{"2", {0, 1}}}})));
    CHECK(is_weighted_euler_like(euler_field(ctx)));
    // x d/dx + (x^2 + 4y) d/dy has off-Euler terms in degree 0.
    CHECK_FALSE(is_weighted_euler_like(
        field(ctx, {{{"1", {1, 0}}}, {{"1", {2, 0}}, {"4", {0, 1}}}})));
}

TEST_CASE("slice bases") {
    SUBCASE("w = (1,2), k = 1") {
        const auto basis = slice_basis(Weighting({1, 2}), 1);
        CHECK(basis.size() == 4);
        CHECK(slice_dimension(Weighting({1, 2}), 1) == 4);
        CHECK(basis.index_of(0, mi({2, 0})).has_value());
        CHECK(basis.index_of(0, mi({0, 1})).has_value());
        CHECK(basis.index_of(1, mi({3, 0})).has_value());
        CHECK(basis.index_of(1, mi({1, 1})).has_value());
    }

    SUBCASE("w = (2,3), k = 1") {
        const auto basis = slice_basis(Weighting({2, 3}), 1);
        CHECK(basis.size() == 2);
        CHECK(basis.index_of(0, mi({0, 1})).has_value());
        CHECK(basis.index_of(1, mi({2, 0})).has_value());
    }

    SUBCASE("grading floor") {
        CHECK(slice_dimension(Weighting({1, 2}), -3) == 0);
        CHECK(slice_dimension(Weighting({2, 3}), -4) == 0);
    }

    SUBCASE("order is strict and total") {
        const auto basis = slice_basis(Weighting({1, 2, 2}), 2);
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                const auto& ea = basis.element(a);
                const auto& eb = basis.element(b);
                CHECK((ea.axis != eb.axis || ea.alpha != eb.alpha));
                // Sorted: decreasing |alpha|, then decreasing axis, then
                // decreasing lex.
                const bool ordered =
                    ea.alpha.total_degree() > eb.alpha.total_degree() ||
                    (ea.alpha.total_degree() == eb.alpha.total_degree() &&
                     (ea.axis > eb.axis ||
                      (ea.axis == eb.axis && lex_less(eb.alpha, ea.alpha))));
                CHECK(ordered);
            }
    }

    SUBCASE("exhaustive enumeration oracle") {
        // Brute force over a box: every exponent is at most (w_i + k) / 1.
        for (auto wv : {std::vector<int>{1, 2}, {2, 3}, {1, 2, 3}}) {
            const Weighting w(wv);
            for (long k = -w.max(); k <= 5; ++k) {
                std::set<std::pair<std::size_t, std::vector<std::uint32_t>>> expected;
                for (std::size_t i = 0; i < w.size(); ++i) {
                    const long target = w[i] + k;
                    if (target < 0) continue;
                    std::vector<std::uint32_t> e(w.size(), 0);
                    const std::uint32_t box = static_cast<std::uint32_t>(target) + 1;
                    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
                        if (pos == w.size()) {
                            if (weighted_degree(MultiIndex(e), w) == target)
                                expected.insert({i, e});
                            return;
                        }
                        for (e[pos] = 0; e[pos] < box; ++e[pos]) walk(pos + 1);
                        e[pos] = 0;
                    };
                    walk(0);
                }
                const auto basis = slice_basis(w, k);
                CHECK(basis.size() == expected.size());
                for (const auto& el : basis.elements())
                    CHECK(expected.count({el.axis, el.alpha.exponents()}) == 1);
            }
        }
    }
}

TEST_CASE("kappa family") {
    const auto ctx = make_ctx({1, 2}, 10);
    const auto X = field(ctx, {{{"1", {1, 0}}, {"1", {0, 2}}}, {{"2", {0, 1}}}});

    const auto kappa = kappa_family(X);
    CHECK(kappa.coefficient(0) == field(ctx, {{{"1", {1, 0}}}, {{"2", {0, 1}}}}));
    CHECK(kappa.coefficient(1).is_zero());
    CHECK(kappa.coefficient(2).is_zero());
    CHECK(kappa.coefficient(3) == field(ctx, {{{"1", {0, 2}}}, {}}));
    CHECK(kappa.t_degree() == 3);

    CHECK(evaluate_time_vf(kappa, Rational(1)) == X);
    CHECK(evaluate_time_vf(kappa, Rational(0)) == weighted_linear_approximation(X));

    SUBCASE("Euler field has a single slice") {
        const auto kE = kappa_family(euler_field(ctx));
        CHECK(kE.t_degree() == 0);
        CHECK(kE.coefficient(0) == euler_field(ctx));
    }

    SUBCASE("non-admissible input is rejected with a witness") {
        const auto bad = field(ctx, {{}, {{"1", {1, 0}}}});
        CHECK_THROWS_AS(kappa_family(bad), NotAdmissibleError);
        try {
            kappa_family(bad);
        } catch (const NotAdmissibleError& e) {
            CHECK(e.axis() == 1);
            CHECK(e.exponents() == std::vector<unsigned>{1, 0});
        }
    }

    SUBCASE("trivial weighting recovers the homogeneous decomposition") {
        Rng rng(63);
        const auto c = make_ctx({1, 1}, 6);
        for (int it = 0; it < 8; ++it) {
            const auto Y = rng.admissible_field(c);
            const auto k = kappa_family(Y);
            for (long d = 0; d <= k.t_degree(); ++d) {
                for (std::size_t i = 0; i < 2; ++i)
                    for (const auto& [alpha, coef] : k.coefficient(d).component(i).terms())
                        CHECK(static_cast<long>(alpha.total_degree()) == d + 1);
            }
        }
    }
}

TEST_CASE("grading respects brackets") {
    Rng rng(64);
    const auto ctx = make_ctx({1, 2}, 12);
    for (int it = 0; it < 15; ++it) {
        const long j = rng.integer(0, 3), k = rng.integer(0, 3);
        const auto P = rng.slice_element(ctx, j);
        const auto Q = rng.slice_element(ctx, k);
        const auto B = lie_bracket(P, Q);
        CHECK(graded_component_vf(B, j + k) == B);
    }
}

TEST_CASE("Euler eigenvalue characterization of slices") {
    Rng rng(65);
    const auto ctx = make_ctx({1, 2}, 12);
    const auto E = euler_field(ctx);
    for (int it = 0; it < 15; ++it) {
        const long k = rng.integer(0, 4);
        const auto X = rng.slice_element(ctx, k);
        // Slice membership gives the eigenvalue equation.
        CHECK(lie_bracket(E, X) == X.scaled(Rational(k)));
    }
    // Conversely a mixed field fails the eigenvalue equation for every k.
    const auto mixed = field(ctx, {{{"1", {1, 0}}, {"1", {0, 2}}}, {}});
    for (long k = 0; k <= 4; ++k)
        CHECK(lie_bracket(E, mixed) != mixed.scaled(Rational(k)));
}

TEST_SUITE_END();
