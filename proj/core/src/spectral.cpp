#include "wlin/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wlin {
namespace {

RationalMatrix transpose_jacobian_at_zero(const VectorField& X) {
    const std::size_t n = X.context().dimension();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(j, i) = X.component(i).coefficient(MultiIndex::unit(n, j));
    return m;
}

}  // namespace

LinearPart linear_part(const VectorField& X) {
    if (!X.vanishes_at_origin())
        throw std::invalid_argument("linear_part: field does not vanish at the origin");
    return LinearPart{transpose_jacobian_at_zero(X), block_structure(X.context().weights()),
                      X.context().weights()};
}

LinearPart weighted_linear_part(const VectorField& X) {
    if (!X.vanishes_at_origin())
        throw std::invalid_argument("weighted_linear_part: field does not vanish at the origin");
    // Slice-then-linearize ...
    const VectorField X0 = weighted_linear_approximation(X);
    LinearPart lp = linear_part(X0);
    // ... must agree with linearize-then-slice.
    const std::size_t n = X.context().dimension();
    RationalMatrix other(n, n);
    const LinearPart unweighted = linear_part(X);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            // Keep x^i -> x^j entries with w_i = w_j (weighted degree 0 of
            // the monomial x^j d/dx^i ... transposed indices).
            other(i, j) = (X.context().weights()[i] == X.context().weights()[j])
                              ? unweighted.matrix(i, j)
                              : Rational(0);
        }
    if (!(other == lp.matrix))
        throw std::logic_error(
            "weighted_linear_part: slice/linearize orders disagree (commutation violated)");
    return lp;
}

RationalMatrix block_submatrix(const LinearPart& lp, std::size_t ell) {
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < lp.blocks.block_of.size(); ++i)
        if (lp.blocks.block_of[i] == ell) axes.push_back(i);
    RationalMatrix b(axes.size(), axes.size());
    for (std::size_t r = 0; r < axes.size(); ++r)
        for (std::size_t c = 0; c < axes.size(); ++c) b(r, c) = lp.matrix(axes[r], axes[c]);
    return b;
}

bool is_block_diagonal(const LinearPart& lp) {
    const std::size_t n = lp.blocks.block_of.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lp.blocks.block_of[i] != lp.blocks.block_of[j] && !lp.matrix(i, j).is_zero())
                return false;
    return true;
}

Polynomial char_poly(const LinearPart& lp) { return char_poly(lp.matrix); }

CompatibleOrdering compatible_ordering(const LinearPart& lp) {
    if (!is_block_diagonal(lp))
        throw std::invalid_argument(
            "compatible_ordering: weighted linear part is not block diagonal");
    CompatibleOrdering out;
    std::vector<std::vector<Rational>> per_block;
    bool supported = true;
    for (std::size_t ell = 0; ell < lp.blocks.distinct; ++ell) {
        const Polynomial p = char_poly(block_submatrix(lp, ell));
        RationalRoots roots = rational_roots(p);
        std::vector<Rational> lambda;
        for (const auto& [root, mult] : roots.roots)
            for (int m = 0; m < mult; ++m) lambda.push_back(root);
        if (roots.cofactor.degree() > 0) {
            supported = false;
            out.unresolved.push_back(roots.cofactor);
        }
        std::sort(lambda.begin(), lambda.end());
        per_block.push_back(std::move(lambda));
    }
    out.supported = supported;
    if (supported) {
        std::vector<std::size_t> used(lp.blocks.distinct, 0);
        for (std::size_t i = 0; i < lp.blocks.block_of.size(); ++i) {
            const std::size_t ell = lp.blocks.block_of[i];
            out.lambda.push_back(per_block[ell][used[ell]++]);
        }
    }
    return out;
}

ResonanceReport enumerate_resonances(const std::vector<Rational>& lambda, const Weighting& w,
                                     long k_max) {
    if (lambda.size() != w.size())
        throw std::invalid_argument("enumerate_resonances: lambda length mismatch");
    ResonanceReport report{w, {}, {}, true, 0.0};
    for (const auto& l : lambda) report.lambda.push_back(l.str());
    for (long k = 1; k <= k_max; ++k) {
        const GradedSliceBasis basis = slice_basis(w, k);
        for (const auto& el : basis.elements()) {
            Rational dot(0);
            for (std::size_t j = 0; j < w.size(); ++j)
                dot += lambda[j] * Rational(static_cast<long>(el.alpha[j]));
            if (dot == lambda[el.axis]) report.resonances.push_back({el.axis, el.alpha, k});
        }
    }
    return report;
}

ResonanceReport enumerate_resonances_heuristic(const LinearPart& lp, long k_max) {
    constexpr double kTol = 1e-9;
    const Weighting& w = lp.weighting;
    const std::size_t n = w.size();

    // Per-block eigenvalues at double precision, assigned to the block's
    // axes in a deterministic order.
    std::vector<std::complex<double>> lambda(n);
    std::size_t axis = 0;
    for (std::size_t ell = 0; ell < lp.blocks.distinct; ++ell) {
        const RationalMatrix b = block_submatrix(lp, ell);
        Eigen::MatrixXd m(b.rows(), b.cols());
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    b(i, j).to_double();
        Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
        std::vector<std::complex<double>> ev;
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
            ev.push_back(solver.eigenvalues()[i]);
        std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        for (const auto& v : ev) lambda[axis++] = v;
    }

    ResonanceReport report{w, {}, {}, false, kTol};
    for (const auto& l : lambda) {
        std::ostringstream os;
        os << l.real();
        if (std::abs(l.imag()) > kTol) os << (l.imag() < 0 ? "" : "+") << l.imag() << "i";
        report.lambda.push_back(os.str());
    }
    for (long k = 1; k <= k_max; ++k) {
        const GradedSliceBasis basis = slice_basis(w, k);
        for (const auto& el : basis.elements()) {
            std::complex<double> dot(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                dot += lambda[j] * static_cast<double>(el.alpha[j]);
            if (std::abs(dot - lambda[el.axis]) < kTol)
                report.resonances.push_back({el.axis, el.alpha, k});
        }
    }
    return report;
}

bool is_hyperbolic(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_hyperbolic: zero polynomial");
    if (p.evaluate(Rational(0)).is_zero()) return false;  // zero eigenvalue

    // p(it) = A(t) + i B(t): a purely imaginary root i*theta corresponds to
    // a common real root theta of A and B.
    std::vector<Rational> a, b;
    for (long k = 0; k <= p.degree(); ++k) {
        const Rational c = p.coefficient(static_cast<std::size_t>(k));
        const int rem = static_cast<int>(k % 4);
        switch (rem) {
            case 0: a.push_back(c); b.push_back(Rational(0)); break;
            case 1: a.push_back(Rational(0)); b.push_back(c); break;
            case 2: a.push_back(-c); b.push_back(Rational(0)); break;
            default: a.push_back(Rational(0)); b.push_back(-c); break;
        }
    }
    const Polynomial A{std::vector<Rational>(a)};
    const Polynomial B{std::vector<Rational>(b)};
    const Polynomial g = gcd(A, B);
    if (g.degree() <= 0) return true;
    return count_real_roots(g) == 0;
}

bool is_hyperbolic(const LinearPart& lp) { return is_hyperbolic(char_poly(lp)); }

ConsistencyDiagnostic nonresonance_implies_hyperbolic_check(const VectorField& X, long k_max) {
    const LinearPart lp = weighted_linear_part(X);
    const CompatibleOrdering ordering = compatible_ordering(lp);
    if (!ordering.supported)
        return {false, "spectrum does not split over the rationals; exact check unavailable"};

    // A zero eigenvalue lambda_j forces the resonance (j, 2 e_j) at weighted
    // degree w_j <= w_max, so an empty report through max(w, k_max) degrees
    // must come with a nonzero constant coefficient sign pattern.
    const long degrees = std::max<long>(k_max, lp.weighting.max());
    const ResonanceReport report = enumerate_resonances(ordering.lambda, lp.weighting, degrees);
    const bool zero_eigenvalue = !char_poly(lp).coefficient(0).is_zero() ? false : true;
    if (report.resonances.empty() && zero_eigenvalue)
        return {false,
                "no resonances found through the forced degrees, yet the spectrum contains 0"};
    std::ostringstream os;
    os << report.resonances.size() << " resonance(s) through degree " << degrees
       << (zero_eigenvalue ? "; zero eigenvalue present" : "; no zero eigenvalue");
    return {true, os.str()};
}

}  // namespace wlin
