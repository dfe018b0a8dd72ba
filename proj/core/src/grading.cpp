#include "wlin/grading.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wlin/errors.hpp"

namespace wlin {

VectorField graded_component_vf(const VectorField& X, long k) {
    const SeriesContext& ctx = X.context();
    SeriesTuple t;
    t.reserve(ctx.dimension());
    for (std::size_t i = 0; i < ctx.dimension(); ++i)
        t.push_back(X.component(i).graded_part(k + ctx.weights()[i]));
    return VectorField(ctx, std::move(t));
}

AdmissibilityReport is_admissible(const VectorField& X) {
    const SeriesContext& ctx = X.context();
    const Weighting& w = ctx.weights();
    for (std::size_t i = 0; i < ctx.dimension(); ++i) {
        for (const auto& [alpha, c] : X.component(i).terms()) {
            if (weighted_degree(alpha, w) < w[i])
                return {false, AdmissibilityWitness{i, alpha}};
        }
    }
    return {true, std::nullopt};
}

VectorField weighted_linear_approximation(const VectorField& X) {
    return graded_component_vf(X, 0);
}

VectorField euler_field(const SeriesContext& ctx) {
    SeriesTuple t;
    t.reserve(ctx.dimension());
    for (std::size_t i = 0; i < ctx.dimension(); ++i)
        t.push_back(TruncatedSeries::coordinate(ctx, i)
                        .scaled(Rational(ctx.weights()[i])));
    return VectorField(ctx, std::move(t));
}

bool is_weighted_euler_like(const VectorField& X) {
    return is_admissible(X).admissible &&
           weighted_linear_approximation(X) == euler_field(X.context());
}

GradedSliceBasis::GradedSliceBasis(Weighting w, long degree,
                                   std::vector<SliceBasisElement> elements)
    : w_(std::move(w)), degree_(degree), elements_(std::move(elements)) {}

std::optional<std::size_t> GradedSliceBasis::index_of(std::size_t axis,
                                                      const MultiIndex& alpha) const {
    for (std::size_t b = 0; b < elements_.size(); ++b)
        if (elements_[b].axis == axis && elements_[b].alpha == alpha) return b;
    return std::nullopt;
}

namespace {

void enumerate_rec(const std::vector<int>& w, std::size_t pos, long remaining,
                   MultiIndex& partial, std::vector<MultiIndex>& out) {
    if (pos + 1 == w.size()) {
        if (remaining % w[pos] == 0) {
            partial[pos] = static_cast<std::uint32_t>(remaining / w[pos]);
            out.push_back(partial);
            partial[pos] = 0;
        }
        return;
    }
    for (long e = 0; e * w[pos] <= remaining; ++e) {
        partial[pos] = static_cast<std::uint32_t>(e);
        enumerate_rec(w, pos + 1, remaining - e * w[pos], partial, out);
    }
    partial[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_weighted_degree(const Weighting& w, long m) {
    std::vector<MultiIndex> out;
    if (m < 0) return out;
    MultiIndex partial = MultiIndex::zero(w.size());
    enumerate_rec(w.weights(), 0, m, partial, out);
    return out;
}

GradedSliceBasis slice_basis(const Weighting& w, long k) {
    std::vector<SliceBasisElement> elements;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (auto& alpha : monomials_of_weighted_degree(w, w[i] + k))
            elements.push_back({i, std::move(alpha)});
    }
    // Triangularity order: decreasing |alpha|, then decreasing axis, then
    // decreasing lexicographic alpha.
    std::sort(elements.begin(), elements.end(),
              [](const SliceBasisElement& a, const SliceBasisElement& b) {
                  const auto da = a.alpha.total_degree(), db = b.alpha.total_degree();
                  if (da != db) return da > db;
                  if (a.axis != b.axis) return a.axis > b.axis;
                  return lex_less(b.alpha, a.alpha);
              });
    return GradedSliceBasis(w, k, std::move(elements));
}

std::size_t slice_dimension(const Weighting& w, long k) {
    std::size_t dim = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        dim += monomials_of_weighted_degree(w, w[i] + k).size();
    return dim;
}

TimeVectorField kappa_family(const VectorField& X) {
    const AdmissibilityReport report = is_admissible(X);
    if (!report.admissible) {
        const auto& witness = *report.witness;
        std::ostringstream msg;
        msg << "kappa_family: not admissible; term x^" << witness.alpha << " d/dx"
            << (witness.axis + 1) << " has weighted degree "
            << weighted_degree(witness.alpha, X.context().weights()) << " < w_i = "
            << X.context().weights()[witness.axis];
        throw NotAdmissibleError(
            witness.axis,
            std::vector<unsigned>(witness.alpha.exponents().begin(),
                                  witness.alpha.exponents().end()),
            msg.str());
    }
    std::vector<VectorField> coeffs;
    for (long k = 0; k <= X.context().cutoff(); ++k)
        coeffs.push_back(graded_component_vf(X, k));
    return TimeVectorField(X.context(), std::move(coeffs));
}

}  // namespace wlin
