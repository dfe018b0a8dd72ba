#include "wlin/adjoint.hpp"

#include <sstream>
#include <stdexcept>

namespace wlin {

VectorField from_slice_coordinates(const SeriesContext& ctx, const GradedSliceBasis& basis,
                                   const std::vector<Rational>& coords) {
    if (coords.size() != basis.size())
        throw std::invalid_argument("from_slice_coordinates: coordinate count mismatch");
    VectorField X = VectorField::zero(ctx);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (coords[b].is_zero()) continue;
        X += VectorField::monomial(ctx, basis.element(b).axis, basis.element(b).alpha, coords[b]);
    }
    return X;
}

std::vector<Rational> to_slice_coordinates(const VectorField& X, const GradedSliceBasis& basis) {
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (std::size_t i = 0; i < X.context().dimension(); ++i) {
        for (const auto& [alpha, c] : X.component(i).terms()) {
            const auto idx = basis.index_of(i, alpha);
            if (!idx) {
                std::ostringstream msg;
                msg << "to_slice_coordinates: term x^" << alpha << " d/dx" << (i + 1)
                    << " is outside the degree-" << basis.degree() << " slice";
                throw std::invalid_argument(msg.str());
            }
            coords[*idx] = c;
        }
    }
    return coords;
}

AdjointMatrix adjoint_matrix(const VectorField& X0, long k) {
    const Weighting& w = X0.context().weights();
    if (graded_component_vf(X0, 0) != X0)
        throw std::invalid_argument(
            "adjoint_matrix: X0 must be quasi-homogeneous of weighted degree 0");

    // Brackets of a degree-0 field with degree-k slice elements live in
    // weighted degrees up to w_max + k; give the computation its own room.
    const SeriesContext work(w, std::max<long>(w.max() + k, X0.context().cutoff()));
    const VectorField X0w = X0.embedded(work);

    GradedSliceBasis basis = slice_basis(w, k);
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const VectorField e =
            VectorField::monomial(work, basis.element(b).axis, basis.element(b).alpha, Rational(1));
        VectorField bracket = lie_bracket(X0w, e);
        std::vector<Rational> col;
        try {
            col = to_slice_coordinates(bracket, basis);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("adjoint_matrix: off-slice leakage: ") +
                                        e.what());
        }
        for (std::size_t r = 0; r < basis.size(); ++r) m(r, b) = col[r];
    }
    return AdjointMatrix{k, std::move(basis), std::move(m)};
}

InvertibilityReport is_adjoint_invertible(const AdjointMatrix& a) {
    InvertibilityReport report;
    report.determinant = determinant(a.entries);
    report.invertible = !report.determinant.is_zero();
    if (!report.invertible) report.kernel = kernel_basis(a.entries);
    return report;
}

}  // namespace wlin
