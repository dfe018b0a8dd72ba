#include "wlin/homological.hpp"

#include <sstream>
#include <stdexcept>

#include "wlin/errors.hpp"

namespace wlin {

namespace {

const VectorField& slice_or_zero(const std::vector<VectorField>& slices, long k,
                                 const VectorField& zero) {
    if (k < 0 || k >= static_cast<long>(slices.size())) return zero;
    return slices[static_cast<std::size_t>(k)];
}

}  // namespace

VectorField homological_rhs(const std::vector<VectorField>& X_slices, long d,
                            const std::vector<VectorField>& U_prev) {
    if (X_slices.empty()) throw std::invalid_argument("homological_rhs: no slices");
    const SeriesContext& ctx = X_slices[0].context();
    const VectorField zero = VectorField::zero(ctx);

    VectorField rhs = slice_or_zero(X_slices, d, zero).scaled(Rational(d));
    for (long i = 1; i < d; ++i) {
        const VectorField& Ui = slice_or_zero(U_prev, i - 1, zero);  // U_prev[0] = U_[1]
        if (Ui.is_zero()) continue;
        const VectorField& Xdi = slice_or_zero(X_slices, d - i, zero);
        if (Xdi.is_zero()) continue;
        rhs -= lie_bracket(Xdi, Ui);
    }
    return rhs;
}

VectorField solve_homological(const std::vector<VectorField>& X_slices, long d,
                              const std::vector<VectorField>& U_prev) {
    if (d < 1) throw std::invalid_argument("solve_homological: degree must be >= 1");
    if (X_slices.empty()) throw std::invalid_argument("solve_homological: no slices");
    if (static_cast<long>(U_prev.size()) < d - 1)
        throw std::invalid_argument("solve_homological: missing previously solved generators");
    const SeriesContext& ctx = X_slices[0].context();
    const VectorField& X0 = X_slices[0];

    const VectorField rhs = homological_rhs(X_slices, d, U_prev);

    const AdjointMatrix ad = adjoint_matrix(X0, d);
    const std::vector<Rational> b = to_slice_coordinates(rhs, ad.basis);
    const auto x = solve(ad.entries, b);
    if (!x) {
        const auto report = is_adjoint_invertible(ad);
        std::vector<std::vector<std::string>> kernel_str;
        for (const auto& v : report.kernel) {
            std::vector<std::string> row;
            row.reserve(v.size());
            for (const auto& c : v) row.push_back(c.str());
            kernel_str.push_back(std::move(row));
        }
        std::ostringstream msg;
        msg << "solve_homological: ad_{X_[0]} is singular on the degree-" << d
            << " slice (dimension " << ad.basis.size() << ", kernel rank "
            << report.kernel.size() << ")";
        throw SingularAdjointError(d, std::move(kernel_str), msg.str());
    }
    VectorField U = from_slice_coordinates(ctx, ad.basis, *x);

    // Exact back-substitution: the solved generator must satisfy the
    // equation term for term.
    if (lie_bracket(X0, U) != rhs)
        throw std::logic_error("solve_homological: back-substitution residual is nonzero");
    return U;
}

}  // namespace wlin
