#include "wlin/linearize.hpp"

#include <sstream>
#include <stdexcept>

#include "wlin/errors.hpp"

namespace wlin {
namespace {

void require_admissible(const VectorField& X, const char* where) {
    const AdmissibilityReport report = is_admissible(X);
    if (report.admissible) return;
    const auto& witness = *report.witness;
    std::ostringstream msg;
    msg << where << ": not admissible; term x^" << witness.alpha << " d/dx"
        << (witness.axis + 1) << " has weighted degree "
        << weighted_degree(witness.alpha, X.context().weights()) << " < "
        << X.context().weights()[witness.axis];
    throw NotAdmissibleError(witness.axis,
                             std::vector<unsigned>(witness.alpha.exponents().begin(),
                                                   witness.alpha.exponents().end()),
                             msg.str());
}

std::vector<std::vector<std::string>> kernel_strings(
    const std::vector<std::vector<Rational>>& kernel) {
    std::vector<std::vector<std::string>> out;
    for (const auto& v : kernel) {
        std::vector<std::string> row;
        row.reserve(v.size());
        for (const auto& c : v) row.push_back(c.str());
        out.push_back(std::move(row));
    }
    return out;
}

[[noreturn]] void throw_singular(long degree, const InvertibilityReport& report,
                                 std::size_t dimension) {
    std::ostringstream msg;
    msg << "adjoint operator singular at weighted degree " << degree << " (slice dimension "
        << dimension << ", kernel rank " << report.kernel.size() << ")";
    throw SingularAdjointError(degree, kernel_strings(report.kernel), msg.str());
}

/// Common tail: integrate U_t, evaluate the flow at t = 1, invert, verify.
LinearizationResult finish(const VectorField& X_work, std::vector<VectorField> U,
                           std::vector<DegreeCertificate> certs, long report_cutoff) {
    const SeriesContext& work = X_work.context();
    const long t_cap = report_cutoff;

    TimeVectorField Ut(work, std::move(U));
    const Isotopy iso = flow(Ut, t_cap, /*require_weighted_order_bound=*/true);
    FormalDiffeo phi = evaluate_isotopy(iso, Rational(1), EvalCertificate::OrderBound);
    FormalDiffeo phi_inverse = invert_diffeo(phi);

    VerificationResult verification = verify_linearization(X_work, phi, report_cutoff);

    return LinearizationResult{std::move(phi),
                               std::move(phi_inverse),
                               std::move(Ut),
                               std::move(verification.residual),
                               std::move(certs),
                               verification.zero_through_guarantee,
                               report_cutoff};
}

}  // namespace

LinearizationResult moser_linearize(const VectorField& X, long report_cutoff) {
    if (report_cutoff < 1) throw std::invalid_argument("moser_linearize: cutoff must be >= 1");
    const SeriesContext work(X.context().weights(), report_cutoff + X.context().weights().max());
    const VectorField Xw = X.embedded(work);
    require_admissible(Xw, "moser_linearize");

    const TimeVectorField kappa = kappa_family(Xw);
    const VectorField& X0 = kappa.coefficient(0);

    std::vector<VectorField> slices;
    for (long k = 0; k <= kappa.t_degree(); ++k) slices.push_back(kappa.coefficient(k));

    // Adjoint invertibility is a precondition across the whole degree range;
    // certificates are recorded degree by degree before any solve.
    std::vector<DegreeCertificate> certs;
    std::vector<AdjointMatrix> adjoints;
    for (long d = 1; d <= report_cutoff; ++d) {
        AdjointMatrix ad = adjoint_matrix(X0, d);
        const InvertibilityReport report = is_adjoint_invertible(ad);
        certs.push_back({d, ad.basis.size(), report.invertible, report.determinant});
        if (!report.invertible) throw_singular(d, report, ad.basis.size());
        adjoints.push_back(std::move(ad));
    }

    std::vector<VectorField> U;
    for (long d = 1; d <= report_cutoff; ++d) {
        const VectorField rhs = homological_rhs(slices, d, U);
        if (rhs.is_zero()) {
            U.push_back(VectorField::zero(work));
            continue;
        }
        const AdjointMatrix& ad = adjoints[static_cast<std::size_t>(d - 1)];
        const auto coords = solve(ad.entries, to_slice_coordinates(rhs, ad.basis));
        if (!coords) throw std::logic_error("moser_linearize: certified adjoint failed to solve");
        VectorField Ud = from_slice_coordinates(work, ad.basis, *coords);
        if (lie_bracket(X0, Ud) != rhs)
            throw std::logic_error("moser_linearize: back-substitution residual is nonzero");
        U.push_back(std::move(Ud));
    }
    return finish(Xw, std::move(U), std::move(certs), report_cutoff);
}

LinearizationResult euler_like_linearize(const VectorField& X, long report_cutoff) {
    if (report_cutoff < 1)
        throw std::invalid_argument("euler_like_linearize: cutoff must be >= 1");
    const SeriesContext work(X.context().weights(), report_cutoff + X.context().weights().max());
    const VectorField Xw = X.embedded(work);
    if (!is_weighted_euler_like(Xw))
        throw std::invalid_argument(
            "euler_like_linearize: weighted linear approximation is not the Euler field");

    const TimeVectorField kappa = kappa_family(Xw);

    // ad_{E_w} acts on the degree-d slice by multiplication by d: the
    // certificates are immediate and U_[d] = X_[d].
    std::vector<DegreeCertificate> certs;
    std::vector<VectorField> U;
    for (long d = 1; d <= report_cutoff; ++d) {
        const std::size_t dim = slice_dimension(work.weights(), d);
        certs.push_back({d, dim, true, Rational(d).pow(static_cast<unsigned long>(dim))});
        U.push_back(kappa.coefficient(d));
    }
    return finish(Xw, std::move(U), std::move(certs), report_cutoff);
}

LinearizationResult iterative_linearize_oracle(const VectorField& X, long report_cutoff) {
    if (report_cutoff < 1)
        throw std::invalid_argument("iterative_linearize_oracle: cutoff must be >= 1");
    const SeriesContext work(X.context().weights(), report_cutoff + X.context().weights().max());
    const VectorField Xw = X.embedded(work);
    require_admissible(Xw, "iterative_linearize_oracle");

    const VectorField X0 = weighted_linear_approximation(Xw);
    VectorField current = Xw;
    FormalDiffeo total = FormalDiffeo::identity(work);
    std::vector<DegreeCertificate> certs;
    std::vector<VectorField> generators;

    const long flow_cap = work.cutoff() - work.weights().min();
    for (long k = 1; k <= report_cutoff; ++k) {
        AdjointMatrix ad = adjoint_matrix(X0, k);
        const InvertibilityReport report = is_adjoint_invertible(ad);
        certs.push_back({k, ad.basis.size(), report.invertible, report.determinant});
        if (!report.invertible) throw_singular(k, report, ad.basis.size());

        const VectorField slice = graded_component_vf(current, k);
        if (slice.is_zero()) {
            generators.push_back(VectorField::zero(work));
            continue;
        }
        const auto coords = solve(ad.entries, to_slice_coordinates(slice, ad.basis));
        if (!coords)
            throw std::logic_error("iterative_linearize_oracle: certified adjoint failed to solve");
        VectorField V = from_slice_coordinates(work, ad.basis, *coords);

        // Conjugate by the time-1 exponential of V: the degree-k slice of
        // the pullback is slice - ad_{X0}(V) = 0, lower slices are untouched.
        const long cap = std::max<long>(flow_cap / k + 1, 1);
        const FormalDiffeo step =
            evaluate_isotopy(exponential_flow(V, cap), Rational(1), EvalCertificate::Detected);
        current = pullback_vf(step, current);
        total = compose_diffeo(total, step);
        generators.push_back(std::move(V));
    }

    FormalDiffeo total_inverse = invert_diffeo(total);
    VerificationResult verification = verify_linearization(Xw, total, report_cutoff);
    return LinearizationResult{std::move(total),
                               std::move(total_inverse),
                               TimeVectorField(work, std::move(generators)),
                               std::move(verification.residual),
                               std::move(certs),
                               verification.zero_through_guarantee,
                               report_cutoff};
}

VerificationResult verify_linearization(const VectorField& X, const FormalDiffeo& phi,
                                        long report_cutoff) {
    const SeriesContext& work = phi.context();
    if (work.weights() != X.context().weights())
        throw std::invalid_argument("verify_linearization: weight mismatch");
    const VectorField Xw = X.embedded(work);
    const VectorField X0 = weighted_linear_approximation(Xw);
    const VectorField full = pullback_vf(phi, Xw) - X0;

    // Degrees beyond component i's guarantee (report_cutoff + w_i) are
    // truncation artifacts; the reported residual stops at the guarantee.
    bool zero = true;
    SeriesTuple guaranteed;
    for (std::size_t i = 0; i < work.dimension(); ++i) {
        const long guarantee =
            std::min<long>(report_cutoff + work.weights()[i], work.cutoff());
        guaranteed.push_back(full.component(i).truncated_to_degree(guarantee));
        zero = zero && guaranteed.back().is_zero();
    }
    return VerificationResult{VectorField(work, std::move(guaranteed)), zero};
}

}  // namespace wlin
