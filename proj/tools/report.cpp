#include "report.hpp"

#include <stdexcept>

#include "textio.hpp"

namespace wlin::cli {

json to_json(const Rational& r) { return r.str(); }

json to_json(const TruncatedSeries& f, const std::vector<std::string>& vars) {
    json terms = json::array();
    for (const auto& [alpha, c] : f.terms()) {
        json monomial = json::array();
        for (std::size_t i = 0; i < alpha.size(); ++i) monomial.push_back(alpha[i]);
        terms.push_back({{"monomial", monomial}, {"coeff", c.str()}});
    }
    return {{"terms", terms}, {"text", print_series(f, vars)}};
}

json to_json(const VectorField& X, const std::vector<std::string>& vars) {
    json comps = json::array();
    for (std::size_t i = 0; i < X.context().dimension(); ++i)
        comps.push_back(to_json(X.component(i), vars));
    return {{"components", comps}, {"text", print_field(X, vars)}};
}

json tuple_to_json(const SeriesTuple& tuple, const std::vector<std::string>& vars) {
    json comps = json::array();
    for (const auto& f : tuple) comps.push_back(to_json(f, vars));
    return {{"components", comps}};
}

json to_json(const Isotopy& iso, const std::vector<std::string>& vars) {
    json coeffs = json::array();
    for (long k = 0; k <= iso.t_cap(); ++k)
        coeffs.push_back(tuple_to_json(iso.coefficient(k), vars));
    return {{"t_coefficients", coeffs}};
}

json to_json(const DegreeCertificate& cert) {
    return {{"degree", cert.degree},
            {"dimension", cert.dimension},
            {"invertible", cert.invertible},
            {"determinant", cert.determinant.str()}};
}

json to_json(const ResonanceReport& report) {
    json resonances = json::array();
    for (const auto& r : report.resonances) {
        json alpha = json::array();
        for (std::size_t i = 0; i < r.alpha.size(); ++i) alpha.push_back(r.alpha[i]);
        resonances.push_back(
            {{"axis", r.axis + 1}, {"alpha", alpha}, {"degree", r.degree}});
    }
    json out = {{"lambda", report.lambda},
                {"resonances", resonances},
                {"exactness", report.exact ? "exact" : "heuristic"}};
    if (!report.exact) out["tolerance"] = report.tolerance;
    return out;
}

namespace {

SeriesTuple truncated_tuple(const SeriesTuple& tuple, long cutoff) {
    SeriesTuple out;
    for (const auto& f : tuple) out.push_back(f.truncated_to_degree(cutoff));
    return out;
}

}  // namespace

json to_json(const LinearizationResult& result, const std::vector<std::string>& vars,
             long display_cutoff) {
    json certs = json::array();
    for (const auto& c : result.certificates) certs.push_back(to_json(c));

    json generator = json::array();
    for (long k = 0; k <= result.generator.t_degree(); ++k)
        generator.push_back(to_json(result.generator.coefficient(k), vars));

    return {{"phi", tuple_to_json(truncated_tuple(result.phi.components(), display_cutoff), vars)},
            {"phi_inverse",
             tuple_to_json(truncated_tuple(result.phi_inverse.components(), display_cutoff), vars)},
            {"generator", generator},
            {"residual", to_json(result.residual, vars)},
            {"verified", result.verified},
            {"certificates", certs}};
}

VectorField field_from_json(const json& doc, const SeriesContext& ctx) {
    if (!doc.contains("components") || !doc["components"].is_array())
        throw std::invalid_argument("field document: missing 'components' array");
    const auto& comps = doc["components"];
    if (comps.size() != ctx.dimension())
        throw std::invalid_argument("field document: component count does not match variables");
    SeriesTuple tuple;
    for (const auto& comp : comps) {
        TruncatedSeries f(ctx);
        const json& terms = comp.contains("terms") ? comp["terms"] : comp;
        for (const auto& term : terms) {
            const auto& mono = term.at("monomial");
            if (mono.size() != ctx.dimension())
                throw std::invalid_argument("field document: monomial length mismatch");
            std::vector<std::uint32_t> e;
            for (const auto& x : mono) e.push_back(x.get<std::uint32_t>());
            f.add_term(MultiIndex(std::move(e)), Rational::parse(term.at("coeff").get<std::string>()));
        }
        tuple.push_back(std::move(f));
    }
    return VectorField(ctx, std::move(tuple));
}

}  // namespace wlin::cli
