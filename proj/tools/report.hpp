#ifndef WLIN_TOOLS_REPORT_HPP
#define WLIN_TOOLS_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "wlin/diffeo.hpp"
#include "wlin/linearize.hpp"
#include "wlin/spectral.hpp"
#include "wlin/time_dependent.hpp"

namespace wlin::cli {

using json = nlohmann::json;

/// JSON encodings. Rationals are lowest-terms strings, multi-indices are
/// integer arrays, term lists follow the canonical monomial order.
json to_json(const Rational& r);
json to_json(const TruncatedSeries& f, const std::vector<std::string>& vars);
json to_json(const VectorField& X, const std::vector<std::string>& vars);
json tuple_to_json(const SeriesTuple& tuple, const std::vector<std::string>& vars);
json to_json(const Isotopy& iso, const std::vector<std::string>& vars);
json to_json(const DegreeCertificate& cert);
json to_json(const ResonanceReport& report);
json to_json(const LinearizationResult& result, const std::vector<std::string>& vars,
             long display_cutoff);

/// Field document input: {"variables": [...], "components": [[term...]...]}
/// with terms {"monomial": [...], "coeff": "p/q"} -- the same shape the
/// reports emit.
VectorField field_from_json(const json& doc, const SeriesContext& ctx);

}  // namespace wlin::cli

#endif
