#ifndef WLIN_TOOLS_TEXTIO_HPP
#define WLIN_TOOLS_TEXTIO_HPP

#include <string>
#include <vector>

#include "wlin/series.hpp"
#include "wlin/vector_field.hpp"

namespace wlin::cli {

/// Parses a polynomial expression over the named variables: sums of terms,
/// each a '*'-separated product of rational literals, powers var^k, and
/// parenthesized subexpressions. Whitespace-insensitive. Throws ParseError
/// with line/column on bad input.
TruncatedSeries parse_series(const std::string& text, const std::vector<std::string>& vars,
                             const SeriesContext& ctx);

/// Parses a vector field: a sum of terms, each containing exactly one
/// d/dvar factor marking the component, e.g. "(x + y^2)*d/dx + 2*y*d/dy".
VectorField parse_field(const std::string& text, const std::vector<std::string>& vars,
                        const SeriesContext& ctx);

/// Parses a comma-separated tuple of polynomial expressions (one per
/// variable), e.g. "x + 1/3*y^2, y".
SeriesTuple parse_tuple(const std::string& text, const std::vector<std::string>& vars,
                        const SeriesContext& ctx);

/// Canonical text forms; parse(print(...)) round-trips exactly.
std::string print_series(const TruncatedSeries& f, const std::vector<std::string>& vars);
std::string print_field(const VectorField& X, const std::vector<std::string>& vars);

}  // namespace wlin::cli

#endif
