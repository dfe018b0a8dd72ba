#include "wlin/context.hpp"

#include <ostream>
#include <stdexcept>

namespace wlin {

SeriesContext::SeriesContext(Weighting weights, long cutoff)
    : w_(std::move(weights)), cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("SeriesContext: negative cutoff");
}

std::ostream& operator<<(std::ostream& os, const SeriesContext& ctx) {
    return os << "{n=" << ctx.dimension() << ", w=" << ctx.weights()
              << ", N=" << ctx.cutoff() << "}";
}

}  // namespace wlin
