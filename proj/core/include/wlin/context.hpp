#ifndef WLIN_CONTEXT_HPP
#define WLIN_CONTEXT_HPP

#include <cstddef>
#include <iosfwd>

#include "wlin/weighting.hpp"

namespace wlin {

/// Ambient data shared by all series of one computation: dimension, weights,
/// and the weighted-degree cutoff. Two series are arithmetic-compatible iff
/// their contexts compare equal.
class SeriesContext {
public:
    SeriesContext(Weighting weights, long cutoff);

    std::size_t dimension() const { return w_.size(); }
    const Weighting& weights() const { return w_; }
    long cutoff() const { return cutoff_; }

    /// Same weights, different cutoff.
    SeriesContext with_cutoff(long cutoff) const { return SeriesContext(w_, cutoff); }

    /// Working context for derivative-consuming pipelines: cutoff + max weight.
    SeriesContext padded() const { return with_cutoff(cutoff_ + w_.max()); }

    friend bool operator==(const SeriesContext& a, const SeriesContext& b) {
        return a.cutoff_ == b.cutoff_ && a.w_ == b.w_;
    }
    friend bool operator!=(const SeriesContext& a, const SeriesContext& b) { return !(a == b); }

private:
    Weighting w_;
    long cutoff_;
};

std::ostream& operator<<(std::ostream& os, const SeriesContext& ctx);

}  // namespace wlin

#endif
