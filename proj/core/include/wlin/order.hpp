#ifndef WLIN_ORDER_HPP
#define WLIN_ORDER_HPP

#include <iosfwd>

namespace wlin {

/// Weighted order of a series: the least weighted degree of a nonzero term,
/// with a distinguished infinite value for the zero series.
class WeightedOrder {
public:
    static WeightedOrder infinity() { return WeightedOrder(true, 0); }
    static WeightedOrder finite(long k) { return WeightedOrder(false, k); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    long value() const;  // throws if infinite

    friend bool operator==(const WeightedOrder& a, const WeightedOrder& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.k_ == b.k_);
    }
    friend bool operator!=(const WeightedOrder& a, const WeightedOrder& b) { return !(a == b); }
    friend bool operator<(const WeightedOrder& a, const WeightedOrder& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.k_ < b.k_;
    }
    friend bool operator<=(const WeightedOrder& a, const WeightedOrder& b) { return !(b < a); }
    friend bool operator>(const WeightedOrder& a, const WeightedOrder& b) { return b < a; }
    friend bool operator>=(const WeightedOrder& a, const WeightedOrder& b) { return !(a < b); }

    /// True when the order is at least k (vacuously true for the zero series).
    bool at_least(long k) const { return infinite_ || k_ >= k; }

private:
    WeightedOrder(bool inf, long k) : infinite_(inf), k_(k) {}
    bool infinite_;
    long k_;
};

std::ostream& operator<<(std::ostream& os, const WeightedOrder& o);

}  // namespace wlin

#endif
