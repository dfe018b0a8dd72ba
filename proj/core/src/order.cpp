#include "wlin/order.hpp"

#include <ostream>
#include <stdexcept>

namespace wlin {

long WeightedOrder::value() const {
    if (infinite_) throw std::logic_error("WeightedOrder: value() of infinity");
    return k_;
}

std::ostream& operator<<(std::ostream& os, const WeightedOrder& o) {
    if (o.is_infinite()) return os << "inf";
    return os << o.value();
}

}  // namespace wlin
