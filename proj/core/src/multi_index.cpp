#include "wlin/multi_index.hpp"

#include <numeric>
#include <ostream>

namespace wlin {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t axis) {
    std::vector<std::uint32_t> e(n, 0);
    e.at(axis) = 1;
    return MultiIndex(std::move(e));
}

std::uint64_t MultiIndex::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool MultiIndex::is_zero() const {
    for (auto x : e_)
        if (x != 0) return false;
    return true;
}

bool lex_less(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents() < b.exponents();
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& a) {
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    return os << ")";
}

}  // namespace wlin
