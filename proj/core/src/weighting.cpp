#include "wlin/weighting.hpp"

#include <ostream>
#include <stdexcept>

namespace wlin {

Weighting::Weighting(std::vector<int> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("Weighting: empty weight list");
    int prev = 1;
    for (int wi : w_) {
        if (wi < 1) throw std::invalid_argument("Weighting: weights must be positive");
        if (wi < prev) throw std::invalid_argument("Weighting: weights must be non-decreasing");
        prev = wi;
    }
}

bool Weighting::is_trivial() const {
    for (int wi : w_)
        if (wi != 1) return false;
    return true;
}

long weighted_degree(const MultiIndex& alpha, const Weighting& w) {
    if (alpha.size() != w.size())
        throw std::invalid_argument("weighted_degree: length mismatch");
    long d = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        d += static_cast<long>(w[i]) * static_cast<long>(alpha[i]);
    return d;
}

BlockStructure block_structure(const Weighting& w) {
    BlockStructure b;
    b.block_of.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == 0 || w[i] != w[i - 1]) {
            b.sizes.push_back(0);
        }
        b.block_of[i] = b.sizes.size() - 1;
        b.sizes.back()++;
    }
    b.distinct = b.sizes.size();
    return b;
}

std::ostream& operator<<(std::ostream& os, const Weighting& w) {
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    return os << ")";
}

}  // namespace wlin
