#ifndef WLIN_WEIGHTING_HPP
#define WLIN_WEIGHTING_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "wlin/multi_index.hpp"

namespace wlin {

/// Coordinate weights: positive integers listed from smallest to largest.
/// Construction validates 1 <= w1 <= ... <= wn.
class Weighting {
public:
    explicit Weighting(std::vector<int> weights);

    static Weighting trivial(std::size_t n) { return Weighting(std::vector<int>(n, 1)); }

    std::size_t size() const { return w_.size(); }
    int operator[](std::size_t i) const { return w_[i]; }
    const std::vector<int>& weights() const { return w_; }

    int min() const { return w_.front(); }
    int max() const { return w_.back(); }
    bool is_trivial() const;

    friend bool operator==(const Weighting& a, const Weighting& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Weighting& a, const Weighting& b) { return a.w_ != b.w_; }

private:
    std::vector<int> w_;
};

/// <w, alpha> = sum w_i * alpha_i. Throws on length mismatch.
long weighted_degree(const MultiIndex& alpha, const Weighting& w);

/// Grouping of axes by distinct weight value, in increasing weight order.
struct BlockStructure {
    std::size_t distinct = 0;             // number of distinct weights
    std::vector<std::size_t> sizes;       // multiplicity of each distinct weight
    std::vector<std::size_t> block_of;    // axis -> block index (0-based, non-decreasing)
};

BlockStructure block_structure(const Weighting& w);

std::ostream& operator<<(std::ostream& os, const Weighting& w);

}  // namespace wlin

#endif
