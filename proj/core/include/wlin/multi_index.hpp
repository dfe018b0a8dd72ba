#ifndef WLIN_MULTI_INDEX_HPP
#define WLIN_MULTI_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wlin {

/// Exponent tuple of a monomial, one entry per variable.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::uint32_t> exponents)
        : e_(std::move(exponents)) {}

    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<std::uint32_t>(n, 0)); }
    static MultiIndex unit(std::size_t n, std::size_t axis);

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t total_degree() const;
    bool is_zero() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

private:
    std::vector<std::uint32_t> e_;
};

/// Plain lexicographic comparison (entry-wise from the first variable).
bool lex_less(const MultiIndex& a, const MultiIndex& b);

std::ostream& operator<<(std::ostream& os, const MultiIndex& a);

}  // namespace wlin

#endif
