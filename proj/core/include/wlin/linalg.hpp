#ifndef WLIN_LINALG_HPP
#define WLIN_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wlin/rational.hpp"

namespace wlin {

/// Dense matrix of exact rationals. Small sizes only; row-major storage.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transposed() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Exact determinant via fraction-free Bareiss elimination on an
/// integer-scaled copy, pivots chosen by least bit length.
Rational determinant(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

/// Basis of the right kernel {v : A v = 0}; empty when A has full column rank.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& a);

/// Solves A x = b for square A. Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace wlin

#endif
