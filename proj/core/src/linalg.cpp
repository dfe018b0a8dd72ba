#include "wlin/linalg.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace wlin {
namespace {

// Row-scales a rational matrix to integers; scales[i] is the factor applied
// to row i (the lcm of its denominators).
void integer_scale(const RationalMatrix& a, std::vector<std::vector<mpz_class>>& z,
                   std::vector<mpz_class>& scales) {
    const std::size_t r = a.rows(), c = a.cols();
    z.assign(r, std::vector<mpz_class>(c));
    scales.assign(r, mpz_class(1));
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < c; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).denominator().get_mpz_t());
        scales[i] = l;
        for (std::size_t j = 0; j < c; ++j) {
            const Rational& v = a(i, j);
            z[i][j] = v.numerator() * (l / v.denominator());
        }
    }
}

std::size_t bits(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

// Fraction-free Bareiss forward elimination on the leading ncols_elim
// columns. Pivot rows are chosen by least bit length to curb coefficient
// growth. Returns the pivot column list; sign accumulates row swaps.
// Stops at the first pivotless column: the exact-division invariant only
// holds while pivot columns stay contiguous, and every caller treats that
// case as singular anyway.
std::vector<std::size_t> bareiss_forward(std::vector<std::vector<mpz_class>>& z,
                                         std::size_t ncols_elim, int& sign) {
    const std::size_t rows = z.size();
    const std::size_t cols = rows ? z[0].size() : 0;
    std::vector<std::size_t> pivot_cols;
    sign = 1;
    mpz_class prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols_elim && row < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (z[i][col] == 0) continue;
            if (best == rows || bits(z[i][col]) < bits(z[best][col])) best = i;
        }
        if (best == rows) return pivot_cols;
        if (best != row) {
            std::swap(z[best], z[row]);
            sign = -sign;
        }
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = z[i][j] * z[row][col] - z[i][col] * z[row][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][col] = 0;
        }
        prev = z[row][col];
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

// Reduced row echelon form over the rationals. Returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            if (best == rows || m(i, col).bit_length() < m(best, col).bit_length()) best = i;
        }
        if (best == rows) continue;
        if (best != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(row, j), m(best, j));
        const Rational inv = m(row, col).reciprocal();
        for (std::size_t j = col; j < cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("RationalMatrix: size mismatch in *");
    RationalMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("RationalMatrix: size mismatch in -");
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Rational determinant(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<mpz_class>> z;
    std::vector<mpz_class> scales;
    integer_scale(a, z, scales);
    int sign = 1;
    auto pivots = bareiss_forward(z, n, sign);
    if (pivots.size() < n) return Rational(0);
    mpz_class denom(1);
    for (const auto& s : scales) denom *= s;
    mpz_class num = z[n - 1][n - 1];
    if (sign < 0) num = -num;
    return Rational(num, denom);
}

std::size_t rank(const RationalMatrix& a) {
    RationalMatrix m = a;
    return rref(m).size();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& a) {
    RationalMatrix m = a;
    const auto pivots = rref(m);
    const std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::vector<std::vector<mpz_class>> z;
    std::vector<mpz_class> scales;
    integer_scale(aug, z, scales);
    int sign = 1;
    if (bareiss_forward(z, n, sign).size() < n) return std::nullopt;

    // Back substitution in exact rationals on the triangularized system.
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s{Rational(mpz_class(z[ii][n]), mpz_class(1))};
        for (std::size_t j = ii + 1; j < n; ++j)
            s -= Rational(mpz_class(z[ii][j]), mpz_class(1)) * x[j];
        x[ii] = s / Rational(mpz_class(z[ii][ii]), mpz_class(1));
    }
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Rational(1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace wlin
