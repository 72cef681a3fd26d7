#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "bkk/bigint.hpp"

namespace bkk {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<BigVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    BigVector row(std::size_t i) const;
    const std::vector<BigInt>& entries() const noexcept { return entries_; }

    IntegerMatrix transposed() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// U * M = H with U unimodular and H in Hermite normal form.
///
/// H is row-echelon: pivots are positive, each pivot sits strictly right of
/// the previous one, rows past `rank` are zero, and every entry above a pivot
/// p lies in [0, p). When M has dependent rows, the trailing rows of U span
/// the left kernel of M; they are returned in echelon form anchored on their
/// last nonzero entry, and the leading rows are reduced against them, which
/// makes U itself deterministic.
struct HermiteFactorization {
    IntegerMatrix U;
    IntegerMatrix H;
    std::size_t rank = 0;
    BigInt pivot_product;
    std::vector<std::size_t> pivot_columns;
};

/// Fraction-free (Bareiss) determinant. Throws DimensionError if not square.
BigInt determinant(const IntegerMatrix& m);

HermiteFactorization hermite_factorization(const IntegerMatrix& m);

bool is_unimodular(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

}  // namespace bkk
