#include "bkk/exact_linear.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "bkk/error.hpp"

namespace bkk {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : r) entries_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<BigVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

BigVector IntegerMatrix::row(std::size_t i) const {
    return BigVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

BigInt determinant(const IntegerMatrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<BigVector> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = m.row(i);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

// Quotient q minimizing |a - q*b|.
BigInt nearest_quotient(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
}

BigInt floor_quotient(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void sub_multiple(BigVector& target, const BigVector& source, const BigInt& q) {
    for (std::size_t j = 0; j < target.size(); ++j) mpz_submul(target[j].get_mpz_t(), q.get_mpz_t(), source[j].get_mpz_t());
}

void negate(BigVector& v) {
    for (auto& x : v) x = -x;
}

struct Echelon {
    std::vector<BigVector> h;
    std::vector<BigVector> u;
    std::vector<std::size_t> pivots;
};

// Column-by-column reduction: repeatedly bring the smallest nonzero entry of
// the working column to the pivot row and reduce the rows below it by the
// nearest quotient, then normalize the pivot sign and reduce the rows above.
Echelon echelonize(std::vector<BigVector> h, std::size_t cols) {
    const std::size_t rows = h.size();
    std::vector<BigVector> u(rows, BigVector(rows, BigInt(0)));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
    std::vector<std::size_t> pivots;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        bool found = false;
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                if (best == rows || abs(h[i][c]) < abs(h[best][c])) best = i;
            }
            if (best == rows) break;
            found = true;
            std::swap(h[r], h[best]);
            std::swap(u[r], u[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                BigInt q = nearest_quotient(h[i][c], h[r][c]);
                sub_multiple(h[i], h[r], q);
                sub_multiple(u[i], u[r], q);
                if (h[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;
        if (h[r][c] < 0) {
            negate(h[r]);
            negate(u[r]);
        }
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q = floor_quotient(h[i][c], h[r][c]);
            if (q == 0) continue;
            sub_multiple(h[i], h[r], q);
            sub_multiple(u[i], u[r], q);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(h), std::move(u), std::move(pivots)};
}

}  // namespace

HermiteFactorization hermite_factorization(const IntegerMatrix& m) {
    std::vector<BigVector> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
    Echelon e = echelonize(std::move(rows), m.cols());
    const std::size_t r = e.pivots.size();
    const std::size_t n = m.rows();

    if (r < n) {
        // Kernel rows: echelonize with columns reversed so that each row is
        // anchored on its last nonzero entry, then restore the column order.
        std::vector<BigVector> kernel;
        for (std::size_t i = r; i < n; ++i) {
            BigVector rev(e.u[i].rbegin(), e.u[i].rend());
            kernel.push_back(std::move(rev));
        }
        Echelon k = echelonize(std::move(kernel), n);
        if (k.pivots.size() != n - r) throw InternalError("left kernel block lost rank");
        for (std::size_t t = 0; t < n - r; ++t) {
            const BigVector& rev = k.h[n - r - 1 - t];
            e.u[r + t] = BigVector(rev.rbegin(), rev.rend());
        }
        // Reduce the leading rows of U modulo the kernel rows, last anchor first.
        for (std::size_t t = n - r; t-- > 0;) {
            const BigVector& kr = e.u[r + t];
            std::size_t anchor = n;
            while (anchor-- > 0 && kr[anchor] == 0) {}
            for (std::size_t i = 0; i < r; ++i) {
                BigInt q = floor_quotient(e.u[i][anchor], kr[anchor]);
                if (q != 0) sub_multiple(e.u[i], kr, q);
            }
        }
    }

    HermiteFactorization out;
    out.U = IntegerMatrix::from_rows(e.u, n);
    out.H = IntegerMatrix::from_rows(e.h, m.cols());
    out.rank = r;
    out.pivot_columns = e.pivots;
    out.pivot_product = 1;
    for (std::size_t i = 0; i < r; ++i) out.pivot_product *= out.H(i, e.pivots[i]);
    return out;
}

bool is_unimodular(const IntegerMatrix& m) {
    if (!m.square()) return false;
    return abs(determinant(m)) == 1;
}

std::size_t rank(const IntegerMatrix& m) {
    // Fraction-free elimination without tracking a transform.
    std::vector<BigVector> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                BigInt t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace bkk
