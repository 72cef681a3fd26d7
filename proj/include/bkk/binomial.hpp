#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bkk/bigint.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/gaussian_rational.hpp"
#include "bkk/geometry.hpp"

namespace bkk {

using LogComplex = std::complex<long double>;

enum class ConstantMode { exact, floating };

/// The system x^{a_i} = c_i, i = 1..n, with a_i the rows of an n x n
/// exponent matrix and every c_i nonzero.
class BinomialSystem {
public:
    BinomialSystem(IntegerMatrix exponents, std::vector<GaussianRational> constants);
    BinomialSystem(IntegerMatrix exponents, std::vector<Complex> constants);

    std::size_t dimension() const noexcept { return exponents_.rows(); }
    const IntegerMatrix& exponents() const noexcept { return exponents_; }
    ConstantMode mode() const noexcept { return mode_; }
    const std::vector<GaussianRational>& exact_constants() const noexcept { return exact_; }
    /// Floating constants; exact constants are rounded to double.
    std::vector<Complex> numeric_constants() const;

private:
    IntegerMatrix exponents_;
    ConstantMode mode_;
    std::vector<GaussianRational> exact_;
    std::vector<Complex> numeric_;
};

struct RootCount {
    bool finite = false;
    BigInt count = 0;  // meaningful only when finite
};

/// |det E| torus roots when det E != 0; otherwise the root set is empty or
/// infinite depending on the constants, which this does not decide.
RootCount count_torus_roots(const IntegerMatrix& exponents);

/// Equivalent system H x = c' with U E = H, U unimodular, and
/// c'_i = prod_j c_j^{U[i][j]}. Row i of U is the symbolic exponent vector
/// of c'_i.
struct TriangularBinomialSystem {
    IntegerMatrix U;
    IntegerMatrix H;
    ConstantMode mode = ConstantMode::floating;
    std::vector<GaussianRational> exact_constants;  // filled in exact mode
    std::vector<LogComplex> log_constants;          // sum_j U[i][j] log c_j, principal logs

    /// exp(log_constants[i]); RangeError if it is not representable.
    Complex constant(std::size_t i) const;
};

TriangularBinomialSystem triangularize(const BinomialSystem& system);

using Root = std::vector<Complex>;

/// Every torus root of a triangular system by back-substitution. The w^d = c
/// step uses the principal branch times the d-th roots of unity. Requires a
/// nonsingular H.
std::vector<Root> solve_triangular(const TriangularBinomialSystem& t);

enum class RootMode { symbolic, numeric };

struct RootEnumeration {
    TriangularBinomialSystem triangular;
    std::vector<Root> roots;  // empty in symbolic mode
};

/// Throws PreconditionError when det E = 0 and RangeError on overflow or
/// when more than kMaxEnumeratedRoots roots would be produced.
RootEnumeration enumerate_roots(const BinomialSystem& system, RootMode mode);

inline constexpr long kMaxEnumeratedRoots = 10'000'000;

/// max_i |x^{a_i} - c_i| (negative exponents allowed).
double binomial_residual(const IntegerMatrix& exponents, const std::vector<Complex>& constants, const Root& x);

/// p^plus = p^minus with disjoint supports.
struct BinomialRelation {
    BigVector plus;
    BigVector minus;
};

struct ToricIdeal {
    std::vector<BinomialRelation> relations;
    BigInt degree;          // pivot product of the Hermite normal form of E
    std::size_t rank = 0;   // rank of the homogenized exponent matrix
};

/// Binomials cutting out the toric variety of A, read off the trailing rows
/// of a Hermite factorization of the matrix with rows (a_i, 1).
ToricIdeal toric_ideal_binomials(const PointConfiguration& a);

}  // namespace bkk
