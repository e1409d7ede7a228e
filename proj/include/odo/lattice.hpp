#pragma once

// Exact integer linear algebra: determinants, Smith and Hermite normal forms,
// lattice membership, characteristic polynomials and integer factorization.
// Everything is arbitrary precision; nothing here touches floating point.

#include "odo/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace odo {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  bool is_lower_triangular() const;
  bool is_upper_triangular() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& m, unsigned long exponent);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);

// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& m);

struct SNFData {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  // d_1 | d_2 | ... | d_k, all positive.
  IntVector elementary_divisors() const;
};

// U * M * V = D with D diagonal, positive, satisfying the divisibility chain.
// Pivot choice: smallest nonzero absolute value, ties to the lowest row-major
// position, so output is reproducible.
SNFData snf(const IntMatrix& m);

// Column-style Hermite normal form: H = M * W with W unimodular, H lower
// triangular, H(i,i) > 0 and 0 <= H(i,j) < H(i,i) for j < i.
IntMatrix hnf(const IntMatrix& m);

// A full-rank lattice M Z^d kept in Hermite form so that residues and
// membership are cheap to evaluate repeatedly.
class HermiteLattice {
 public:
  HermiteLattice() = default;
  explicit HermiteLattice(const IntMatrix& generators);

  std::size_t dim() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  // Unique representative of v + L inside the box 0 <= v_i < H(i,i).
  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const;
  // |Z^d : L|
  Int index() const;

 private:
  IntMatrix basis_;
};

IntVector hnf_reduce(const IntMatrix& m, const IntVector& v);

// x with M x = v when v lies in the column lattice of M.
std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& v);

// Coefficients c_0, c_1, ..., c_d of det(x I - M), lowest degree first.
IntVector charpoly(const IntMatrix& m);

// Horner evaluation of a polynomial (lowest degree first) at a square matrix.
IntMatrix evaluate_at(const IntVector& coefficients, const IntMatrix& m);

struct PrimePower {
  Int prime;
  unsigned long exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};
using PrimeFactorization = std::vector<PrimePower>;

bool is_prime(const Int& n);
PrimeFactorization factor_integer(const Int& n);
Int product(const PrimeFactorization& factorization);

enum class UnitFactor { HasUnitFactor, NoUnitFactor, Unknown };

inline constexpr std::size_t kMaxFactorDegree = 8;

// Whether some irreducible factor over Z of the monic polynomial has constant
// term +-1. Unknown above kMaxFactorDegree.
UnitFactor unit_factor_test(const IntVector& monic_coefficients);

}  // namespace odo
