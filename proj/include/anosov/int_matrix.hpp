#pragma once

#include <vector>

#include "anosov/polynomial.hpp"

namespace anosov {

/// Dense square-or-rectangular matrix of BigInt, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// Rows and columns restricted to the listed indices.
  IntMatrix submatrix(const std::vector<int>& indices) const;
  /// Largest absolute row sum.
  BigInt max_row_norm() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix power(const IntMatrix& m, unsigned exponent);

/// Companion matrix of a monic p: column i maps e_i to e_{i+1}, the last
/// column holds -p_0, ..., -p_{n-1}.
IntMatrix companion(const IntPolynomial& monic);

/// det(X I - m) by the division-free Berkowitz recurrence.
IntPolynomial charpoly_berkowitz(const IntMatrix& m);

/// det(X I - m) by Hessenberg reduction modulo word-size primes and Chinese
/// remaindering, with coefficients bounded by (1 + max row norm)^n.
IntPolynomial charpoly_multimodular(const IntMatrix& m);

/// Index classes of a block-diagonal structure (up to simultaneous
/// permutation): connected components of the nonzero pattern.
std::vector<std::vector<int>> diagonal_blocks(const IntMatrix& m);

}  // namespace anosov
