#pragma once

#include <string>

#include "anosov/polynomial.hpp"

namespace anosov {

/// Smallest solution of x^2 - d y^2 = +-1 with y >= 1.
struct PellSolution {
  BigInt x;
  BigInt y;
  int norm = 0;  // x^2 - d y^2
};

/// Throws InputError unless d >= 2 is squarefree.
PellSolution pell_fundamental_unit(long long d);

bool is_squarefree(long long d);

/// The k-th squarefree integer >= 2 (k = 0 gives 2).
long long nth_squarefree(int k);

/// An algebraic unit with its field data.
struct UnitSpec {
  int degree = 0;
  IntPolynomial minimal_polynomial;  // monic, constant term +-1
  int real_embeddings = 0;
  int complex_pairs = 0;
  std::string label;
};

/// Entry `seed` of the unit catalog: Pell units for degree 2, totally real
/// cubic units for degree 3. Throws UnsupportedDegree for other degrees and
/// InputError for a seed past the cubic catalog.
UnitSpec catalog_unit(int degree, int seed);

/// Number of cubic catalog entries.
int cubic_catalog_size();

}  // namespace anosov
