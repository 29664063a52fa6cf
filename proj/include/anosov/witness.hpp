#pragma once

#include <optional>
#include <vector>

#include "anosov/graph.hpp"
#include "anosov/int_matrix.hpp"
#include "anosov/lyndon.hpp"
#include "anosov/polynomial.hpp"
#include "anosov/units.hpp"

namespace anosov {

/// One catalog unit per coherent component, indexed by component id.
using UnitAssignment = std::vector<UnitSpec>;

/// Pairwise distinct catalog units of degree |lambda| for every component.
/// Throws UnsupportedDegree for components of size 1 or >= 4.
UnitAssignment default_assignment(const QuotientGraph& q);

struct SearchOptions {
  int max_exponent = 64;
  unsigned start_bits = 256;
  unsigned max_bits = 1024;
};

/// First exponent tuple after `after` (or the first tuple when null), in
/// lexicographic order over [1, max_exponent]^components, for which every
/// connected-support weight e of total <= c gives a product of embedded unit
/// powers of modulus != 1 at the working precision. Returns nullopt once
/// the range is exhausted. Throws NotAnosovError when the standard form is
/// not Anosov and InputError when the assignment does not fit.
std::optional<std::vector<int>> exponent_search(const Graph& g, int c, const UnitAssignment& units,
                                                const std::vector<int>* after = nullptr,
                                                const SearchOptions& options = {});

/// Monic polynomial of xi^N given the minimal polynomial of xi.
IntPolynomial power_polynomial(const IntPolynomial& minimal, int exponent);

/// Graded automorphism on the Lyndon basis (with table) whose vertex block
/// on component j is the companion matrix of power_polynomial(unit_j, N_j).
/// Column k holds the image of basis element k.
IntMatrix induced_matrix(const Graph& g, const LyndonBasis& basis, const UnitAssignment& units,
                         const std::vector<int>& exponents);

/// Exact check M[x, y] = [M x, M y] over every basis pair.
bool is_lie_automorphism(const LyndonBasis& basis, const IntMatrix& m);

/// Basis indices grouped by component content (letters per component);
/// the induced matrix preserves each group.
struct ContentBlock {
  std::vector<int> content;
  std::vector<int> indices;
  IntPolynomial char_poly;
  HyperbolicityProof proof;
};

struct AnosovWitness {
  int c = 0;
  UnitAssignment units;
  std::vector<int> exponents;
  std::vector<IntPolynomial> vertex_polynomials;  // per component
  LyndonBasis basis;
  IntMatrix matrix;
  std::vector<ContentBlock> blocks;
  IntPolynomial char_poly;
  bool automorphism = false;
  bool integer_like = false;
  bool hyperbolic = false;
  int candidates_tried = 0;
};

/// Full pipeline for the standard datum. Throws NotAnosovError when the
/// standard form is not Anosov, UnsupportedDegree for component sizes
/// outside {2, 3}, PreconditionError when the exponent range is exhausted.
AnosovWitness build_witness(const Graph& g, int c, const SearchOptions& options = {});

/// Block char polys, hyperbolicity proofs, product and flags for m.
void certify(const QuotientGraph& q, AnosovWitness& w);

}  // namespace anosov
