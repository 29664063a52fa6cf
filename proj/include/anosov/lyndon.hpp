#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "anosov/graph.hpp"

namespace anosov {

/// A word over the vertices, letters are vertex indices. Letters compare by
/// vertex declaration order.
using Word = std::vector<int>;

/// Per-vertex letter counts.
using WeightVector = std::vector<int>;

/// Lexicographically greatest word in the commutation class of w, where
/// letters non-adjacent in g commute. Throws InputError for unknown letters.
Word trace_normal_form(const Word& w, const Graph& g);

/// Strictly smaller than each proper rotation.
bool is_lyndon_word(const Word& w);

/// True iff the normal form of w is a Lyndon word.
bool is_lyndon_element(const Word& w, const Graph& g);

WeightVector weight_of(const Word& w, int vertex_count);

struct LyndonCaps {
  std::size_t max_basis = 20000;
  int max_class = 8;
};

struct LyndonElement {
  Word word;  // normal form
  WeightVector weight;
  int left = -1;  // bracket children (basis indices); -1 for generators
  int right = -1;

  int length() const { return static_cast<int>(word.size()); }
};

/// Sparse integer combination of basis elements, sorted by index, no zeros.
using Combination = std::vector<std::pair<int, std::int64_t>>;

/// Lie bracket of basis elements, stored for pairs (i, j), i != j, whose
/// lengths sum to at most c. Missing pairs bracket to zero.
struct StructureTable {
  std::map<std::pair<int, int>, Combination> entries;

  const Combination& operator()(int i, int j) const;
};

/// Lyndon elements of length <= c ordered by (length, word).
struct LyndonBasis {
  int c = 0;
  int vertex_count = 0;
  std::vector<LyndonElement> elements;
  StructureTable table;

  int size() const { return static_cast<int>(elements.size()); }
  /// Index of the element with this normal form, or -1.
  int find(const Word& normal_form) const;
  /// [first, last) index range of elements of the given length.
  std::pair<int, int> degree_range(int length) const;
};

/// Enumerates Lyndon elements with their standard bracketing. The table is
/// left empty. Throws CapExceeded past caps.
LyndonBasis enumerate_lyndon(const Graph& g, int c, const LyndonCaps& caps = {});

/// Bracket table of the basis; throws InternalError if an expansion fails
/// to reduce against the basis with integer coefficients.
StructureTable structure_constants(const Graph& g, const LyndonBasis& basis);

/// enumerate_lyndon followed by structure_constants.
LyndonBasis lyndon_basis(const Graph& g, int c, const LyndonCaps& caps = {});

std::size_t dimension(const Graph& g, int c, const LyndonCaps& caps = {});

/// Closed-form weight set: unit vectors plus every vector with connected
/// support of size >= 2 and total <= c.
std::set<WeightVector> weight_set(const Graph& g, int c);

/// Exponent vectors of the eigenvalues of a vertex-diagonal automorphism,
/// read off from the basis weights.
std::set<WeightVector> diagonal_eigenvalue_exponents(const Graph& g, int c,
                                                     const LyndonCaps& caps = {});

/// Sparse polynomial in the trace algebra: normal-form word -> coefficient.
using TracePolynomial = std::map<Word, std::int64_t>;

/// Expansion of a basis element's bracketing as commutators of traces.
TracePolynomial expand_element(const Graph& g, const LyndonBasis& basis, int index);

/// P Q - Q P in the trace algebra.
TracePolynomial trace_commutator(const Graph& g, const TracePolynomial& p,
                                 const TracePolynomial& q);

}  // namespace anosov
