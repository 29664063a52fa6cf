#include "anosov/witness.hpp"

#include <algorithm>
#include <map>

#include "anosov/decider.hpp"
#include "anosov/errors.hpp"

namespace anosov {

namespace {

using SparseVector = std::map<int, BigInt>;

void add_scaled(SparseVector& acc, const SparseVector& v, const BigInt& k) {
  for (const auto& [i, x] : v) {
    auto& slot = acc[i];
    slot += k * x;
    if (slot == 0) acc.erase(i);
  }
}

SparseVector bracket(const StructureTable& table, const SparseVector& x, const SparseVector& y) {
  SparseVector out;
  for (const auto& [i, xi] : x) {
    for (const auto& [j, yj] : y) {
      if (i == j) continue;
      const BigInt k = xi * yj;
      for (const auto& [l, a] : table(i, j)) {
        auto& slot = out[l];
        slot += k * a;
        if (slot == 0) out.erase(l);
      }
    }
  }
  return out;
}

SparseVector column(const IntMatrix& m, int k) {
  SparseVector v;
  for (int r = 0; r < m.rows(); ++r) {
    if (m(r, k) != 0) v.emplace(r, m(r, k));
  }
  return v;
}

SparseVector image_of(const IntMatrix& m, const Combination& comb) {
  SparseVector out;
  for (const auto& [k, a] : comb) add_scaled(out, column(m, k), BigInt(a));
  return out;
}

void require_standard_anosov(const Graph& g, int c) {
  if (!decide_standard(g, c).anosov) {
    throw NotAnosovError("not Anosov: the standard rational form fails the decision rule at c=" +
                         std::to_string(c));
  }
}

void check_assignment(const QuotientGraph& q, const UnitAssignment& units) {
  if (static_cast<int>(units.size()) != q.size()) {
    throw InputError("unit assignment size differs from the number of coherent components");
  }
  for (int j = 0; j < q.size(); ++j) {
    if (units[j].degree != q.weight[j] || units[j].minimal_polynomial.degree() != q.weight[j]) {
      throw InputError("unit degree does not match the size of component " + std::to_string(j));
    }
  }
}

// position of each vertex inside its component
std::vector<int> positions(const QuotientGraph& q, int vertex_count) {
  std::vector<int> pos(vertex_count, -1);
  for (int j = 0; j < q.size(); ++j) {
    int p = 0;
    for (int v : members(q.members[j])) pos[v] = p++;
  }
  return pos;
}

std::vector<int> component_of(const QuotientGraph& q, int vertex_count) {
  std::vector<int> comp(vertex_count, -1);
  for (int j = 0; j < q.size(); ++j) {
    for (int v : members(q.members[j])) comp[v] = j;
  }
  return comp;
}

bool next_tuple(std::vector<int>& n, int max_exponent) {
  for (int i = static_cast<int>(n.size()) - 1; i >= 0; --i) {
    if (n[i] < max_exponent) {
      ++n[i];
      return true;
    }
    n[i] = 1;
  }
  return false;
}

}  // namespace

UnitAssignment default_assignment(const QuotientGraph& q) {
  UnitAssignment out;
  int next_quadratic = 0;
  int next_cubic = 0;
  for (int j = 0; j < q.size(); ++j) {
    const int w = q.weight[j];
    if (w == 2) {
      out.push_back(catalog_unit(2, next_quadratic++));
    } else if (w == 3) {
      out.push_back(catalog_unit(3, next_cubic++));
    } else {
      throw UnsupportedDegree("unsupported component degree " + std::to_string(w) + " at component " +
                              std::to_string(j) + " (the unit catalog covers degrees 2 and 3)");
    }
  }
  return out;
}

std::optional<std::vector<int>> exponent_search(const Graph& g, int c, const UnitAssignment& units,
                                                const std::vector<int>* after,
                                                const SearchOptions& options) {
  require_standard_anosov(g, c);
  const auto q = quotient_graph(g);
  check_assignment(q, units);
  const auto comp = component_of(q, g.size());
  const auto pos = positions(q, g.size());
  const auto weights = weight_set(g, c);

  std::vector<int> n(q.size(), 1);
  if (after != nullptr) {
    if (after->size() != n.size()) throw InputError("exponent tuple has the wrong length");
    n = *after;
    if (!next_tuple(n, options.max_exponent)) return std::nullopt;
  }

  // log|sigma_p(xi_j)| per component and embedding, cached per precision.
  std::map<unsigned, std::vector<std::vector<BigFloat>>> logs;
  auto logs_at = [&](unsigned bits) -> const std::vector<std::vector<BigFloat>>& {
    auto it = logs.find(bits);
    if (it != logs.end()) return it->second;
    ScopedPrecision prec(bits);
    std::vector<std::vector<BigFloat>> table;
    for (const auto& u : units) {
      auto roots = real_roots(u.minimal_polynomial, bits + 16);
      if (static_cast<int>(roots.size()) != u.degree) {
        throw InputError("catalog unit '" + u.label + "' is not totally real");
      }
      std::vector<BigFloat> row;
      for (const auto& r : roots) row.push_back(log(abs(r)));
      table.push_back(std::move(row));
    }
    return logs.emplace(bits, std::move(table)).first->second;
  };

  auto accepted = [&](const std::vector<int>& exps) {
    for (unsigned bits = options.start_bits; bits <= options.max_bits; bits *= 2) {
      ScopedPrecision prec(bits);
      const auto& table = logs_at(bits);
      const BigFloat threshold = ldexp(BigFloat(1), -static_cast<int>(bits / 2));
      bool suspect = false;
      for (const auto& e : weights) {
        BigFloat sum = 0;
        for (int v = 0; v < g.size(); ++v) {
          if (e[v] != 0) sum += BigFloat(e[v] * exps[comp[v]]) * table[comp[v]][pos[v]];
        }
        if (abs(sum) <= threshold) {
          suspect = true;
          break;
        }
      }
      if (!suspect) return true;
    }
    return false;
  };

  do {
    if (accepted(n)) return n;
  } while (next_tuple(n, options.max_exponent));
  return std::nullopt;
}

IntPolynomial power_polynomial(const IntPolynomial& minimal, int exponent) {
  if (exponent < 1) throw InputError("unit exponents must be positive");
  return charpoly_berkowitz(power(companion(minimal), static_cast<unsigned>(exponent)));
}

IntMatrix induced_matrix(const Graph& g, const LyndonBasis& basis, const UnitAssignment& units,
                         const std::vector<int>& exponents) {
  const auto q = quotient_graph(g);
  check_assignment(q, units);
  if (static_cast<int>(exponents.size()) != q.size()) throw InputError("exponent tuple has the wrong length");
  const int dim = basis.size();

  std::vector<SparseVector> image(dim);
  for (int j = 0; j < q.size(); ++j) {
    const IntMatrix block = companion(power_polynomial(units[j].minimal_polynomial, exponents[j]));
    const auto verts = members(q.members[j]);
    for (std::size_t col = 0; col < verts.size(); ++col) {
      const int k = basis.find(Word{verts[col]});
      for (std::size_t row = 0; row < verts.size(); ++row) {
        const BigInt& x = block(static_cast<int>(row), static_cast<int>(col));
        if (x != 0) image[k].emplace(basis.find(Word{verts[row]}), x);
      }
    }
  }
  // Elements are ordered by length, so children come first.
  for (int k = 0; k < dim; ++k) {
    const auto& e = basis.elements[k];
    if (e.left < 0) continue;
    image[k] = bracket(basis.table, image[e.left], image[e.right]);
  }

  IntMatrix m(dim, dim);
  for (int k = 0; k < dim; ++k) {
    for (const auto& [r, x] : image[k]) m(r, k) = x;
  }
  return m;
}

bool is_lie_automorphism(const LyndonBasis& basis, const IntMatrix& m) {
  const int dim = basis.size();
  if (m.rows() != dim || m.cols() != dim) return false;
  std::vector<SparseVector> cols(dim);
  for (int k = 0; k < dim; ++k) cols[k] = column(m, k);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if (basis.elements[i].length() + basis.elements[j].length() > basis.c) continue;
      if (image_of(m, basis.table(i, j)) != bracket(basis.table, cols[i], cols[j])) return false;
    }
  }
  return true;
}

void certify(const QuotientGraph& q, AnosovWitness& w) {
  const int dim = w.basis.size();
  std::vector<int> comp(w.basis.vertex_count, -1);
  for (int j = 0; j < q.size(); ++j) {
    for (int v : members(q.members[j])) comp[v] = j;
  }
  std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
  std::vector<std::vector<int>> content_of(dim);
  for (int k = 0; k < dim; ++k) {
    std::vector<int> content(q.size(), 0);
    for (int v = 0; v < w.basis.vertex_count; ++v) content[comp[v]] += w.basis.elements[k].weight[v];
    content_of[k] = content;
    groups[{w.basis.elements[k].length(), content}].push_back(k);
  }
  for (int r = 0; r < dim; ++r) {
    for (int k = 0; k < dim; ++k) {
      if (w.matrix(r, k) != 0 && content_of[r] != content_of[k]) {
        throw InternalError("induced matrix mixes component contents");
      }
    }
  }

  w.blocks.clear();
  w.char_poly = IntPolynomial{1};
  w.hyperbolic = true;
  for (auto& [key, indices] : groups) {
    ContentBlock b;
    b.content = key.second;
    b.indices = indices;
    b.char_poly = charpoly_berkowitz(w.matrix.submatrix(indices));
    b.proof = prove_hyperbolicity(b.char_poly);
    w.hyperbolic = w.hyperbolic && b.proof.hyperbolic;
    w.char_poly = w.char_poly * b.char_poly;
    w.blocks.push_back(std::move(b));
  }
  w.integer_like = is_integer_like(w.char_poly);
  w.automorphism = is_lie_automorphism(w.basis, w.matrix);
}

AnosovWitness build_witness(const Graph& g, int c, const SearchOptions& options) {
  require_standard_anosov(g, c);
  const auto q = quotient_graph(g);
  AnosovWitness w;
  w.c = c;
  w.units = default_assignment(q);
  w.basis = lyndon_basis(g, c);

  std::optional<std::vector<int>> n;
  for (;;) {
    n = exponent_search(g, c, w.units, n ? &*n : nullptr, options);
    if (!n) throw PreconditionError("exponent search exhausted without a hyperbolic candidate");
    ++w.candidates_tried;
    w.exponents = *n;
    w.vertex_polynomials.clear();
    for (int j = 0; j < q.size(); ++j) {
      w.vertex_polynomials.push_back(power_polynomial(w.units[j].minimal_polynomial, w.exponents[j]));
    }
    w.matrix = induced_matrix(g, w.basis, w.units, w.exponents);
    certify(q, w);
    if (!w.automorphism) throw InternalError("induced matrix is not a Lie algebra automorphism");
    if (w.integer_like && w.hyperbolic) return w;
  }
}

}  // namespace anosov
