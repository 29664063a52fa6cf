#include "anosov/lyndon.hpp"

#include <algorithm>
#include <functional>

#include "anosov/errors.hpp"

namespace anosov {

Word trace_normal_form(const Word& w, const Graph& g) {
  for (int x : w) {
    if (x < 0 || x >= g.size()) throw InputError("letter " + std::to_string(x) + " is not a vertex");
  }
  // Greedy: the lex-max representative starts with the largest letter that
  // can be commuted to the front; recurse on the remainder.
  Word rest = w;
  Word out;
  out.reserve(w.size());
  while (!rest.empty()) {
    int best_pos = -1;
    VertexSet blocked = 0;  // letters seen so far
    for (std::size_t i = 0; i < rest.size(); ++i) {
      int x = rest[i];
      bool free = !contains(blocked, x) && (g.neighbors(x) & blocked) == 0;
      if (free && (best_pos < 0 || x > rest[best_pos])) best_pos = static_cast<int>(i);
      blocked |= bit(x);
    }
    out.push_back(rest[best_pos]);
    rest.erase(rest.begin() + best_pos);
  }
  return out;
}

bool is_lyndon_word(const Word& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    // compare w with rotation starting at r
    for (std::size_t k = 0; k < n; ++k) {
      int a = w[k];
      int b = w[(r + k) % n];
      if (a < b) break;
      if (a > b || k + 1 == n) return false;
    }
  }
  return true;
}

bool is_lyndon_element(const Word& w, const Graph& g) {
  return is_lyndon_word(trace_normal_form(w, g));
}

WeightVector weight_of(const Word& w, int vertex_count) {
  WeightVector e(vertex_count, 0);
  for (int x : w) ++e[x];
  return e;
}

const Combination& StructureTable::operator()(int i, int j) const {
  static const Combination kZero;
  auto it = entries.find({i, j});
  return it == entries.end() ? kZero : it->second;
}

int LyndonBasis::find(const Word& normal_form) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), normal_form,
                             [](const LyndonElement& e, const Word& w) {
                               if (e.word.size() != w.size()) return e.word.size() < w.size();
                               return e.word < w;
                             });
  if (it == elements.end() || it->word != normal_form) return -1;
  return static_cast<int>(it - elements.begin());
}

std::pair<int, int> LyndonBasis::degree_range(int length) const {
  auto lo = std::partition_point(elements.begin(), elements.end(),
                                 [&](const LyndonElement& e) { return e.length() < length; });
  auto hi = std::partition_point(lo, elements.end(),
                                 [&](const LyndonElement& e) { return e.length() == length; });
  return {static_cast<int>(lo - elements.begin()), static_cast<int>(hi - elements.begin())};
}

namespace {

// True iff w + x is in normal form, given w is.
bool extends_normal_form(const Word& w, int x, const Graph& g) {
  Word probe = w;
  probe.push_back(x);
  return trace_normal_form(probe, g) == probe;
}

}  // namespace

LyndonBasis enumerate_lyndon(const Graph& g, int c, const LyndonCaps& caps) {
  if (c < 1) throw InputError("nilpotency class must be at least 1");
  if (c > caps.max_class) {
    throw CapExceeded("nilpotency class " + std::to_string(c) + " exceeds cap " +
                      std::to_string(caps.max_class));
  }
  LyndonBasis basis;
  basis.c = c;
  basis.vertex_count = g.size();
  const std::size_t node_budget = caps.max_basis * 64;
  std::size_t nodes = 0;

  // Depth-first over normal-form words that are prefixes of Lyndon words.
  // period is the Duval period of the current prefix; prefix is Lyndon iff
  // period == length.
  Word word;
  std::function<void(std::size_t)> grow = [&](std::size_t period) {
    if (++nodes > node_budget) {
      throw CapExceeded("Lyndon enumeration exceeds search budget");
    }
    if (period == word.size()) {
      basis.elements.push_back({word, weight_of(word, g.size()), -1, -1});
      if (basis.elements.size() > caps.max_basis) {
        throw CapExceeded("Lyndon basis exceeds cap " + std::to_string(caps.max_basis));
      }
    }
    if (static_cast<int>(word.size()) == c) return;
    const int ref = word[word.size() - period];
    for (int x = ref; x < g.size(); ++x) {
      if (!extends_normal_form(word, x, g)) continue;
      word.push_back(x);
      grow(x == ref ? period : word.size());
      word.pop_back();
    }
  };
  for (int first = 0; first < g.size(); ++first) {
    word.assign(1, first);
    grow(1);
  }

  std::sort(basis.elements.begin(), basis.elements.end(),
            [](const LyndonElement& a, const LyndonElement& b) {
              if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
              return a.word < b.word;
            });

  // Standard factorization: right factor is the least proper suffix.
  for (auto& e : basis.elements) {
    if (e.length() < 2) continue;
    std::size_t split = 1;
    for (std::size_t s = 2; s < e.word.size(); ++s) {
      if (std::lexicographical_compare(e.word.begin() + s, e.word.end(), e.word.begin() + split,
                                       e.word.end())) {
        split = s;
      }
    }
    Word u(e.word.begin(), e.word.begin() + split);
    Word v(e.word.begin() + split, e.word.end());
    e.left = basis.find(u);
    e.right = basis.find(v);
    if (e.left < 0 || e.right < 0) {
      throw InternalError("standard factor of a Lyndon element is not a basis element");
    }
  }
  return basis;
}

TracePolynomial trace_commutator(const Graph& g, const TracePolynomial& p,
                                 const TracePolynomial& q) {
  TracePolynomial out;
  auto accumulate = [&](const TracePolynomial& a, const TracePolynomial& b, std::int64_t sign) {
    for (const auto& [wa, ca] : a) {
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        auto& slot = out[trace_normal_form(w, g)];
        slot += sign * ca * cb;
      }
    }
  };
  accumulate(p, q, 1);
  accumulate(q, p, -1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

class Expander {
 public:
  Expander(const Graph& g, const LyndonBasis& b) : g_(g), b_(b), cache_(b.size()), done_(b.size(), 0) {}

  const TracePolynomial& operator()(int i) {
    if (!done_[i]) {
      const auto& e = b_.elements[i];
      if (e.left < 0) {
        cache_[i] = {{e.word, 1}};
      } else {
        cache_[i] = trace_commutator(g_, (*this)(e.left), (*this)(e.right));
      }
      done_[i] = 1;
    }
    return cache_[i];
  }

 private:
  const Graph& g_;
  const LyndonBasis& b_;
  std::vector<TracePolynomial> cache_;
  std::vector<char> done_;
};

// Coordinates of p on the basis; p must lie in the span of the expansions.
Combination reduce(TracePolynomial p, const LyndonBasis& basis, Expander& expand) {
  Combination out;
  while (!p.empty()) {
    const auto [lead, coeff] = *p.begin();
    int k = basis.find(lead);
    if (k < 0) throw InternalError("bracket expansion leaves a non-Lyndon leading trace");
    const auto& phi = expand(k);
    const std::int64_t unit = phi.begin()->second;
    if (phi.begin()->first != lead || (unit != 1 && unit != -1)) {
      throw InternalError("basis expansion lacks a unit leading term");
    }
    const std::int64_t a = coeff * unit;
    for (const auto& [w, cw] : phi) {
      auto it = p.find(w);
      std::int64_t v = (it == p.end() ? 0 : it->second) - a * cw;
      if (v == 0) {
        if (it != p.end()) p.erase(it);
      } else if (it == p.end()) {
        p.emplace(w, v);
      } else {
        it->second = v;
      }
    }
    out.emplace_back(k, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TracePolynomial expand_element(const Graph& g, const LyndonBasis& basis, int index) {
  Expander ex(g, basis);
  return ex(index);
}

StructureTable structure_constants(const Graph& g, const LyndonBasis& basis) {
  Expander expand(g, basis);
  StructureTable table;
  for (int i = 0; i < basis.size(); ++i) {
    const auto& phi = expand(i);
    if (phi.empty() || phi.begin()->first != basis.elements[i].word || phi.begin()->second != 1) {
      throw InternalError("expansion of a Lyndon element does not lead with its own trace");
    }
  }
  for (int i = 0; i < basis.size(); ++i) {
    for (int j = i + 1; j < basis.size(); ++j) {
      if (basis.elements[i].length() + basis.elements[j].length() > basis.c) continue;
      auto comb = reduce(trace_commutator(g, expand(i), expand(j)), basis, expand);
      if (comb.empty()) continue;
      Combination neg = comb;
      for (auto& [k, a] : neg) a = -a;
      table.entries.emplace(std::pair{i, j}, std::move(comb));
      table.entries.emplace(std::pair{j, i}, std::move(neg));
    }
  }
  return table;
}

LyndonBasis lyndon_basis(const Graph& g, int c, const LyndonCaps& caps) {
  auto basis = enumerate_lyndon(g, c, caps);
  basis.table = structure_constants(g, basis);
  return basis;
}

std::size_t dimension(const Graph& g, int c, const LyndonCaps& caps) {
  return enumerate_lyndon(g, c, caps).elements.size();
}

std::set<WeightVector> weight_set(const Graph& g, int c) {
  std::set<WeightVector> out;
  const int n = g.size();
  for (int v = 0; v < n; ++v) {
    WeightVector e(n, 0);
    e[v] = 1;
    out.insert(e);
  }
  // Connected supports of size 2..c, grown from their least vertex.
  std::set<VertexSet> supports;
  std::function<void(VertexSet, int)> grow = [&](VertexSet s, int least) {
    if (popcount(s) >= 2) supports.insert(s);
    if (popcount(s) == c) return;
    VertexSet frontier = 0;
    for (int v : members(s)) frontier |= g.neighbors(v);
    frontier &= ~s & ~full_mask(least + 1);
    for (int v : members(frontier)) {
      if (!supports.count(s | bit(v))) grow(s | bit(v), least);
    }
  };
  for (int v = 0; v < n; ++v) grow(bit(v), v);

  for (VertexSet s : supports) {
    auto verts = members(s);
    WeightVector e(n, 0);
    for (int v : verts) e[v] = 1;
    // Distribute the remaining budget over the support.
    std::function<void(std::size_t, int)> spread = [&](std::size_t i, int budget) {
      if (i == verts.size()) {
        out.insert(e);
        return;
      }
      for (int extra = 0; extra <= budget; ++extra) {
        e[verts[i]] = 1 + extra;
        spread(i + 1, budget - extra);
      }
      e[verts[i]] = 1;
    };
    spread(0, c - static_cast<int>(verts.size()));
  }
  return out;
}

std::set<WeightVector> diagonal_eigenvalue_exponents(const Graph& g, int c,
                                                     const LyndonCaps& caps) {
  std::set<WeightVector> out;
  for (const auto& e : enumerate_lyndon(g, c, caps).elements) out.insert(e.weight);
  return out;
}

}  // namespace anosov
