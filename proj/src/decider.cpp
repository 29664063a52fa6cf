#include "anosov/decider.hpp"

#include <algorithm>
#include <numeric>

#include "anosov/errors.hpp"

namespace anosov {

NodeSet apply(const Permutation& p, NodeSet s) {
  NodeSet out = 0;
  for (int x : members(s)) out |= bit(p(x));
  return out;
}

bool nodeset_less(NodeSet a, NodeSet b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  return members(a) < members(b);
}

std::string SetMargin::sum_string() const {
  long long num = twice_sum;
  long long den = 2;
  long long g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

std::vector<int> z_function_twice(const QuotientGraph& q, const GaloisDatum& d) {
  validate_datum(q, d);
  std::vector<int> z(q.size(), 1);
  for (int node = 0; node < q.size(); ++node) {
    for (int y : d.group.orbit(node)) {
      if (d.tau(y) == y) {
        z[node] = 2;
        break;
      }
    }
  }
  return z;
}

std::vector<NodeSet> connected_subsets(const Graph& g, const QuotientGraph& q,
                                       std::size_t max_sets) {
  std::vector<NodeSet> out;
  // Exclusion-list growth over quotient adjacency: each quotient-connected
  // set is produced once, from its least node.
  auto rec = [&](auto&& self, NodeSet s, NodeSet cand, NodeSet excl) -> void {
    out.push_back(s);
    if (out.size() > max_sets) {
      throw CapExceeded("connected set enumeration exceeds cap " + std::to_string(max_sets));
    }
    for (int v : members(cand)) {
      excl |= bit(v);
      NodeSet next = (cand | q.adjacency[v]) & ~s & ~excl;
      self(self, s | bit(v), next, excl);
    }
  };
  for (int r = 0; r < q.size(); ++r) {
    NodeSet below = full_mask(r + 1);
    rec(rec, bit(r), q.adjacency[r] & ~below, below);
  }
  std::erase_if(out, [&](NodeSet s) { return !is_connected_componentset(g, q, s); });
  std::sort(out.begin(), out.end(), nodeset_less);
  return out;
}

namespace {

void check_class(int c) {
  if (c < 2) throw InputError("nilpotency class must be at least 2 (got " + std::to_string(c) + ")");
}

bool is_invariant(const PermGroup& h, NodeSet s) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& p) { return apply(p, s) == s; });
}

// Shared tail of every decision variant: the first failing set is the
// witness; otherwise all sets of minimal margin bind.
Verdict finish(int c, std::string label, const std::vector<SetMargin>& qualifying) {
  Verdict v;
  v.c = c;
  v.datum = std::move(label);
  for (const auto& m : qualifying) {
    if (m.twice_margin <= 0) {
      v.anosov = false;
      v.witness = m;
      return v;
    }
  }
  v.anosov = true;
  if (qualifying.empty()) return v;
  long long best = qualifying.front().twice_margin;
  for (const auto& m : qualifying) best = std::min(best, m.twice_margin);
  for (const auto& m : qualifying) {
    if (m.twice_margin == best) v.binding.push_back(m);
  }
  return v;
}

SetMargin margin_of(const QuotientGraph& q, const std::vector<int>& z2, NodeSet set, NodeSet closure,
                    int c) {
  SetMargin m{set, closure, 0, 0};
  for (int x : members(closure)) m.twice_sum += static_cast<long long>(z2[x]) * q.weight[x];
  m.twice_margin = m.twice_sum - 2LL * c;
  return m;
}

}  // namespace

Verdict decide(const Graph& g, int c, const GaloisDatum& d) {
  check_class(c);
  auto q = quotient_graph(g);
  auto z2 = z_function_twice(q, d);
  std::vector<SetMargin> qualifying;
  for (NodeSet a : connected_subsets(g, q)) {
    NodeSet closure = a | apply(d.tau, a);
    if (!is_invariant(d.group, closure)) continue;
    qualifying.push_back(margin_of(q, z2, a, closure, c));
    if (qualifying.back().twice_margin <= 0) break;
  }
  return finish(c, d.label, qualifying);
}

Verdict decide_standard(const Graph& g, int c) {
  check_class(c);
  auto q = quotient_graph(g);
  const std::vector<int> z2(q.size(), 2);
  std::vector<NodeSet> candidates;
  for (int a = 0; a < q.size(); ++a) {
    if (q.weight[a] == 1 || q.has_loop(a)) candidates.push_back(bit(a));
  }
  for (auto [a, b] : q.edges()) {
    if (a != b) candidates.push_back(bit(a) | bit(b));
  }
  std::sort(candidates.begin(), candidates.end(), nodeset_less);
  std::vector<SetMargin> qualifying;
  for (NodeSet s : candidates) qualifying.push_back(margin_of(q, z2, s, s, c));
  return finish(c, standard_datum(q).label, qualifying);
}

Verdict decide_real(const Graph& g, int c, const GaloisDatum& d) {
  check_class(c);
  if (!d.tau.is_identity()) throw InputError("decide_real needs a datum with tau = id");
  auto q = quotient_graph(g);
  validate_datum(q, d);
  const std::vector<int> z2(q.size(), 2);
  std::vector<SetMargin> qualifying;
  for (NodeSet a : connected_subsets(g, q)) {
    if (!is_invariant(d.group, a)) continue;
    qualifying.push_back(margin_of(q, z2, a, a, c));
    if (qualifying.back().twice_margin <= 0) break;
  }
  return finish(c, d.label, qualifying);
}

bool Classification::any_anosov() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.anosov; });
}

Classification classify(const Graph& g, int c, const GroupCaps& caps) {
  check_class(c);
  Classification out;
  out.c = c;
  out.data = galois_data(quotient_graph(g), caps);
  for (const auto& d : out.data) out.verdicts.push_back(decide(g, c, d));
  return out;
}

Verdict oracle_decide(const Graph& g, int c, const GaloisDatum& d) {
  check_class(c);
  auto q = quotient_graph(g);
  const int k = q.size();
  if (k > 12) throw CapExceeded("oracle handles at most 12 coherent components");
  validate_datum(q, d);

  // z from its defining condition: some sigma in H has tau(sigma(x)) = sigma(x).
  std::vector<int> z2(k, 1);
  for (int x = 0; x < k; ++x) {
    for (const auto& s : d.group.elements()) {
      if ((d.tau * s)(x) == s(x)) z2[x] = 2;
    }
  }

  auto connected = [&](NodeSet a) {
    std::vector<int> verts;
    for (int x = 0; x < k; ++x) {
      if ((a >> x) & 1U) {
        for (int v = 0; v < g.size(); ++v) {
          if ((q.members[x] >> v) & 1U) verts.push_back(v);
        }
      }
    }
    if (verts.empty()) return false;
    std::vector<char> seen(verts.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (!seen[j] && g.adjacent(verts[i], verts[j])) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  };

  std::vector<NodeSet> sets;
  for (NodeSet a = 1; a < (NodeSet{1} << k); ++a) sets.push_back(a);
  std::sort(sets.begin(), sets.end(), nodeset_less);

  std::vector<SetMargin> qualifying;
  for (NodeSet a : sets) {
    if (!connected(a)) continue;
    NodeSet closure = a | apply(d.tau, a);
    bool invariant = std::all_of(d.group.elements().begin(), d.group.elements().end(),
                                 [&](const Permutation& s) { return apply(s, closure) == closure; });
    if (!invariant) continue;
    qualifying.push_back(margin_of(q, z2, a, closure, c));
  }
  return finish(c, d.label, qualifying);
}

}  // namespace anosov
