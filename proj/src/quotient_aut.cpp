#include "anosov/quotient_aut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "anosov/errors.hpp"

namespace anosov {

bool is_quotient_automorphism(const QuotientGraph& q, const Permutation& p) {
  if (p.degree() != q.size()) return false;
  for (int a = 0; a < q.size(); ++a) {
    if (q.weight[a] != q.weight[p(a)]) return false;
    for (int b = 0; b < q.size(); ++b) {
      if (q.has_edge(a, b) != q.has_edge(p(a), p(b))) return false;
    }
  }
  return true;
}

namespace {

struct NodeColor {
  int weight;
  int degree;
  bool loop;
  friend bool operator==(const NodeColor&, const NodeColor&) = default;
};

class AutSearch {
 public:
  AutSearch(const QuotientGraph& q, std::size_t cap) : q_(q), cap_(cap) {
    for (int a = 0; a < q.size(); ++a) {
      colors_.push_back({q.weight[a], popcount(q.adjacency[a] & ~bit(a)), q.has_loop(a)});
    }
    image_.assign(q.size(), -1);
    used_.assign(q.size(), 0);
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(int node) {
    if (node == q_.size()) {
      found_.emplace_back(image_);
      if (found_.size() > cap_) {
        throw CapExceeded("quotient automorphism group exceeds cap " + std::to_string(cap_));
      }
      return;
    }
    for (int cand = 0; cand < q_.size(); ++cand) {
      if (used_[cand] || !(colors_[cand] == colors_[node])) continue;
      bool ok = true;
      for (int prev = 0; prev < node && ok; ++prev) {
        ok = q_.has_edge(node, prev) == q_.has_edge(cand, image_[prev]);
      }
      if (!ok) continue;
      image_[node] = cand;
      used_[cand] = 1;
      extend(node + 1);
      used_[cand] = 0;
      image_[node] = -1;
    }
  }

  const QuotientGraph& q_;
  std::size_t cap_;
  std::vector<NodeColor> colors_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<Permutation> found_;
};

// Picks a small generating set out of a full element list.
std::vector<Permutation> generating_subset(int degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::set<Permutation> span{Permutation::identity(degree)};
  for (const auto& p : elements) {
    if (span.count(p)) continue;
    gens.push_back(p);
    std::vector<Permutation> queue(span.begin(), span.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& s : gens) {
        auto next = s * queue[head];
        if (span.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return gens;
}

// Element-index view of a materialized group.
class IndexedGroup {
 public:
  explicit IndexedGroup(const PermGroup& g) : g_(g) {
    const auto& el = g.elements();
    for (std::size_t i = 0; i < el.size(); ++i) index_.emplace(el[i], static_cast<int>(i));
    inverse_.resize(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) inverse_[i] = index_of(el[i].inverse());
  }

  int size() const { return static_cast<int>(g_.order()); }
  int index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InternalError("element outside the group");
    return it->second;
  }
  const Permutation& at(int i) const { return g_.elements()[i]; }
  int mul(int a, int b) const { return index_of(at(a) * at(b)); }
  /// g h g^-1
  int conj(int h, int g) const { return index_of(at(h).conjugated_by(at(g))); }

  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<char> in(size(), 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int s : gens) {
        int next = mul(s, queue[head]);
        if (!in[next]) {
          in[next] = 1;
          queue.push_back(next);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  /// Least conjugate (as sorted index list) and an element achieving it.
  std::pair<std::vector<int>, int> canonical(const std::vector<int>& sub) const {
    std::vector<int> best = sub;
    int best_g = 0;
    std::vector<int> conj_set(sub.size());
    for (int g = 1; g < size(); ++g) {
      for (std::size_t i = 0; i < sub.size(); ++i) conj_set[i] = conj(sub[i], g);
      std::sort(conj_set.begin(), conj_set.end());
      if (conj_set < best) {
        best = conj_set;
        best_g = g;
      }
    }
    return {best, best_g};
  }

 private:
  const PermGroup& g_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<int> inverse_;
};

}  // namespace

PermGroup automorphisms(const QuotientGraph& q, const GroupCaps& caps) {
  auto elements = AutSearch(q, caps.max_group_order).run();
  std::sort(elements.begin(), elements.end());
  auto gens = generating_subset(q.size(), elements);
  return PermGroup::generate(q.size(), std::move(gens), caps.max_group_order);
}

std::vector<PermGroup> subgroup_classes(const PermGroup& g, const GroupCaps& caps) {
  if (g.order() > caps.max_group_order) {
    throw CapExceeded("group order exceeds cap " + std::to_string(caps.max_group_order));
  }
  IndexedGroup ig(g);

  // One generator per distinct cyclic subgroup.
  std::vector<int> cyclic_gens;
  {
    std::set<std::vector<int>> seen;
    for (int x = 1; x < ig.size(); ++x) {
      if (seen.insert(ig.closure({x})).second) cyclic_gens.push_back(x);
    }
  }

  struct Rep {
    std::vector<int> elements;
    std::vector<int> gens;
  };
  std::vector<Rep> reps{{{0}, {}}};
  std::set<std::vector<int>> known{{0}};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (int x : cyclic_gens) {
      const auto& cur = reps[head];
      if (std::binary_search(cur.elements.begin(), cur.elements.end(), x)) continue;
      auto gens = cur.gens;
      gens.push_back(x);
      auto sub = ig.closure(gens);
      auto [canon, by] = ig.canonical(sub);
      if (!known.insert(canon).second) continue;
      if (known.size() > caps.max_subgroups) {
        throw CapExceeded("subgroup class count exceeds cap " + std::to_string(caps.max_subgroups));
      }
      for (int& s : gens) s = ig.conj(s, by);
      reps.push_back({std::move(canon), std::move(gens)});
    }
  }

  std::sort(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  std::vector<PermGroup> out;
  out.reserve(reps.size());
  for (const auto& r : reps) {
    std::vector<Permutation> gens;
    for (int s : r.gens) gens.push_back(ig.at(s));
    out.push_back(PermGroup::generate(g.degree(), std::move(gens), caps.max_group_order));
  }
  return out;
}

void validate_datum(const QuotientGraph& q, const GaloisDatum& d) {
  if (d.group.degree() != q.size() || d.tau.degree() != q.size()) {
    throw InputError("datum degree does not match the number of coherent components");
  }
  for (const auto& s : d.group.generators()) {
    if (!is_quotient_automorphism(q, s)) {
      throw InputError("datum generator " + s.to_string() + " is not a quotient automorphism");
    }
  }
  if (!d.group.contains(d.tau)) throw InputError("tau is not an element of the datum group");
  if (!(d.tau * d.tau).is_identity()) throw InputError("tau is not an involution");
}

GaloisDatum standard_datum(const QuotientGraph& q) {
  return {PermGroup::trivial(q.size()), Permutation::identity(q.size()), "standard"};
}

std::vector<GaloisDatum> galois_data(const QuotientGraph& q, const GroupCaps& caps) {
  auto aut = automorphisms(q, caps);
  auto classes = subgroup_classes(aut, caps);

  std::vector<GaloisDatum> out;
  std::map<std::size_t, int> per_order;
  for (const auto& h : classes) {
    if (h.order() == 1) {
      out.push_back(standard_datum(q));
      continue;
    }
    const int k = ++per_order[h.order()];
    std::vector<Permutation> normalizer;
    for (const auto& g : aut.elements()) {
      bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                    [&](const Permutation& s) { return h.contains(s.conjugated_by(g)); });
      if (normalizes) normalizer.push_back(g);
    }
    std::set<Permutation> covered;
    for (const auto& t : h.elements()) {
      if (!(t * t).is_identity() || covered.count(t)) continue;
      for (const auto& g : normalizer) covered.insert(t.conjugated_by(g));
      std::string label = "H" + std::to_string(h.order()) + "." + std::to_string(k) +
                          "/tau=" + t.to_string();
      out.push_back({h, t, std::move(label)});
    }
  }
  return out;
}

bool are_equivalent(const QuotientGraph& q, const GaloisDatum& a, const GaloisDatum& b,
                    const GroupCaps& caps) {
  validate_datum(q, a);
  validate_datum(q, b);
  if (a.group.order() != b.group.order() || a.tau.order() != b.tau.order()) return false;
  auto aut = automorphisms(q, caps);
  for (const auto& phi : aut.elements()) {
    if (a.tau.conjugated_by(phi) != b.tau) continue;
    bool maps = std::all_of(a.group.generators().begin(), a.group.generators().end(),
                            [&](const Permutation& s) { return b.group.contains(s.conjugated_by(phi)); });
    if (maps) return true;
  }
  return false;
}

}  // namespace anosov
