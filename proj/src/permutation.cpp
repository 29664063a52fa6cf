#include "anosov/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "anosov/errors.hpp"

namespace anosov {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || hit[x]) throw InputError("not a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int x = cyc[i];
      if (x < 0 || x >= n) throw InputError("cycle entry " + std::to_string(x) + " out of range");
      if (used[x]) throw InputError("cycles are not disjoint at " + std::to_string(x));
      used[x] = 1;
      img[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

int Permutation::order() const {
  int result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<int>(c.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cyc;
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) out.push_back(i);
  return out;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "id";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  // (g p g^-1)(g(x)) = g(p(x))
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) img[g(x)] = g(images_[x]);
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("composing permutations of different degree");
  std::vector<int> img(a.degree());
  for (int x = 0; x < a.degree(); ++x) img[x] = a(b(x));
  return Permutation(std::move(img));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators,
                              std::size_t max_order) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& p : generators) {
    if (p.degree() != degree) throw InputError("generator has wrong degree");
  }
  std::erase_if(generators, [](const Permutation& p) { return p.is_identity(); });
  g.generators_ = std::move(generators);

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : g.generators_) {
      Permutation next = s * queue[head];
      if (seen.insert(next).second) {
        if (seen.size() > max_order) {
          throw CapExceeded("permutation group order exceeds cap " + std::to_string(max_order));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  g.elements_ = std::move(queue);
  return g;
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

std::vector<int> PermGroup::orbit(int x) const {
  std::vector<int> out;
  for (const auto& p : elements_) out.push_back(p(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace anosov
