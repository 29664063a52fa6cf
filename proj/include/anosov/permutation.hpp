#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace anosov {

/// Bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError if images is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Builds a permutation of degree n from disjoint cycles, e.g. {{0, 1}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int order() const;
  /// Non-trivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  /// Points moved by the permutation.
  std::vector<int> support() const;
  /// "id" or cycle notation like "(0 1)(2 3)".
  std::string to_string() const;

  /// Conjugate g * this * g^-1.
  Permutation conjugated_by(const Permutation& g) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Composition (a * b)(x) = a(b(x)): b acts first.
Permutation operator*(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Finite permutation group with its element list materialized (desk scale).
class PermGroup {
 public:
  PermGroup() = default;

  /// Closure of the generators; throws CapExceeded past max_order elements.
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::size_t max_order = 10080);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted; elements().front() is the identity.
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  /// Orbit of a point.
  std::vector<int> orbit(int x) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

}  // namespace anosov
