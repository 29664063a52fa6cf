#include <doctest.h>

#include <random>

#include "anosov/errors.hpp"
#include "anosov/graph_families.hpp"
#include "anosov/lyndon.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

using namespace anosov;

TEST_SUITE("lyndon") {
  TEST_CASE("lyndon words") {
    CHECK(is_lyndon_word({0}));
    CHECK(is_lyndon_word({0, 1}));
    CHECK(is_lyndon_word({0, 0, 1}));
    CHECK(is_lyndon_word({0, 1, 1}));
    CHECK_FALSE(is_lyndon_word({1, 0}));
    CHECK_FALSE(is_lyndon_word({0, 1, 0, 1}));
    CHECK_FALSE(is_lyndon_word({}));
  }

  TEST_CASE("normal form moves larger letters left across commuting pairs") {
    Graph g = families::empty(3);
    CHECK(trace_normal_form({0, 1, 2}, g) == Word{2, 1, 0});
    Graph p = families::path(3);  // 0-1-2; 0 and 2 commute
    CHECK(trace_normal_form({0, 2, 1}, p) == Word{2, 0, 1});
    CHECK(trace_normal_form({0, 1, 2}, p) == Word{0, 1, 2});
    CHECK_THROWS_AS(trace_normal_form({0, 3}, p), InputError);
  }

  TEST_CASE("lyndon elements need a non-commuting pattern") {
    Graph p = families::path(3);
    CHECK(is_lyndon_element({0, 1}, p));
    CHECK_FALSE(is_lyndon_element({0, 2}, p));  // commuting letters
    CHECK(is_lyndon_element({0, 1, 2}, p));
    CHECK_FALSE(is_lyndon_element({0, 2, 1}, p));  // normal form 2 0 1 is not least among rotations
  }

  TEST_CASE("normal form against brute-force class maximum") {
    std::mt19937_64 rng(testing_support::seed() + 2);
    for (const auto& g : oracle::corpus(testing_support::seed() + 2, 40, 6)) {
      std::uniform_int_distribution<int> letter(0, g.size() - 1);
      for (int t = 0; t < 20; ++t) {
        Word w(std::uniform_int_distribution<int>(1, 7)(rng));
        for (auto& x : w) x = letter(rng);
        auto m = oracle::class_max(w, g);
        CHECK(trace_normal_form(w, g) == m);
        CHECK(is_lyndon_element(w, g) == oracle::lyndon_by_rotations(m));
      }
    }
  }

  TEST_CASE("basis of the free algebra on two letters") {
    Graph g = families::complete(2);
    auto b = lyndon_basis(g, 3);
    REQUIRE(b.size() == 5);
    CHECK(b.elements[2].word == Word{0, 1});
    CHECK(b.elements[3].word == Word{0, 0, 1});
    CHECK(b.elements[4].word == Word{0, 1, 1});
    CHECK(b.elements[3].left == 0);
    CHECK(b.elements[3].right == 2);
    CHECK(b.elements[4].left == 2);
    CHECK(b.elements[4].right == 1);
    CHECK(b.table(0, 1) == Combination{{2, 1}});
    CHECK(b.table(1, 0) == Combination{{2, -1}});
    CHECK(b.table(1, 2) == Combination{{4, -1}});
    CHECK(b.table(2, 2).empty());
    CHECK(b.degree_range(2) == std::pair<int, int>{2, 3});
    CHECK(b.find({0, 1, 1}) == 4);
    CHECK(b.find({1, 0}) == -1);
  }

  TEST_CASE("dimension in class two is vertices plus edges") {
    for (const auto& g : oracle::corpus(testing_support::seed() + 3, 60, 9)) {
      CHECK(dimension(g, 2) == static_cast<std::size_t>(g.size()) + g.edge_count());
    }
  }

  TEST_CASE("complete graphs follow the necklace count, edgeless graphs are abelian") {
    for (int n = 1; n <= 3; ++n) {
      for (int c = 1; c <= 5; ++c) {
        long long expected = 0;
        for (int k = 1; k <= c; ++k) expected += oracle::witt(n, k);
        CHECK(dimension(families::complete(n), c) == static_cast<std::size_t>(expected));
        CHECK(dimension(families::empty(n), c) == static_cast<std::size_t>(n));
      }
    }
  }

  TEST_CASE("enumeration against exhaustive word search") {
    for (const auto& g : oracle::corpus(testing_support::seed() + 4, 40, 4)) {
      for (int c = 1; c <= 5; ++c) CHECK(dimension(g, c) == oracle::brute_lyndon_count(g, c));
    }
  }

  TEST_CASE("enumerated elements are lyndon elements in normal form") {
    for (const auto& g : oracle::corpus(testing_support::seed() + 5, 30, 6)) {
      auto b = enumerate_lyndon(g, 4);
      for (int k = 0; k < b.size(); ++k) {
        const auto& e = b.elements[k];
        CHECK(oracle::class_max(e.word, g) == e.word);
        CHECK(oracle::lyndon_by_rotations(e.word));
        CHECK(e.weight == weight_of(e.word, g.size()));
        if (k > 0) {
          const auto& prev = b.elements[k - 1].word;
          CHECK((prev.size() < e.word.size() || (prev.size() == e.word.size() && prev < e.word)));
        }
      }
    }
  }

  TEST_CASE("bracket expansion has the element itself as least term") {
    for (const auto& g : oracle::corpus(testing_support::seed() + 6, 30, 5)) {
      auto b = lyndon_basis(g, 4);
      for (int k = 0; k < b.size(); ++k) {
        auto p = expand_element(g, b, k);
        REQUIRE_FALSE(p.empty());
        CHECK(p.begin()->first == b.elements[k].word);
        CHECK(p.begin()->second == 1);
      }
    }
  }

  TEST_CASE("structure constants reproduce trace commutators") {
    for (const auto& g : oracle::corpus(testing_support::seed() + 7, 25, 5)) {
      auto b = lyndon_basis(g, 4);
      std::vector<TracePolynomial> expanded;
      for (int k = 0; k < b.size(); ++k) expanded.push_back(expand_element(g, b, k));
      for (int i = 0; i < b.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
          if (b.elements[i].length() + b.elements[j].length() > 4) continue;
          TracePolynomial lhs = trace_commutator(g, expanded[i], expanded[j]);
          TracePolynomial rhs;
          for (const auto& [k, a] : b.table(i, j)) {
            for (const auto& [w, x] : expanded[k]) rhs[w] += a * x;
          }
          std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
          CHECK(lhs == rhs);
        }
      }
    }
  }

  TEST_CASE("antisymmetry and Jacobi on small graphs") {
    CHECK(oracle::lie_violations(lyndon_basis(families::complete(3), 4)) == 0);
    CHECK(oracle::lie_violations(lyndon_basis(families::cycle(5), 4)) == 0);
    CHECK(oracle::lie_violations(lyndon_basis(families::path(4), 5)) == 0);
  }

  TEST_CASE("weights of the basis match the closed-form weight set") {
    for (const auto& g : oracle::corpus(testing_support::seed() + 8, 40, 6)) {
      for (int c = 1; c <= 4; ++c) CHECK(diagonal_eigenvalue_exponents(g, c) == weight_set(g, c));
    }
  }

  TEST_CASE("caps") {
    LyndonCaps caps;
    caps.max_basis = 10;
    CHECK_THROWS_AS(lyndon_basis(families::complete(3), 4, caps), CapExceeded);
    caps = LyndonCaps{};
    caps.max_class = 3;
    CHECK_THROWS_AS(lyndon_basis(families::complete(2), 4, caps), CapExceeded);
  }
}
