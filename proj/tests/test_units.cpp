#include <doctest.h>

#include <set>

#include "anosov/errors.hpp"
#include "anosov/units.hpp"

using namespace anosov;

namespace {

bool has_rational_root(const IntPolynomial& p) {
  // monic with constant term +-1: only +-1 can be rational roots
  return p.evaluate(BigInt(1)) == 0 || p.evaluate(BigInt(-1)) == 0;
}

bool is_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = sqrt(n);
  return r * r == n;
}

}  // namespace

TEST_SUITE("units") {
  TEST_CASE("known fundamental units") {
    struct Case {
      long long d;
      const char* x;
      const char* y;
      int norm;
    };
    const Case cases[] = {{2, "1", "1", -1},       {3, "2", "1", 1},          {5, "2", "1", -1},
                          {13, "18", "5", -1},     {61, "29718", "3805", -1}, {94, "2143295", "221064", 1},
                          {109, "8890182", "851525", -1}};
    for (const auto& c : cases) {
      auto s = pell_fundamental_unit(c.d);
      CHECK(s.x == BigInt(c.x));
      CHECK(s.y == BigInt(c.y));
      CHECK(s.norm == c.norm);
    }
  }

  TEST_CASE("pell solutions are smallest by search") {
    for (long long d = 2; d <= 60; ++d) {
      if (!is_squarefree(d)) continue;
      auto s = pell_fundamental_unit(d);
      CHECK(s.x * s.x - d * s.y * s.y == s.norm);
      CHECK((s.norm == 1 || s.norm == -1));
      if (s.y > 2000) continue;
      for (long long y = 1; y < s.y; ++y) {
        for (int sign : {-1, 1}) {
          CHECK_FALSE(is_square(BigInt(d * y * y + sign)));
        }
      }
    }
  }

  TEST_CASE("squarefree numbers") {
    CHECK(is_squarefree(2));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(30));
    const long long first[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17};
    for (int k = 0; k < 11; ++k) CHECK(nth_squarefree(k) == first[k]);
    CHECK_THROWS_AS(pell_fundamental_unit(4), InputError);
    CHECK_THROWS_AS(pell_fundamental_unit(1), InputError);
  }

  TEST_CASE("quadratic catalog") {
    std::set<std::vector<BigInt>> seen;
    for (int k = 0; k < 12; ++k) {
      auto u = catalog_unit(2, k);
      CHECK(u.degree == 2);
      CHECK(u.real_embeddings == 2);
      CHECK(u.complex_pairs == 0);
      const auto& p = u.minimal_polynomial;
      CHECK(p.is_monic());
      CHECK(abs(p.coeff(0)) == 1);
      const BigInt disc = discriminant(p);
      CHECK(disc > 0);
      CHECK_FALSE(is_square(disc));
      CHECK(seen.insert(p.coefficients()).second);
    }
  }

  TEST_CASE("cubic catalog") {
    const BigInt discs[] = {49, 81, 148, 169, 229};
    REQUIRE(cubic_catalog_size() == 5);
    std::set<std::vector<BigInt>> seen;
    for (int k = 0; k < cubic_catalog_size(); ++k) {
      auto u = catalog_unit(3, k);
      const auto& p = u.minimal_polynomial;
      CHECK(u.degree == 3);
      CHECK(p.is_monic());
      CHECK(abs(p.coeff(0)) == 1);
      CHECK_FALSE(has_rational_root(p));
      CHECK(discriminant(p) == discs[k]);
      CHECK(count_real_roots(p) == 3);
      CHECK(u.real_embeddings == 3);
      CHECK(seen.insert(p.coefficients()).second);
    }
    CHECK_THROWS_AS(catalog_unit(3, 5), InputError);
    CHECK_THROWS_AS(catalog_unit(4, 0), UnsupportedDegree);
    CHECK_THROWS_AS(catalog_unit(1, 0), UnsupportedDegree);
  }
}
