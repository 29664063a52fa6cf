#include "anosov/units.hpp"

#include <array>

#include "anosov/errors.hpp"

namespace anosov {

bool is_squarefree(long long d) {
  if (d < 1) return false;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

long long nth_squarefree(int k) {
  if (k < 0) throw InputError("negative catalog seed");
  long long d = 1;
  for (int seen = -1; seen < k;) {
    ++d;
    if (is_squarefree(d)) ++seen;
  }
  return d;
}

PellSolution pell_fundamental_unit(long long d) {
  if (d < 2 || !is_squarefree(d)) {
    throw InputError("Pell equation needs a squarefree d >= 2 (got " + std::to_string(d) + ")");
  }
  // Continued fraction of sqrt(d): a_{k+1} = floor((a0 + m) / q), with
  // convergents h/k; the first convergent of norm +-1 is fundamental.
  const BigInt dd = d;
  const BigInt a0 = boost::multiprecision::sqrt(dd);
  BigInt m = 0, q = 1, a = a0;
  BigInt h_prev = 1, h = a0;
  BigInt k_prev = 0, k = 1;
  for (;;) {
    BigInt norm = h * h - dd * k * k;
    if (norm == 1 || norm == -1) return {h, k, norm.convert_to<int>()};
    m = a * q - m;
    q = (dd - m * m) / q;
    a = (a0 + m) / q;
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
}

namespace {

struct CubicEntry {
  std::array<long long, 4> ascending;
  const char* label;
};

// Totally real cubic units: minimal polynomials with three real roots and
// constant term +-1.
constexpr std::array<CubicEntry, 5> kCubic{{
    {{1, -2, -1, 1}, "cubic disc 49"},
    {{1, -3, 0, 1}, "cubic disc 81"},
    {{-1, -3, 1, 1}, "cubic disc 148"},
    {{1, -4, 1, 1}, "cubic disc 169"},
    {{1, -4, 0, 1}, "cubic disc 229"},
}};

}  // namespace

int cubic_catalog_size() { return static_cast<int>(kCubic.size()); }

UnitSpec catalog_unit(int degree, int seed) {
  if (seed < 0) throw InputError("negative catalog seed");
  if (degree == 2) {
    const long long d = nth_squarefree(seed);
    const auto pell = pell_fundamental_unit(d);
    // Unit x + y sqrt(d): X^2 - 2x X + (x^2 - d y^2).
    IntPolynomial poly(std::vector<BigInt>{BigInt(pell.norm), -2 * pell.x, BigInt(1)});
    std::string label = "quadratic d=" + std::to_string(d) + " unit " + pell.x.str() + "+" +
                        pell.y.str() + "*sqrt(" + std::to_string(d) + ")";
    return {2, poly, 2, 0, label};
  }
  if (degree == 3) {
    if (seed >= cubic_catalog_size()) {
      throw InputError("cubic unit catalog has only " + std::to_string(cubic_catalog_size()) +
                       " entries");
    }
    const auto& e = kCubic[seed];
    IntPolynomial poly{e.ascending[0], e.ascending[1], e.ascending[2], e.ascending[3]};
    return {3, poly, 3, 0, e.label};
  }
  throw UnsupportedDegree("unsupported component degree " + std::to_string(degree) +
                          " (the unit catalog covers degrees 2 and 3)");
}

}  // namespace anosov
