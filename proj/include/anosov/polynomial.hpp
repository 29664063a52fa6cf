#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace anosov {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

/// Sets the BigFloat default precision (in bits) for its lifetime.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_digits10_;
};

/// Dense polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial monomial(const BigInt& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  BigInt coeff(int i) const;
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt evaluate(const BigInt& x) const;
  /// Sign of p(num/den), den > 0.
  int sign_at(const BigInt& num, const BigInt& den) const;
  BigFloat evaluate(const BigFloat& x) const;

  IntPolynomial derivative() const;
  /// gcd of the coefficients, non-negative.
  BigInt content() const;
  /// p / content, with a positive leading coefficient.
  IntPolynomial primitive_part() const;
  /// X^deg p(1/X).
  IntPolynomial reciprocal() const;

  std::string to_string(const std::string& var = "X") const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& p);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b; throws InternalError if b does not divide a over Z.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p divided by gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Sturm sequence of the square-free part of p; each term primitive.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Distinct real roots in (a, b], a < b rational, counted with a Sturm
/// sequence.
int count_real_roots(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Distinct real roots on the whole line.
int count_real_roots(const IntPolynomial& p);

/// Disjoint rational intervals (lo, hi], one per distinct real root,
/// sorted, each of width at most max_width.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial& p,
                                                              const Rational& max_width = Rational(1));

/// Distinct real roots to within 2^-bits, ascending, as BigFloat values at
/// the caller's current precision.
std::vector<BigFloat> real_roots(const IntPolynomial& p, unsigned bits);

/// Constant term is +-1. Throws InputError for a non-monic p.
bool is_integer_like(const IntPolynomial& p);

/// Exact evidence behind a hyperbolicity verdict.
struct HyperbolicityProof {
  bool hyperbolic = false;
  bool root_at_one = false;
  bool root_at_minus_one = false;
  IntPolynomial reciprocal_gcd;   // square-free part of gcd(p, reciprocal(p))
  IntPolynomial trace_polynomial;  // image under Y = X + 1/X
  int sturm_count = 0;             // real roots of trace_polynomial in [-2, 2]
};

/// Exact test for the absence of roots of modulus one. Throws InputError
/// for the zero polynomial.
HyperbolicityProof prove_hyperbolicity(const IntPolynomial& p);
bool is_hyperbolic(const IntPolynomial& p);

/// For a palindromic q of degree 2m, the R of degree m with
/// q(X) = X^m R(X + 1/X).
IntPolynomial trace_transform(const IntPolynomial& palindromic);

/// Discriminant of a polynomial of degree 2 or 3.
BigInt discriminant(const IntPolynomial& p);

}  // namespace anosov
