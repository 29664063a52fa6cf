#include "anosov/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "anosov/errors.hpp"

namespace anosov {

namespace mp = boost::multiprecision;

ScopedPrecision::ScopedPrecision(unsigned bits) : saved_digits10_(BigFloat::default_precision()) {
  BigFloat::default_precision(bits * 30103U / 100000U + 2);
}

ScopedPrecision::~ScopedPrecision() { BigFloat::default_precision(saved_digits10_); }

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw InternalError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const BigInt& num, const BigInt& den) const {
  // den^deg * p(num/den), den > 0 keeps the sign.
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc.sign();
}

BigFloat IntPolynomial::evaluate(const BigFloat& x) const {
  BigFloat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigFloat(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[i] * i);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = mp::gcd(g, c);
  return mp::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v;
  for (const auto& c : coeffs_) v.push_back(c / g);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reciprocal() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = mp::abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v;
  for (const auto& c : coeffs_) v.push_back(-c);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& p) {
  std::vector<BigInt> v;
  for (const auto& c : p.coeffs_) v.push_back(k * c);
  return IntPolynomial(std::move(v));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InternalError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const BigInt& lc = b.leading();
  const int delta = a.degree() - b.degree();
  IntPolynomial r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    r = lc * r - IntPolynomial::monomial(r.leading(), r.degree() - b.degree()) * b;
    ++steps;
  }
  BigInt scale = 1;
  for (int i = steps; i < delta + 1; ++i) scale *= lc;
  return scale * r;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InternalError("division by the zero polynomial");
  std::vector<BigInt> q(std::max(0, a.degree() - b.degree() + 1));
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    BigInt t;
    BigInt rem;
    mp::divide_qr(r.leading(), b.leading(), t, rem);
    if (rem != 0) throw InternalError("inexact polynomial division");
    const int k = r.degree() - b.degree();
    q[k] = t;
    r = r - IntPolynomial::monomial(t, k) * b;
  }
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p.primitive_part();
  return exact_quotient(p.primitive_part(), gcd(p, p.derivative())).primitive_part();
}

namespace {

// Divides by the positive content; signs are preserved.
IntPolynomial shrink(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = p.content();
  std::vector<BigInt> v;
  for (const auto& c : p.coefficients()) v.push_back(c / g);
  return IntPolynomial(std::move(v));
}

int sign_variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);
  for (const auto& s : seq) {
    int sg = s.sign_at(num, den);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int sign_variations_at_infinity(const std::vector<IntPolynomial>& seq, bool positive) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = s.leading().sign();
    if (!positive && s.degree() % 2 == 1) sg = -sg;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

Rational cauchy_bound(const IntPolynomial& p) {
  BigInt m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigInt(mp::abs(p.coeff(i))));
  // 1 + max|a_i| / |lc|, rounded up to an integer.
  BigInt lc = mp::abs(p.leading());
  return Rational(1 + (m + lc - 1) / lc);
}

}  // namespace

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  IntPolynomial s0 = squarefree_part(p);
  if (s0.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
  seq.push_back(s0);
  if (s0.degree() < 1) return seq;
  seq.push_back(shrink(s0.derivative()));
  while (seq.back().degree() > 0) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    const int delta = a.degree() - b.degree();
    bool flip = b.leading() < 0 && (delta + 1) % 2 == 1;
    r = flip ? r : -r;
    if (r.is_zero()) break;
    seq.push_back(shrink(r));
  }
  return seq;
}

int count_real_roots(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw InputError("empty interval in root count");
  auto seq = sturm_sequence(p);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

int count_real_roots(const IntPolynomial& p) {
  auto seq = sturm_sequence(p);
  return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial& p,
                                                              const Rational& max_width) {
  auto seq = sturm_sequence(p);
  std::vector<std::pair<Rational, Rational>> out;
  if (seq.front().degree() < 1) return out;
  Rational bound = cauchy_bound(seq.front());
  auto count = [&](const Rational& lo, const Rational& hi) {
    return sign_variations(seq, lo) - sign_variations(seq, hi);
  };
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int k = count(lo, hi);
    if (k == 0) continue;
    if (k == 1 && hi - lo <= max_width) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigFloat> real_roots(const IntPolynomial& p, unsigned bits) {
  auto seq = sturm_sequence(p);
  auto intervals = isolate_real_roots(p);
  std::vector<BigFloat> out;
  Rational eps(1);
  for (unsigned i = 0; i < bits + 4; ++i) eps /= 2;
  for (auto [lo, hi] : intervals) {
    while (hi - lo > eps) {
      Rational mid = (lo + hi) / 2;
      if (sign_variations(seq, lo) - sign_variations(seq, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.emplace_back(BigFloat(hi));
  }
  return out;
}

bool is_integer_like(const IntPolynomial& p) {
  if (!p.is_monic()) throw InputError("integer-like test needs a monic polynomial");
  const BigInt c0 = p.coeff(0);
  return c0 == 1 || c0 == -1;
}

IntPolynomial trace_transform(const IntPolynomial& q) {
  const int n = q.degree();
  if (n < 0 || n % 2 != 0 || q.reciprocal() != q) {
    throw InternalError("trace transform needs a palindromic polynomial of even degree");
  }
  const int m = n / 2;
  // D_0 = 2, D_1 = Y, D_{k+1} = Y D_k - D_{k-1}; X^k + X^-k = D_k(X + 1/X).
  const IntPolynomial y{0, 1};
  std::vector<IntPolynomial> d{IntPolynomial{2}, y};
  for (int k = 2; k <= m; ++k) d.push_back(y * d[k - 1] - d[k - 2]);
  IntPolynomial r{};
  r = r + IntPolynomial::monomial(q.coeff(m), 0);
  for (int k = 1; k <= m; ++k) r = r + q.coeff(m + k) * d[k];
  return r;
}

HyperbolicityProof prove_hyperbolicity(const IntPolynomial& p) {
  if (p.is_zero()) throw InputError("hyperbolicity of the zero polynomial");
  HyperbolicityProof proof;
  proof.root_at_one = p.evaluate(BigInt(1)) == 0;
  proof.root_at_minus_one = p.evaluate(BigInt(-1)) == 0;
  if (proof.root_at_one || proof.root_at_minus_one) return proof;

  // Roots of modulus one are shared with the reciprocal polynomial.
  IntPolynomial s = squarefree_part(gcd(p, p.reciprocal()));
  proof.reciprocal_gcd = s;
  if (s.degree() < 1) {
    proof.hyperbolic = true;
    return proof;
  }
  proof.trace_polynomial = trace_transform(s);
  const IntPolynomial& r = proof.trace_polynomial;
  if (r.evaluate(BigInt(2)) == 0 || r.evaluate(BigInt(-2)) == 0) {
    throw InternalError("trace polynomial vanishes at +-2 after removing +-1");
  }
  proof.sturm_count = count_real_roots(r, Rational(-2), Rational(2));
  proof.hyperbolic = proof.sturm_count == 0;
  return proof;
}

bool is_hyperbolic(const IntPolynomial& p) { return prove_hyperbolicity(p).hyperbolic; }

BigInt discriminant(const IntPolynomial& p) {
  if (p.degree() == 2) {
    const BigInt a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    return b * b - 4 * a * c;
  }
  if (p.degree() == 3) {
    const BigInt a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d +
           18 * a * b * c * d;
  }
  throw UnsupportedDegree("discriminant implemented for degrees 2 and 3 only");
}

}  // namespace anosov
