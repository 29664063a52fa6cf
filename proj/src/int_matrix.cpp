#include "anosov/int_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "anosov/errors.hpp"

namespace anosov {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& indices) const {
  const int k = static_cast<int>(indices.size());
  IntMatrix s(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) s(i, j) = (*this)(indices[i], indices[j]);
  }
  return s;
}

BigInt IntMatrix::max_row_norm() const {
  BigInt best = 0;
  for (int i = 0; i < rows_; ++i) {
    BigInt row = 0;
    for (int j = 0; j < cols_; ++j) row += boost::multiprecision::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InternalError("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

IntMatrix companion(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1) throw InputError("companion matrix needs a monic polynomial");
  const int n = p.degree();
  IntMatrix c(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

IntPolynomial charpoly_berkowitz(const IntMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) throw InputError("characteristic polynomial of a non-square matrix");
  if (n == 0) return IntPolynomial{1};
  // Descending coefficients of det(X I - A_r) for the leading r x r block.
  std::vector<BigInt> poly{1, -a(0, 0)};
  for (int r = 1; r < n; ++r) {
    // A_{r+1} = [[A_r, C], [R, a_rr]]; t = (1, -a_rr, -R C, -R A_r C, ...).
    std::vector<BigInt> t(r + 2);
    t[0] = 1;
    t[1] = -a(r, r);
    std::vector<BigInt> v(r);  // A_r^k C
    for (int i = 0; i < r; ++i) v[i] = a(i, r);
    for (int k = 2; k < r + 2; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i) dot += a(r, i) * v[i];
      t[k] = -dot;
      if (k + 1 < r + 2) {
        std::vector<BigInt> next(r);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) next[i] += a(i, j) * v[j];
        }
        v = std::move(next);
      }
    }
    std::vector<BigInt> next(r + 2);
    for (int i = 0; i < r + 2; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

// Characteristic polynomial over Z/p, ascending, via Hessenberg form.
std::vector<u64> charpoly_mod(const IntMatrix& a, u64 p) {
  const int n = a.rows();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigInt r = a(i, j) % BigInt(p);
      if (r < 0) r += p;
      h[i][j] = r.convert_to<u64>();
    }
  }
  for (int m = 1; m + 1 < n; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i) {
      if (h[i][m - 1] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
    }
    const u64 inv = powmod(h[m][m - 1], p - 2, p);
    for (int i = m + 1; i < n; ++i) {
      const u64 u = mulmod(h[i][m - 1], inv, p);
      if (u == 0) continue;
      for (int j = 0; j < n; ++j) h[i][j] = (h[i][j] + p - mulmod(u, h[m][j], p)) % p;
      for (int j = 0; j < n; ++j) h[j][m] = (h[j][m] + mulmod(u, h[j][i], p)) % p;
    }
  }
  // p_k(X) = (X - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<u64>> polys{{1}};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64> pk(k + 1, 0);
    const auto& prev = polys[k - 1];
    for (int d = 0; d < k; ++d) {
      pk[d + 1] = (pk[d + 1] + prev[d]) % p;
      pk[d] = (pk[d] + p - mulmod(h[k - 1][k - 1], prev[d], p)) % p;
    }
    u64 prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = mulmod(prod, h[i][i - 1], p);
      const u64 coef = mulmod(h[i - 1][k - 1], prod, p);
      if (coef == 0) continue;
      const auto& pi = polys[i - 1];
      for (std::size_t d = 0; d < pi.size(); ++d) pk[d] = (pk[d] + p - mulmod(coef, pi[d], p)) % p;
    }
    polys.push_back(std::move(pk));
  }
  return polys[n];
}

}  // namespace

IntPolynomial charpoly_multimodular(const IntMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) throw InputError("characteristic polynomial of a non-square matrix");
  if (n == 0) return IntPolynomial{1};
  BigInt bound = 1;
  const BigInt base = 1 + a.max_row_norm();
  for (int i = 0; i < n; ++i) bound *= base;
  const BigInt need = 2 * bound + 1;

  std::vector<BigInt> residues(n + 1, 0);
  BigInt modulus = 1;
  u64 candidate = (u64{1} << 31) - 1;
  while (modulus < need) {
    while (!is_prime(candidate)) --candidate;
    const u64 p = candidate--;
    auto cp = charpoly_mod(a, p);
    const u64 m_mod_p = (modulus % BigInt(p)).convert_to<u64>();
    const u64 m_inv = powmod(m_mod_p, p - 2, p);
    for (int k = 0; k <= n; ++k) {
      u64 x_mod_p = (residues[k] % BigInt(p)).convert_to<u64>();
      u64 delta = (cp[k] + p - x_mod_p) % p;
      residues[k] += modulus * BigInt(mulmod(delta, m_inv, p));
    }
    modulus *= p;
  }
  const BigInt half = modulus / 2;
  for (auto& r : residues) {
    if (r > half) r -= modulus;
  }
  return IntPolynomial(std::move(residues));
}

std::vector<std::vector<int>> diagonal_blocks(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && m(i, j) != 0) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return blocks;
}

}  // namespace anosov
