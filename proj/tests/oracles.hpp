// Test-only brute-force references. Nothing in here calls into the library
// arithmetic, so agreement with it is evidence rather than tautology.
#ifndef BURNSIDE_TESTS_ORACLES_HPP
#define BURNSIDE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int mod(Int v, Int p) { return ((v % p) + p) % p; }

// Primes used throughout the exhaustive tests.
inline const std::vector<Int> kSmallPrimes{3, 5, 7, 11, 13};

// u^k by k-fold multiplication.
inline Int naive_pow(Int u, Int k, Int p) {
  Int r = 1 % p;
  for (Int i = 0; i < k; ++i) r = mod(r * u, p);
  return r;
}

inline Int naive_power_sum(const std::vector<Int>& U, Int k, Int p) {
  Int s = 0;
  for (Int u : U) s = mod(s + naive_pow(u, k, p), p);
  return s;
}

// Pascal's triangle mod p.
inline Int pascal(Int n, Int k, Int p) {
  std::vector<std::vector<Int>> c(n + 1, std::vector<Int>(n + 1, 0));
  for (Int i = 0; i <= n; ++i) {
    c[i][0] = 1 % p;
    for (Int j = 1; j <= i; ++j) c[i][j] = mod(c[i - 1][j - 1] + c[i - 1][j], p);
  }
  return c[n][k];
}

// Coefficients (ascending) of prod (X - u) by repeated multiplication.
inline std::vector<Int> poly_from_roots(const std::vector<Int>& U, Int p) {
  std::vector<Int> c{1};
  for (Int u : U) {
    std::vector<Int> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] = mod(next[k + 1] + c[k], p);
      next[k] = mod(next[k] - u * c[k], p);
    }
    c = next;
  }
  return c;
}

// Leibniz determinant mod p; fine up to 7x7.
inline Int leibniz_det(const std::vector<std::vector<Int>>& a, Int p) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int det = 0;
  do {
    Int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Int term = 1;
    for (std::size_t i = 0; i < n; ++i) term = mod(term * a[i][perm[i]], p);
    det = mod(det + (inversions % 2 ? -term : term), p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Closed form prod u_j * prod_{i<j} (u_j - u_i) of det(u_j^k), k = 1..n.
inline Int vandermonde_product(const std::vector<Int>& U, Int p) {
  Int d = 1;
  for (std::size_t j = 0; j < U.size(); ++j) {
    d = mod(d * U[j], p);
    for (std::size_t i = 0; i < j; ++i) d = mod(d * (U[j] - U[i]), p);
  }
  return d;
}

// Modular inverse by search.
inline Int naive_inv(Int a, Int p) {
  for (Int x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  return 0;
}

// Solves sum_k c_k i^k = values[i] for i = 0..p-1 by Gauss-Jordan on the
// full Vandermonde system.
inline std::vector<Int> solve_interpolation(const std::vector<Int>& values, Int p) {
  const std::size_t n = values.size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) m[i][k] = naive_pow(static_cast<Int>(i), static_cast<Int>(k), p);
    m[i][n] = mod(values[i], p);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    const Int inv = naive_inv(m[c][c], p);
    for (auto& x : m[c]) x = mod(x * inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Int f = m[r][c];
      for (std::size_t k = 0; k <= n; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], p);
    }
  }
  std::vector<Int> coeffs(n);
  for (std::size_t k = 0; k < n; ++k) coeffs[k] = m[k][n];
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

// All subsets of {1..p-1} that are non-empty and proper, by bitmask.
inline std::vector<std::vector<Int>> valid_subsets(Int p) {
  std::vector<std::vector<Int>> out;
  const Int full = (Int{1} << (p - 1)) - 1;
  for (Int mask = 1; mask < full; ++mask) {
    std::vector<Int> U;
    for (Int u = 1; u < p; ++u)
      if (mask & (Int{1} << (u - 1))) U.push_back(u);
    out.push_back(U);
  }
  return out;
}

}  // namespace oracle

#endif  // BURNSIDE_TESTS_ORACLES_HPP
