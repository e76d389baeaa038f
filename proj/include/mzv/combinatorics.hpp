#pragma once

#include <stdexcept>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/scalars.hpp"

namespace mzv {

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// k! / (a_1! ... a_r!) for a composition (a_1,...,a_r) of k.
inline BigInt multinomial(int k, const Composition& alpha) {
  if (alpha.weight() != k)
    throw std::invalid_argument("multinomial: parts must sum to k");
  BigInt out = factorial(k);
  for (int a : alpha.parts()) out /= factorial(a);
  return out;
}

/// Lattice paths from (0,0) to (m,n) with east, north and northeast steps:
/// D(m,n) = 1 when m·n = 0, else D(m-1,n) + D(m-1,n-1) + D(m,n-1).
inline BigInt delannoy(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("delannoy: arguments must be >= 0");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= m; ++i) {
    BigInt diag = row[0];  // D(i-1, j-1) as j advances
    for (int j = 1; j <= n; ++j) {
      BigInt up = row[j];
      row[j] += diag + row[j - 1];
      diag = up;
    }
  }
  return row[n];
}

/// Stirling number of the second kind, by the triangle recurrence
/// S(k,r) = r·S(k-1,r) + S(k-1,r-1); zero when r > k, S(0,0) = 1.
inline BigInt stirling2(int k, int r) {
  if (k < 0 || r < 0) throw std::invalid_argument("stirling2: arguments must be >= 0");
  if (r > k) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(r) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= k; ++i) {
    for (int j = std::min(i, r); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[r];
}

/// r!·S(k,r): surjections from a k-set onto an r-set, equal to the sum of
/// multinomial(k, alpha) over all depth-r compositions alpha of k.
inline BigInt surjection_count(int k, int r) {
  if (k < 1 || r < 1 || r > k)
    throw std::invalid_argument("surjection_count: need 1 <= r <= k");
  return factorial(r) * stirling2(k, r);
}

/// Fubini number: weak orderings of a k-set, sum of r!·S(k,r) over r.
/// fubini(0) = 1 (the empty ordering).
inline BigInt fubini(int k) {
  if (k < 0) throw std::invalid_argument("fubini: k must be >= 0");
  if (k == 0) return 1;
  BigInt out = 0;
  for (int r = 1; r <= k; ++r) out += surjection_count(k, r);
  return out;
}

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal;
};

/// Fubini number of k against the Delannoy-weighted double sum obtained by
/// splitting the k-fold stuffle power at ell:
///   sum_r r!·S(k,r) = sum_{p<=ell} sum_{q<=k-ell} S(ell,p) S(k-ell,q) p! q! D(p,q).
inline IdentityCheck verify_theorem3(int k, int ell) {
  if (k < 2 || ell < 1 || ell >= k)
    throw std::invalid_argument("verify_theorem3: need 1 <= ell < k");
  BigInt lhs = fubini(k);
  BigInt rhs = 0;
  for (int p = 1; p <= ell; ++p)
    for (int q = 1; q <= k - ell; ++q)
      rhs += stirling2(ell, p) * stirling2(k - ell, q) * factorial(p) *
             factorial(q) * delannoy(p, q);
  return {lhs, rhs, lhs == rhs};
}

/// The even split: fubini(2k) against the symmetric double sum at ell = k.
inline IdentityCheck verify_corollary(int k) {
  if (k < 1) throw std::invalid_argument("verify_corollary: k must be >= 1");
  return verify_theorem3(2 * k, k);
}

}  // namespace mzv
