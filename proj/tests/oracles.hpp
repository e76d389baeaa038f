#pragma once

// Brute-force oracles used by the test and acceptance suites.  Everything
// here recomputes quantities by routes independent of the library: explicit
// path/partition/ordering enumeration, literal nested loops, and reference
// constants derived from a single high-precision pi literal.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "mzv/mzv.hpp"

namespace mzv_test {

// pi to more digits than a double holds; every reference constant in the
// suite descends from this literal.
inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline double zeta2_ref() { return kPi * kPi / 6.0; }
inline double zeta4_ref() { return kPi * kPi * kPi * kPi / 90.0; }

// ---------------------------------------------------------------------------
// Combinatorial brute force

/// Count king-move lattice paths (E, N, NE) from (0,0) to (m,n) one by one.
inline long long delannoy_paths(int m, int n) {
  long long count = 0;
  std::function<void(int, int)> walk = [&](int x, int y) {
    if (x == m && y == n) {
      ++count;
      return;
    }
    if (x < m) walk(x + 1, y);
    if (y < n) walk(x, y + 1);
    if (x < m && y < n) walk(x + 1, y + 1);
  };
  walk(0, 0);
  return count;
}

/// Count partitions of {1..k} into exactly r nonempty blocks by enumerating
/// restricted growth strings.
inline long long set_partition_count(int k, int r) {
  if (k == 0) return r == 0 ? 1 : 0;
  long long count = 0;
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == k) {
      if (blocks == r) ++count;
      return;
    }
    for (int b = 0; b <= blocks; ++b) rec(i + 1, std::max(blocks, b + 1));
  };
  rec(0, 0);
  return count;
}

/// r!·S(k,r) via the inclusion-exclusion alternating sum, divided by r!.
inline mzv::BigInt stirling2_inclusion_exclusion(int k, int r) {
  if (r == 0) return k == 0 ? 1 : 0;
  mzv::BigInt sum = 0;
  for (int j = 1; j <= r; ++j) {
    mzv::BigInt term = mzv::binomial(r, j);
    for (int i = 0; i < k; ++i) term *= j;
    if ((r - j) % 2 != 0)
      sum -= term;
    else
      sum += term;
  }
  return sum / mzv::factorial(r);
}

/// Count weak orderings of {1..k}: surjections onto {1..r} summed over r,
/// enumerated map by map.
inline long long weak_ordering_count(int k) {
  if (k == 0) return 1;
  long long total = 0;
  for (int r = 1; r <= k; ++r) {
    std::vector<int> f(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<bool> hit(static_cast<std::size_t>(r), false);
      for (int v : f) hit[static_cast<std::size_t>(v)] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++total;
      int i = 0;
      while (i < k && ++f[static_cast<std::size_t>(i)] == r) {
        f[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == k) break;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Numeric brute force (literal nested loops, O(limit^depth))

inline double nested_sum_loops(const std::vector<int>& alpha, bool strict,
                               std::int64_t limit,
                               const std::function<double(std::int64_t)>& base) {
  if (alpha.empty()) return 1.0;
  double total = 0.0;
  std::function<void(std::size_t, std::int64_t, double)> rec =
      [&](std::size_t pos, std::int64_t lo, double partial) {
        for (std::int64_t i = lo; i <= limit; ++i) {
          const double term = partial * std::pow(base(i), -alpha[pos]);
          if (pos + 1 == alpha.size())
            total += term;
          else
            rec(pos + 1, strict ? i + 1 : i, term);
        }
      };
  rec(0, 1, 1.0);
  return total;
}

inline double mzv_loops(const std::vector<int>& alpha, bool strict, std::int64_t limit) {
  return nested_sum_loops(alpha, strict, limit,
                          [](std::int64_t i) { return static_cast<double>(i); });
}

inline double hurwitz_loops(const std::vector<int>& alpha, bool strict,
                            std::int64_t limit, double x) {
  return nested_sum_loops(alpha, strict, limit,
                          [x](std::int64_t i) { return static_cast<double>(i - 1) + x; });
}

/// Multiple t values summed directly over odd denominators 1, 3, 5, ...
inline double t_loops(const std::vector<int>& alpha, bool strict, std::int64_t limit) {
  return nested_sum_loops(alpha, strict, limit,
                          [](std::int64_t i) { return static_cast<double>(2 * i - 1); });
}

/// Integral-comparison tail estimate for the direct odd sums.
inline double t_loops_tail(const std::vector<int>& alpha, bool strict, std::int64_t limit) {
  const std::vector<int> inner(alpha.begin(), alpha.end() - 1);
  const double prefix = inner.empty() ? 1.0 : t_loops(inner, strict, limit);
  const int last = alpha.back();
  return 2.0 * prefix * std::pow(2.0 * static_cast<double>(limit) - 1.0, 1.0 - last) /
         (last - 1);
}

/// Single zeta value by direct summation, smallest terms first.
inline double single_zeta(int s, std::int64_t limit) {
  double sum = 0.0;
  for (std::int64_t i = limit; i >= 1; --i) sum += std::pow(static_cast<double>(i), -s);
  return sum;
}

// ---------------------------------------------------------------------------
// Deterministic random inputs

inline mzv::Word random_word(std::mt19937& rng, int min_depth, int max_depth,
                             int max_part, int multiplier = 1) {
  std::uniform_int_distribution<int> depth_dist(min_depth, max_depth);
  std::uniform_int_distribution<int> part_dist(1, max_part);
  std::vector<int> parts(static_cast<std::size_t>(depth_dist(rng)));
  for (int& p : parts) p = multiplier * part_dist(rng);
  return mzv::Word(parts);
}

/// Random word with last part >= 2 and weight <= max_weight.
inline mzv::Word random_admissible_word(std::mt19937& rng, int min_depth,
                                        int max_depth, int max_part,
                                        int max_weight) {
  for (;;) {
    mzv::Word w = random_word(rng, min_depth, max_depth, max_part);
    if (mzv::admissible(w) && !w.empty() && w.weight() <= max_weight) return w;
  }
}

inline mzv::WordPoly make_poly(
    std::initializer_list<std::pair<mzv::Word, mzv::BigRational>> terms) {
  mzv::WordPoly p;
  for (const auto& [w, c] : terms) p.add_term(w, c);
  return p;
}

}  // namespace mzv_test
