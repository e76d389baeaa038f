#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/scalars.hpp"
#include "mzv/word_poly.hpp"

namespace mzv {

/// Truncation and shift for the series evaluators.  `truncation` caps every
/// summation index (N terms per index); `shift` is the Hurwitz parameter x,
/// ignored by the plain evaluators.
struct EvalConfig {
  std::int64_t truncation = 100000;
  double shift = 1.0;
};

/// Truncated value paired with an estimated magnitude of the dropped tail.
/// The estimate is 2·P·N^(1-a)/(a-1), where a is the last exponent and P the
/// truncated depth-(r-1) prefix sum at N: an integral-comparison bound on the
/// outermost sum with a safety factor of 2.  It is monotone and empirically
/// conservative for a >= 2, but not a certified enclosure.
struct EvalResult {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Neumaier-compensated accumulator; running sums stay accurate to a few
/// ulps across millions of additions.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

namespace detail {

/// base^(-e) for integer e >= 1, by plain repeated multiplication.
inline double reciprocal_power(double base, int e) {
  double p = base;
  for (int i = 1; i < e; ++i) p *= base;
  return 1.0 / p;
}

/// Truncated nested sum over i_1 ⋖ i_2 ⋖ ... ⋖ i_r <= N of
/// prod_j base(i_j)^(-alpha_j), where ⋖ is < (strict) or <= (non-strict).
///
/// Layered prefix-sum dynamic program: with P_0 ≡ 1, layer j turns the
/// running prefix of layer j-1 into
///   P_j(m) = sum_{i<=m} base(i)^(-alpha_j) · P_{j-1}(i-1)       (strict)
///   P_j(m) = sum_{i<=m} base(i)^(-alpha_j) · P_{j-1}(i)         (non-strict)
/// in one ascending compensated pass, so the whole evaluation costs
/// O(depth·N) instead of O(N^depth).
template <class BaseFn>
EvalResult nested_sum(const std::vector<int>& alpha, bool strict,
                      std::int64_t limit, BaseFn base) {
  const auto size = static_cast<std::size_t>(limit);
  std::vector<double> prev(size + 1, 1.0);
  std::vector<double> cur(size + 1, 0.0);
  double inner_prefix = 1.0;
  for (std::size_t layer = 0; layer < alpha.size(); ++layer) {
    inner_prefix = prev[size];
    CompensatedSum acc;
    cur[0] = 0.0;
    for (std::int64_t i = 1; i <= limit; ++i) {
      const auto at = static_cast<std::size_t>(i);
      acc.add(reciprocal_power(base(i), alpha[layer]) *
              prev[strict ? at - 1 : at]);
      cur[at] = acc.value();
    }
    prev.swap(cur);
  }
  const int last = alpha.back();
  const double tail = 2.0 * inner_prefix *
                      std::pow(static_cast<double>(limit), 1.0 - last) /
                      (last - 1);
  return {prev[size], tail};
}

inline void require_admissible(const Composition& alpha) {
  if (alpha.empty())
    throw std::domain_error("evaluation requires depth >= 1");
  if (!admissible(alpha))
    throw std::domain_error("inadmissible composition (" + parts_string(alpha) +
                            "): last part must be >= 2 for convergence");
}

inline void require_config(const EvalConfig& cfg) {
  if (cfg.truncation < 1)
    throw std::invalid_argument("truncation must be >= 1");
}

inline void require_shift(const EvalConfig& cfg) {
  if (!(cfg.shift > 0.0))
    throw std::domain_error("Hurwitz shift x must be > 0");
}

}  // namespace detail

/// zeta(a_1,...,a_r): truncated sum over 1 <= i_1 < ... < i_r <= N.
inline EvalResult mzv(const Composition& alpha, const EvalConfig& cfg = {}) {
  detail::require_admissible(alpha);
  detail::require_config(cfg);
  return detail::nested_sum(alpha.parts(), true, cfg.truncation,
                            [](std::int64_t i) { return static_cast<double>(i); });
}

/// zeta*(a_1,...,a_r): the same sum with non-strict inequalities.
inline EvalResult mzsv(const Composition& alpha, const EvalConfig& cfg = {}) {
  detail::require_admissible(alpha);
  detail::require_config(cfg);
  return detail::nested_sum(alpha.parts(), false, cfg.truncation,
                            [](std::int64_t i) { return static_cast<double>(i); });
}

/// zeta(a; x): indices shifted by x and starting at 0.  Each index runs over
/// N values, so x = 1 reproduces the plain sums term for term.
inline EvalResult hurwitz_mzv(const Composition& alpha, const EvalConfig& cfg) {
  detail::require_admissible(alpha);
  detail::require_config(cfg);
  detail::require_shift(cfg);
  const double x = cfg.shift;
  return detail::nested_sum(
      alpha.parts(), true, cfg.truncation,
      [x](std::int64_t i) { return static_cast<double>(i - 1) + x; });
}

/// zeta*(a; x): non-strict variant of hurwitz_mzv.
inline EvalResult hurwitz_mzsv(const Composition& alpha, const EvalConfig& cfg) {
  detail::require_admissible(alpha);
  detail::require_config(cfg);
  detail::require_shift(cfg);
  const double x = cfg.shift;
  return detail::nested_sum(
      alpha.parts(), false, cfg.truncation,
      [x](std::int64_t i) { return static_cast<double>(i - 1) + x; });
}

enum class TKind { plain, star };

/// Multiple t value (odd denominators): 2^(-|a|)·zeta(a; 1/2), the star
/// variant likewise from zeta*(a; 1/2).
inline EvalResult t_value(const Composition& alpha, TKind kind = TKind::plain,
                          const EvalConfig& cfg = {}) {
  EvalConfig half = cfg;
  half.shift = 0.5;
  const EvalResult h = kind == TKind::star ? hurwitz_mzsv(alpha, half)
                                           : hurwitz_mzv(alpha, half);
  const int w = alpha.weight();
  return {std::ldexp(h.value, -w), std::ldexp(h.tail_bound, -w)};
}

enum class Evaluator { mzv, mzsv, hurwitz_mzv, hurwitz_mzsv };

inline EvalResult evaluate_word(const Word& w, Evaluator ev,
                                const EvalConfig& cfg) {
  switch (ev) {
    case Evaluator::mzv: return mzv(w, cfg);
    case Evaluator::mzsv: return mzsv(w, cfg);
    case Evaluator::hurwitz_mzv: return hurwitz_mzv(w, cfg);
    case Evaluator::hurwitz_mzsv: return hurwitz_mzsv(w, cfg);
  }
  std::abort();
}

/// Linear extension of an evaluator: sum of coeff·eval(word) in canonical
/// term order, the unit word contributing exactly 1.  The tail bounds
/// combine as sum of |coeff|·tail(word).
inline EvalResult evaluate_poly(const WordPoly& p, Evaluator ev,
                                const EvalConfig& cfg = {}) {
  CompensatedSum value;
  double tail = 0.0;
  for (const auto& [w, c] : p.terms()) {
    EvalResult r{1.0, 0.0};
    if (!w.empty()) {
      if (!admissible(w))
        throw std::domain_error("inadmissible word (" + to_string(w) +
                                ") in polynomial: last part must be >= 2 "
                                "for convergence");
      r = evaluate_word(w, ev, cfg);
    }
    const double coeff = to_double(c);
    value.add(coeff * r.value);
    tail += std::abs(coeff) * r.tail_bound;
  }
  return {value.value(), tail};
}

/// As evaluate_poly, but through the multiple t values.
inline EvalResult evaluate_poly_t(const WordPoly& p, TKind kind,
                                  const EvalConfig& cfg = {}) {
  CompensatedSum value;
  double tail = 0.0;
  for (const auto& [w, c] : p.terms()) {
    EvalResult r{1.0, 0.0};
    if (!w.empty()) {
      if (!admissible(w))
        throw std::domain_error("inadmissible word (" + to_string(w) +
                                ") in polynomial: last part must be >= 2 "
                                "for convergence");
      r = t_value(w, kind, cfg);
    }
    const double coeff = to_double(c);
    value.add(coeff * r.value);
    tail += std::abs(coeff) * r.tail_bound;
  }
  return {value.value(), tail};
}

}  // namespace mzv
