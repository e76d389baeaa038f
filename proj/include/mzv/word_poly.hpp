#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "mzv/composition.hpp"
#include "mzv/scalars.hpp"

namespace mzv {

/// Finite formal sum of words with exact rational coefficients.  Zero
/// coefficients are never stored, so equality is plain term-by-term map
/// equality.  Terms iterate in canonical word order.
class WordPoly {
 public:
  using TermMap = std::map<Word, BigRational, CanonicalLess>;

  WordPoly() = default;

  /// The polynomial 1·𝟏 (unit of both products).
  static WordPoly unit() { return monomial(Word{}); }

  static WordPoly monomial(Word w, const BigRational& coeff = 1) {
    WordPoly p;
    p.add_term(std::move(w), coeff);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of w, zero if the word is absent.
  BigRational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  void add_term(Word w, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  WordPoly& operator+=(const WordPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  friend WordPoly operator+(WordPoly a, const WordPoly& b) {
    a += b;
    return a;
  }

  WordPoly& operator*=(const BigRational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend WordPoly operator*(const BigRational& s, WordPoly p) {
    p *= s;
    return p;
  }

  friend bool operator==(const WordPoly&, const WordPoly&) = default;

  BigRational coefficient_sum() const {
    BigRational total = 0;
    for (const auto& [w, c] : terms_) total += c;
    return total;
  }

  /// Sum of coefficients over the words of the given depth.
  BigRational coefficient_sum_at_depth(int r) const {
    BigRational total = 0;
    for (const auto& [w, c] : terms_)
      if (w.depth() == r) total += c;
    return total;
  }

 private:
  TermMap terms_;
};

/// "2" for integers, "1/4" otherwise.
inline std::string to_string(const BigRational& c) {
  if (denominator(c) == 1) return numerator(c).str();
  return numerator(c).str() + "/" + denominator(c).str();
}

/// Canonically ordered rendering, e.g. "2*z2 z2 + 1*z4"; zero prints "0".
inline std::string to_string(const WordPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    if (out.empty()) {
      out = to_string(c) + "*" + to_string(w);
    } else if (c < 0) {
      out += " - " + to_string(BigRational(-c)) + "*" + to_string(w);
    } else {
      out += " + " + to_string(c) + "*" + to_string(w);
    }
  }
  return out;
}

}  // namespace mzv
