#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

/// Ordered tuple of positive integers (a_1,...,a_r).  Doubles as a zeta
/// argument list and, read as z_{a_1}...z_{a_r}, as a word in the generators
/// z_s.  The empty composition stands for the empty word, the algebra unit.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// A word z_{s_1}...z_{s_r} is its subscript composition viewed as a monomial.
using Word = Composition;

/// Convergence guard used by the series evaluators: the last exponent must be
/// at least 2.  The empty word is admissible (it evaluates to 1).
inline bool admissible(const Composition& a) noexcept {
  return a.empty() || a.parts().back() >= 2;
}

/// Total order for term storage and serialization: weight ascending, then
/// depth descending, then subscripts lexicographically.
struct CanonicalLess {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    if (a.depth() != b.depth()) return a.depth() > b.depth();
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end());
  }
};

/// Comma-joined parts, "2,3"; matches the CLI input syntax.
inline std::string parts_string(const Composition& a) {
  std::string out;
  for (int p : a.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

/// "z2 z3"; the empty word renders as "1".
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int s : w.parts()) {
    if (!out.empty()) out += ' ';
    out += 'z';
    out += std::to_string(s);
  }
  return out;
}

}  // namespace mzv
