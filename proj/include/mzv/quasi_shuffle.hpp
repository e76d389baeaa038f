#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mzv/combinatorics.hpp"
#include "mzv/composition.hpp"
#include "mzv/word_poly.hpp"

namespace mzv {

/// The two bilinear products on the word algebra: the harmonic (stuffle)
/// product adds the merged generator z_{j+k}, the star product subtracts it.
enum class ProductKind { harmonic, star };

namespace detail {

inline Word drop_front(const Word& w) {
  return Word(std::vector<int>(w.parts().begin() + 1, w.parts().end()));
}

/// out += sign · z_head · p, term by term.
inline void add_prefixed(WordPoly& out, int head, const WordPoly& p, int sign) {
  for (const auto& [w, c] : p.terms()) {
    std::vector<int> parts;
    parts.reserve(w.parts().size() + 1);
    parts.push_back(head);
    parts.insert(parts.end(), w.parts().begin(), w.parts().end());
    out.add_term(Word(std::move(parts)), sign < 0 ? BigRational(-c) : c);
  }
}

}  // namespace detail

/// Word-level product, by structural recursion on total depth:
///   z_j u ⊛ z_k v = z_j (u ⊛ z_k v) + z_k (z_j u ⊛ v) ± z_{j+k} (u ⊛ v)
/// with the empty word as two-sided unit.  The merge term is added for the
/// harmonic product and subtracted for the star product.
inline WordPoly product(const Word& u, const Word& v, ProductKind kind) {
  if (u.empty()) return WordPoly::monomial(v);
  if (v.empty()) return WordPoly::monomial(u);
  const int j = u.parts().front();
  const int k = v.parts().front();
  const Word ut = detail::drop_front(u);
  const Word vt = detail::drop_front(v);
  WordPoly out;
  detail::add_prefixed(out, j, product(ut, v, kind), +1);
  detail::add_prefixed(out, k, product(u, vt, kind), +1);
  detail::add_prefixed(out, j + k, product(ut, vt, kind),
                       kind == ProductKind::star ? -1 : +1);
  return out;
}

inline WordPoly harmonic_product(const Word& u, const Word& v) {
  return product(u, v, ProductKind::harmonic);
}

inline WordPoly star_product(const Word& u, const Word& v) {
  return product(u, v, ProductKind::star);
}

/// Bilinear extension of the word-level product to whole polynomials.
inline WordPoly poly_product(const WordPoly& a, const WordPoly& b,
                             ProductKind kind) {
  WordPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      const WordPoly wordwise = product(wa, wb, kind);
      const BigRational scale = ca * cb;
      for (const auto& [w, c] : wordwise.terms()) out.add_term(w, scale * c);
    }
  return out;
}

/// k-fold product of z_n with itself; k = 0 is the empty product 1·𝟏.
inline WordPoly power(int n, int k, ProductKind kind) {
  if (n < 1) throw std::invalid_argument("power: n must be >= 1");
  if (k < 0) throw std::invalid_argument("power: k must be >= 0");
  WordPoly out = WordPoly::unit();
  const WordPoly zn = WordPoly::monomial(Word{n});
  for (int i = 0; i < k; ++i) out = poly_product(out, zn, kind);
  return out;
}

/// Visits every composition of k (there are 2^(k-1)) exactly once, in
/// lexicographic order by parts: (1,1,1), (1,2), (2,1), (3) for k = 3.
template <class Fn>
void for_each_composition(int k, Fn&& fn) {
  if (k < 1) throw std::invalid_argument("compositions: k must be >= 1");
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      fn(Composition(cur));
      return;
    }
    for (int a = 1; a <= rest; ++a) {
      cur.push_back(a);
      self(self, rest - a);
      cur.pop_back();
    }
  };
  rec(rec, k);
}

inline std::vector<Composition> compositions(int k) {
  std::vector<Composition> out;
  if (k >= 1 && k <= 30) out.reserve(std::size_t{1} << (k - 1));
  for_each_composition(k, [&](const Composition& c) { out.push_back(c); });
  return out;
}

/// Direct multinomial expansion of the k-fold product of z_n: every
/// composition (a_1,...,a_r) of k contributes the word (n·a_1,...,n·a_r)
/// with coefficient k!/(a_1!...a_r!), times (-1)^(k-r) for the star
/// product.  No product recursion is involved.
inline WordPoly expand_power_closed_form(int n, int k, ProductKind kind) {
  if (n < 1) throw std::invalid_argument("expand_power_closed_form: n must be >= 1");
  if (k < 1) throw std::invalid_argument("expand_power_closed_form: k must be >= 1");
  WordPoly out;
  for_each_composition(k, [&](const Composition& alpha) {
    std::vector<int> parts;
    parts.reserve(alpha.parts().size());
    for (int a : alpha.parts()) parts.push_back(n * a);
    BigInt coeff = multinomial(k, alpha);
    if (kind == ProductKind::star && (k - alpha.depth()) % 2 != 0) coeff = -coeff;
    out.add_term(Word(std::move(parts)), BigRational(coeff));
  });
  return out;
}

/// One product step against z_n for a word whose subscripts all lie in nZ:
/// the r+1 insertions of z_n into each gap, plus the r words with one
/// subscript bumped by n; the bumped words are negated under the star
/// product.  Equals product(w, z_n, kind).
inline WordPoly lemma1_step(const Word& w, int n, ProductKind kind) {
  if (n < 1) throw std::invalid_argument("lemma1_step: n must be >= 1");
  for (int s : w.parts())
    if (s % n != 0)
      throw std::invalid_argument("lemma1_step: subscript " + std::to_string(s) +
                                  " is not a multiple of " + std::to_string(n));
  const std::vector<int>& parts = w.parts();
  const int r = w.depth();
  WordPoly out;
  for (int gap = 0; gap <= r; ++gap) {
    std::vector<int> inserted(parts.begin(), parts.begin() + gap);
    inserted.push_back(n);
    inserted.insert(inserted.end(), parts.begin() + gap, parts.end());
    out.add_term(Word(std::move(inserted)), 1);
  }
  const BigRational bump_sign = kind == ProductKind::star ? -1 : 1;
  for (int i = 0; i < r; ++i) {
    std::vector<int> bumped(parts);
    bumped[static_cast<std::size_t>(i)] += n;
    out.add_term(Word(std::move(bumped)), bump_sign);
  }
  return out;
}

}  // namespace mzv
