#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mzv/word_poly.hpp"

namespace mzv {

/// One term as {"word": [s_1,...,s_r], "coeff": {"num": "...", "den": "..."}}
/// with the integer parts of the coefficient as decimal strings.
inline nlohmann::json term_to_json(const Word& w, const BigRational& c) {
  return {{"word", w.parts()},
          {"coeff", {{"num", numerator(c).str()}, {"den", denominator(c).str()}}}};
}

/// Canonically ordered list of term records.
inline nlohmann::json to_json(const WordPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back(term_to_json(w, c));
  return terms;
}

inline WordPoly word_poly_from_json(const nlohmann::json& terms) {
  WordPoly p;
  for (const auto& rec : terms) {
    auto parts = rec.at("word").get<std::vector<int>>();
    const BigInt num(rec.at("coeff").at("num").get<std::string>());
    const BigInt den(rec.at("coeff").at("den").get<std::string>());
    p.add_term(Word(std::move(parts)), BigRational(num, den));
  }
  return p;
}

}  // namespace mzv
