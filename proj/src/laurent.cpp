#include "ghzcert/laurent.hpp"

#include <algorithm>
#include <map>

namespace ghzcert {

LaurentPoly LaurentPoly::monomial(const Rational& c, const Integer& exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

bool LaurentPoly::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

Rational LaurentPoly::constant_term() const { return coefficient(Integer(0)); }

Rational LaurentPoly::coefficient(const Integer& exponent) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const Term& t, const Integer& e) { return t.first < e; });
  return (it != terms_.end() && it->first == exponent) ? it->second : Rational(0);
}

LaurentPoly LaurentPoly::shifted(const Integer& by) const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.first += by;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Integer, Rational> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  LaurentPoly out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms_.emplace_back(e, c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*e^" + e.get_str();
  }
  return out;
}

}  // namespace ghzcert
