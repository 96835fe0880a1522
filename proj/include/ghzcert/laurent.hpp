#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ghzcert/linalg.hpp"

namespace ghzcert {

/// Finite sum of c * e^k with rational c and integer (possibly negative) k.
/// Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<Integer, Rational>;

  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c) { return monomial(c, Integer(0)); }
  static LaurentPoly monomial(const Rational& c, const Integer& exponent);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero, or a single e^0 term.
  bool is_scalar() const noexcept;
  /// The e^0 coefficient.
  Rational constant_term() const;
  Rational coefficient(const Integer& exponent) const;
  /// Lowest exponent; requires !is_zero().
  const Integer& min_exponent() const { return terms_.front().first; }

  /// this * e^by
  LaurentPoly shifted(const Integer& by) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// "1*e^2 + -3/2*e^-1"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace ghzcert
