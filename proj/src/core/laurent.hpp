#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

#include "coweight.hpp"

namespace hivemv {

using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial in t with rational coefficients.  The term map never
// stores zero coefficients, so is_zero and valuation are structural.
struct LaurentPoly {
  std::map<Int, Rational> terms;

  static LaurentPoly term(Int exp, const Rational& c);
  static LaurentPoly constant(const Rational& c) { return term(0, c); }

  bool is_zero() const { return terms.empty(); }
  // Order of vanishing at t = 0; the zero polynomial has none (+infinity).
  std::optional<Int> valuation() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);

  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
  std::string str() const;
};

}  // namespace hivemv
