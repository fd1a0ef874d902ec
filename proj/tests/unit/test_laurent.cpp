#include <doctest.h>

#include "laurent.hpp"

using namespace hivemv;

TEST_CASE("valuation of simple polynomials") {
  LaurentPoly p = LaurentPoly::term(-2, 1) + LaurentPoly::term(1, 3);
  REQUIRE(p.valuation().has_value());
  CHECK(*p.valuation() == -2);

  LaurentPoly c = LaurentPoly::constant(7);
  CHECK(*c.valuation() == 0);

  LaurentPoly z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.valuation().has_value());
}

TEST_CASE("arithmetic never stores zero coefficients") {
  LaurentPoly t = LaurentPoly::term(1, 1);
  LaurentPoly one = LaurentPoly::constant(1);
  CHECK((t + one) * (t - one) == LaurentPoly::term(2, 1) - one);

  LaurentPoly cancel = LaurentPoly::term(3, 5) + LaurentPoly::term(3, -5);
  CHECK(cancel.is_zero());
  CHECK(cancel.terms.empty());

  LaurentPoly half = LaurentPoly::term(1, Rational(1) / 2);
  CHECK(half + half == t);
  CHECK(-(t - one) == one - t);
}

TEST_CASE("product of monomials adds exponents") {
  LaurentPoly a = LaurentPoly::term(-3, Rational(2) / 3);
  LaurentPoly b = LaurentPoly::term(5, Rational(9) / 4);
  LaurentPoly ab = a * b;
  REQUIRE(ab.terms.size() == 1);
  CHECK(ab.terms.begin()->first == 2);
  CHECK(ab.terms.begin()->second == Rational(3) / 2);
  CHECK((a * LaurentPoly()).is_zero());
}

TEST_CASE("printing is readable") {
  CHECK_FALSE(LaurentPoly::term(-1, 1).str().empty());
  CHECK_FALSE(LaurentPoly().str().empty());
}
