#include <doctest.h>

#include "legknot/error.hpp"
#include "legknot/laurent.hpp"

using namespace legknot;

TEST_CASE("laurent: difference of squares") {
  auto a = LaurentPoly2::monomial(1, 1, 0);
  auto z = LaurentPoly2::monomial(1, 0, 1);
  auto p = (a + z) * (a - z);
  CHECK(p == LaurentPoly2::monomial(1, 2, 0) - LaurentPoly2::monomial(1, 0, 2));
  CHECK(p.size() == 2);
}

TEST_CASE("laurent: degrees and breadth") {
  auto p = LaurentPoly2::parse("2 a^2 z^0 + 1 a^2 z^2 + -1 a^4 z^0");
  CHECK(p.breadth(Var::a) == 2);
  CHECK(p.max_deg(Var::z) == 2);
  CHECK(p.min_deg(Var::a) == 2);
  CHECK(p.pretty() == "2a^2 + a^2z^2 - a^4");
  CHECK_THROWS_AS(p.max_deg(Var::q), Error);
  LaurentPoly2 zero;
  try {
    zero.min_deg(Var::a);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeOfZero);
  }
}

TEST_CASE("laurent: text round trip") {
  auto p = LaurentPoly2::monomial(-3, -2, 5) + LaurentPoly2::monomial(7, 0, 0) + LaurentPoly2::monomial(1, 4, -1);
  CHECK(LaurentPoly2::parse(p.to_string()) == p);
  CHECK(LaurentPoly2::parse("0").is_zero());
  CHECK(LaurentPoly2().to_string() == "0");
  CHECK_THROWS_AS(LaurentPoly2::parse("1 a^2 z^0 + 1 a^1 z^0"), Error);
  CHECK_THROWS_AS(LaurentPoly2::parse("0 a^1 z^0"), Error);
}

TEST_CASE("laurent: variable mismatch") {
  auto p = LaurentPoly2::constant(1, Vars::AZ);
  auto q = LaurentPoly2::constant(1, Vars::QT);
  CHECK_THROWS_AS(p + q, Error);
}

TEST_CASE("laurent: substitutions") {
  auto p = LaurentPoly2::monomial(2, 3, 1) + LaurentPoly2::monomial(5, -1, 2);
  CHECK(p.invert_first() == LaurentPoly2::monomial(2, -3, 1) + LaurentPoly2::monomial(5, 1, 2));
  CHECK(p.negate_second() == LaurentPoly2::monomial(-2, 3, 1) + LaurentPoly2::monomial(5, -1, 2));
  CHECK(p.shifted(1, -1) == LaurentPoly2::monomial(2, 4, 0) + LaurentPoly2::monomial(5, 0, 1));
}

TEST_CASE("laurent: overflow is reported") {
  auto big = LaurentPoly2::constant(INT64_MAX);
  try {
    auto r = big + LaurentPoly2::constant(1);
    (void)r;
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}
