#include <doctest.h>

#include "legknot/bounds.hpp"
#include "legknot/skein.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace legknot;

TEST_CASE("skein: unknot and unlink") {
  const auto u = parse_pd("PD[O[1]]");
  CHECK(kauffman_F(u) == LaurentPoly2::constant(1));
  CHECK(homfly(u) == LaurentPoly2::constant(1));
  const auto two = parse_pd("PD[O[1],O[2]]");
  CHECK(homfly(two) == (LaurentPoly2::monomial(1, 1, -1) - LaurentPoly2::monomial(1, -1, -1)));
}

TEST_CASE("skein: curls do not change F") {
  CHECK(kauffman_F(parse_pd("PD[X[1,1,2,2]]")) == LaurentPoly2::constant(1));
  CHECK(kauffman_F(parse_pd("PD[X[1,2,2,1]]")) == LaurentPoly2::constant(1));
  CHECK(homfly(parse_pd("PD[X[1,1,2,2]]")) == LaurentPoly2::constant(1));
}

TEST_CASE("skein: trefoil fixtures") {
  const auto d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  const auto F = kauffman_F(d);
  CHECK(kauffman_tb_bound(F) == -6);
  CHECK(kauffman_tb_bound(F.invert_first()) == 1);
  CHECK(homfly_sl_bound(homfly(d)) == -5);
  CHECK(F == oracle::kauffman(d));
  CHECK(homfly(d) == oracle::homfly(d));
}

TEST_CASE("skein: mirror substitutions") {
  for (const char* name : {"3_1", "5_2", "6_2", "7_4"}) {
    const auto d = test::knot(name).diagram();
    const auto m = mirror_diagram(d);
    CHECK(kauffman_F(m) == kauffman_F(d).invert_first());
    CHECK(homfly(m) == homfly(d).invert_first().negate_second());
  }
}

TEST_CASE("skein: Hopf link against the naive expansion") {
  const auto h = parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]");
  CHECK(kauffman_F(h) == oracle::kauffman(h));
  CHECK(homfly(h) == oracle::homfly(h));
}

TEST_CASE("skein: crossing limit") {
  SkeinOptions o;
  o.crossing_limit = 2;
  const auto d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(test::code_of([&] { kauffman_F(d, o); }) == Errc::CrossingLimitExceeded);
}

TEST_CASE("skein: curl removal is an optimisation only") {
  SkeinOptions plain;
  plain.reduce_kinks = false;
  for (const char* name : {"4_1", "6_3", "8_19"}) {
    const auto d = test::knot(name).diagram();
    CHECK(kauffman_F(d, plain) == kauffman_F(d));
    CHECK(homfly(d, plain) == homfly(d));
  }
}

TEST_CASE("dubrovnik and improved bound") {
  const auto F = kauffman_F(parse_pd("PD[O[1]]"));
  CHECK(improved_kauffman_tb_bound(F) == ImprovedBound{-1, false});
  const auto t = kauffman_F(test::knot("3_1").diagram());
  CHECK(improved_kauffman_tb_bound(t) == ImprovedBound{-6, false});
  const auto f19 = kauffman_F(test::knot("11n19").diagram());
  CHECK(improved_kauffman_tb_bound(f19) == ImprovedBound{-8, true});
  CHECK(test::code_of([] { leading_a_part(LaurentPoly2()); }) == Errc::DegreeOfZero);
}
