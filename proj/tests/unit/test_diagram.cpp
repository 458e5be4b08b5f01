#include <doctest.h>

#include "legknot/diagram.hpp"
#include "legknot/error.hpp"

using namespace legknot;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::UsageError;
}

}  // namespace

TEST_CASE("pd: empty diagram with a free loop") {
  auto d = parse_pd("PD[]", 1);
  CHECK(d.crossing_count() == 0);
  CHECK(d.components() == 1);
  CHECK(parse_pd("PD[O[1]]") == d);
  CHECK(code_of([] { parse_pd("PD[]"); }) == Errc::SyntaxError);
}

TEST_CASE("pd: trefoil") {
  auto d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(d.crossing_count() == 3);
  CHECK(d.components() == 1);
  CHECK(d.writhe() == -3);
  CHECK(parse_pd(d.to_pd_string()) == d);
  CHECK(parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]") == d);
}

TEST_CASE("pd: kinks") {
  CHECK(parse_pd("PD[X[1,1,2,2]]").writhe() == 1);
  CHECK(parse_pd("PD[X[2,1,1,2]]").writhe() == -1);
  CHECK(parse_pd("PD[X[1,1,2,2]]").components() == 1);
}

TEST_CASE("pd: malformed input") {
  CHECK(code_of([] { parse_pd("PD[X[1,1,1,2]]"); }) == Errc::ArcMultiplicity);
  CHECK(code_of([] { parse_pd("PD[X[1,2,3,4]]"); }) == Errc::ArcMultiplicity);
  CHECK(code_of([] { parse_pd("PD[X[1,3,2,4],X[1,4,2,3]]"); }) == Errc::OrientationConflict);
  CHECK(code_of([] { parse_pd("PD[X[1,4,2,5]"); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse_pd("PD[Y[1,2,3,4]]"); }) == Errc::SyntaxError);
}

TEST_CASE("pd: hopf link has two components") {
  auto d = parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]");
  CHECK(d.components() == 2);
  CHECK(d.writhe() == -2);
}

TEST_CASE("mirror") {
  auto d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  auto m = mirror_diagram(d);
  CHECK(m.writhe() == 3);
  CHECK(m.components() == 1);
  CHECK(mirror_diagram(m) == d);
  auto u = parse_pd("PD[]", 1);
  CHECK(mirror_diagram(u) == u);
}

TEST_CASE("braid parsing") {
  auto b = parse_braid("m=2: 1 1 1");
  CHECK(b.strands == 2);
  CHECK(b.letters == std::vector<int>{1, 1, 1});
  CHECK(b.writhe() == 3);
  CHECK(parse_braid("m=3: 1 -2").writhe() == 0);
  CHECK(code_of([] { parse_braid("m=2: 5"); }) == Errc::LetterOutOfRange);
  CHECK(code_of([] { parse_braid("2: 1"); }) == Errc::SyntaxError);
  CHECK(parse_braid(b.to_string()) == b);
}

TEST_CASE("braid closure") {
  auto t = braid_closure(make_braid(2, {1, 1, 1}));
  CHECK(t.crossing_count() == 3);
  CHECK(t.components() == 1);
  CHECK(t.writhe() == 3);

  auto h = braid_closure(make_braid(2, {1, 1}));
  CHECK(h.components() == 2);
  CHECK(h.writhe() == 2);

  auto u = braid_closure(make_braid(1, {}));
  CHECK(u.crossing_count() == 0);
  CHECK(u.components() == 1);

  auto f = braid_closure(make_braid(3, {1, -2, 1, -2}));
  CHECK(f.components() == 1);
  CHECK(f.writhe() == 0);

  auto split = braid_closure(make_braid(4, {1, -1}));
  CHECK(split.components() == 4);
  CHECK(make_braid(4, {1, -1}).permutation_cycles() == 4);
  CHECK(split.free_loops() == 2);
}
