#include <doctest.h>

#include <set>
#include <string>

#include "legknot/bounds.hpp"
#include "support.hpp"

using namespace legknot;

TEST_CASE("bounds: scalar bounds on fixtures") {
  const auto one = LaurentPoly2::constant(1);
  CHECK(kauffman_tb_bound(one) == -1);
  CHECK(homfly_sl_bound(one) == -1);
  CHECK(mfw_braid_lower(one) == 1);
  CHECK(test::code_of([] { kauffman_tb_bound(LaurentPoly2()); }) == Errc::DegreeOfZero);

  const auto d = test::knot("3_1").diagram();
  CHECK(mfw_braid_lower(homfly(d)) == 2);
  CHECK(homfly_sl_bound(homfly(mirror_diagram(d))) == 1);
  CHECK(homfly_sl_bound(homfly(test::knot("9_42").diagram())) == -3);
  CHECK(mfw_braid_lower(homfly(test::knot("9_42").diagram())) < 4);
  CHECK(kauffman_tb_bound(kauffman_F(test::knot("4_1").diagram())) == -3);
}

TEST_CASE("bounds: arc bounds") {
  const auto u = test::knot("0_1");
  const auto a0 = arc_bounds(kauffman_F(u.diagram()), khovanov(u.diagram()), u.grid);
  CHECK(a0 == ArcBounds{2, 2, 2});
  const auto t = test::knot("3_1");
  CHECK(arc_bounds(kauffman_F(t.diagram()), khovanov(t.diagram()), t.grid) == ArcBounds{5, 5, 5});
  const auto k = test::knot("10_124");
  const auto a = arc_bounds(kauffman_F(k.diagram()), khovanov(k.diagram()), k.grid);
  CHECK(a.lower_kauffman <= 7);
  CHECK(a.lower_khovanov == 7);
  CHECK(a.upper_grid == 8);
  CHECK(arc_bounds(kauffman_F(t.diagram()), khovanov(t.diagram()), std::nullopt).upper_grid == std::nullopt);
}

TEST_CASE("certify: unknot and trefoil") {
  const auto u = certify(test::knot("0_1"));
  CHECK(u.alpha == Certified{2, Provenance::BoundSharpness});
  CHECK(u.tb_knot->value == -1);
  CHECK(u.tb_mirror->value == -1);
  const auto t = certify(test::knot("3_1"));
  CHECK(t.alpha->value == 5);
  CHECK(t.tb_knot->value == -6);
  CHECK(t.tb_mirror->value == 1);
  CHECK(t.sl_knot->value == -5);
}

TEST_CASE("certify: 10_124 needs its recorded values") {
  auto r = test::knot("10_124");
  const auto rep = certify(r);
  CHECK(rep.bounds.tb_upper_khovanov == 7);
  CHECK(rep.alpha == Certified{8, Provenance::RecordedException});
  CHECK(rep.tb_knot->value == 7);
  CHECK(rep.tb_mirror == Certified{-15, Provenance::RecordedException});

  r.alpha.reset();
  r.tb.reset();
  r.tb_mirror.reset();
  const auto bare = certify(r);
  CHECK_FALSE(bare.alpha.has_value());
  CHECK_FALSE(bare.tb_mirror.has_value());
}

TEST_CASE("certify: every certified record satisfies the sum rule") {
  for (const auto& r : test::bundled()) {
    CAPTURE(r.name);
    const auto rep = certify(r);
    REQUIRE(rep.alpha);
    REQUIRE(rep.tb_knot);
    REQUIRE(rep.tb_mirror);
    CHECK(rep.tb_knot->value + rep.tb_mirror->value == -rep.alpha->value);
    CHECK(rep.arc_lower_kauffman <= rep.alpha->value);
    CHECK(rep.arc_lower_khovanov <= rep.alpha->value);
    CHECK(rep.alpha->value <= *rep.arc_upper_grid);
    CHECK(rep.bounds.tb_upper_khovanov <= rep.bounds.tb_upper_kauffman);
    CHECK(rep.mirror.tb_upper_khovanov <= rep.mirror.tb_upper_kauffman);
    if (rep.sl_knot) CHECK(rep.sl_knot->value % 2 != 0);
    if (rep.sl_mirror) CHECK(rep.sl_mirror->value % 2 != 0);
  }
}

TEST_CASE("certify: exceptional values") {
  auto tb = [](const char* n) { return certify(test::knot(n)); };
  CHECK(tb("10_132").tb_mirror->value == -1);
  CHECK(tb("11n12").tb_knot->value == -2);
  CHECK(tb("11n19").tb_knot == Certified{-8, Provenance::BoundSharpness});
  CHECK(tb("11n38").tb_mirror->value == -4);
  CHECK(tb("11n57").tb_mirror->value == -13);
  CHECK(tb("11n88").tb_mirror->value == -13);
  CHECK(tb("11n92").tb_knot->value == -6);
  CHECK(tb("9_42").sl_mirror->value == -5);
  CHECK(tb("9_49").sl_mirror->value == -11);
  CHECK(tb("10_132").sl_mirror->value == -1);
  CHECK(tb("10_150").sl_mirror->value == -9);
  CHECK(tb("10_156").sl_knot->value == -7);
}

TEST_CASE("bounds: improved Kauffman applies to exactly seven chiral knots") {
  std::set<std::string> applied;
  for (const auto& r : test::bundled()) {
    const auto rep = compute_bounds(r);
    if (rep.bounds.tb_upper_kauffman_improved && rep.bounds.tb_upper_kauffman_improved->applied)
      applied.insert(r.name);
    if (rep.mirror.tb_upper_kauffman_improved && rep.mirror.tb_upper_kauffman_improved->applied)
      applied.insert("m" + r.name);
  }
  CHECK(applied == std::set<std::string>{"m10_136", "11n19", "11n20", "m11n37", "m11n50", "11n86", "m11n126"});
}

TEST_CASE("certify: contradictory recorded values") {
  auto r = test::knot("10_124");
  r.tb->value = 8;
  CHECK(test::code_of([&] { certify(r); }) == Errc::InconsistentRecord);
  r = test::knot("10_124");
  r.tb_mirror->value = -17;
  CHECK(test::code_of([&] { certify(r); }) == Errc::InconsistentRecord);
  r = test::knot("3_1");
  r.alpha = RecordedValue{4, "made up"};
  CHECK(test::code_of([&] { certify(r); }) == Errc::InconsistentRecord);
  r = test::knot("9_42");
  r.cable_sl_mirror.reset();
  r.cable_sl = RecordedCableBound{0, -8, "made up"};
  CHECK(test::code_of([&] { certify(r); }) == Errc::InconsistentRecord);
}

TEST_CASE("certify: links and missing grids") {
  KnotRecord hopf;
  hopf.name = "hopf";
  hopf.pd = "PD[X[4,1,3,2],X[2,3,1,4]]";
  CHECK(test::code_of([&] { certify(hopf); }) == Errc::NotAKnot);
  auto r = test::knot("4_1");
  r.grid.reset();
  const auto rep = certify(r);
  CHECK_FALSE(rep.alpha.has_value());
  CHECK_FALSE(rep.arc_upper_grid.has_value());
}

TEST_CASE("bounds report: JSON round trip and text") {
  for (const char* name : {"0_1", "9_42", "10_124", "11n19"}) {
    const auto c = certify(test::knot(name));
    CHECK(report_from_json(report_to_json(c)) == c);
    const auto b = compute_bounds(test::knot(name));
    CHECK(report_from_json(report_to_json(b)) == b);
    CHECK(report_to_text(c).find("tb_upper_khovanov") != std::string::npos);
  }
  CHECK(test::code_of([] { report_from_json("{}"); }) == Errc::SyntaxError);
}
