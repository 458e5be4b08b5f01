#include <doctest.h>

#include <fstream>
#include <string>

#include <json.hpp>

#include "legknot/bounds.hpp"
#include "support.hpp"

using namespace legknot;

// Polynomials and Khovanov ranks tabulated independently, converted to the
// library's conventions when the table was built.
TEST_CASE("reference: F, P and Kh agree with the tabulated values") {
  std::ifstream in(LEGKNOT_TEST_REFERENCE);
  REQUIRE(in);
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    const auto& r = test::knot(j.at("name").get<std::string>().c_str());
    CAPTURE(r.name);
    const auto d = r.diagram();
    CHECK(kauffman_F(d) == LaurentPoly2::parse(j.at("kauffman").get<std::string>()));
    CHECK(homfly(d) == LaurentPoly2::parse(j.at("homfly").get<std::string>()));
    KhTable want;
    for (const auto& t : j.at("khovanov")) want.ranks[{t[0].get<int>(), t[1].get<int>()}] = t[2].get<std::int64_t>();
    CHECK(khovanov(d) == want);
    const auto rep = certify(r);
    CHECK(rep.alpha->value == j.at("arc_index").get<int>());
    if (!j.at("tb").is_null()) {
      CHECK(rep.tb_knot->value == j.at("tb")[0].get<int>());
      CHECK(rep.tb_mirror->value == j.at("tb")[1].get<int>());
    }
    CHECK(rep.braid_index_lower_mfw <= j.at("braid_index").get<int>());
    ++checked;
  }
  CHECK(checked == static_cast<int>(test::bundled().size()));
}
