#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "legknot/bounds.hpp"

using legknot::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.push_back("--records");
  args.push_back(LEGKNOT_TEST_RECORDS);
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Run run_plain(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: invariants of the unknot grid") {
  const auto r = run({"invariants", "--grid", "x:2,1 o:1,2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("tb=-1 sl=-1 r=0\n", 0) == 0);
}

TEST_CASE("cli: certify the trefoil") {
  const auto r = run({"certify", "--knot", "3_1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["certified"]["alpha"]["value"] == 5);
  CHECK(j["certified"]["tb_K"]["value"] == -6);
  CHECK(j["certified"]["tb_mirror"]["value"] == 1);
  const auto text = run({"certify", "--knot", "3_1"});
  CHECK(text.out.find("alpha                     5 (bound-sharpness)") != std::string::npos);
}

TEST_CASE("cli: JSON reports round trip") {
  for (const char* verb : {"bounds", "certify"}) {
    const auto r = run({verb, "--knot", "10_124", "--json"});
    REQUIRE(r.code == 0);
    const auto rep = legknot::report_from_json(r.out);
    CHECK(legknot::report_to_json(rep) + "\n" == r.out);
  }
}

TEST_CASE("cli: braid double") {
  const auto r = run({"double", "--braid", "m=2: 1 1 1", "--framing", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("braid m=4: 2 1 3 2 2 1 3 2 2 1 3 2 -1 -1 -1 -1 -1 -1\n") == 0);
  CHECK(r.out.find("sl=2") != std::string::npos);
}

TEST_CASE("cli: output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"kh", "--knot", "8_19"},
                                                               {"poly", "homfly", "--knot", "7_4"},
                                                               {"invariants", "--grid", "random:9", "--seed", "5"},
                                                               {"double", "--knot", "4_1", "--framing", "-2"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: exit codes") {
  CHECK(run_plain({}).code == 2);
  CHECK(run({"poly", "jones", "--knot", "3_1"}).code == 2);
  CHECK(run({"kh", "--knot", "3_1", "--field", "Z3"}).code == 2);
  CHECK(run({"double", "--knot", "3_1"}).code == 2);
  CHECK(run({"invariants", "--pd", "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"}).code == 2);
  CHECK(run({"invariants", "--grid", "x:1,2 o:1,2"}).code == 3);
  CHECK(run({"kh", "--pd", "PD[X[1,2,3]]"}).code == 3);
  CHECK(run({"certify", "--knot", "13a_1"}).code == 3);
  CHECK(run({"kh", "--knot", "8_19", "--limit", "4"}).code == 4);
  CHECK(run({"validate", "--pd", "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]", "--grid", "x:2,6,5,3,4,1 o:5,4,1,6,2,3"})
            .code == 5);
  CHECK(run_plain({"--help"}).code == 0);
}

TEST_CASE("cli: validate the bundled table") {
  const auto r = run({"validate", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() >= 50);
}
