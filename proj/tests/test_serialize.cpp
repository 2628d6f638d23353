#include "a4csl/serialize.hpp"
#include "doctest.h"

using namespace a4csl;
using nlohmann::json;

TEST_CASE("integers") {
  CHECK(to_json(Integer(-42)) == json(-42));
  Integer big = Integer(1) << 80;
  CHECK(to_json(big) == json(to_string(big)));
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(integer_from_json(json(7)) == 7);
  CHECK_THROWS_AS(integer_from_json(json("12a")), ParseError);
  CHECK_THROWS_AS(integer_from_json(json(1.5)), ParseError);
}

TEST_CASE("icosians") {
  Icosian q = *to_icosian(parse_quat("(t, 2*t, 0, 0)"));
  json j = to_json(q);
  CHECK(j["quat"] == "(t, 2*t, 0, 0)");
  CHECK(j["coords"].size() == 4);
  CHECK(icosian_from_json(j) == q);
  CHECK_THROWS_AS(icosian_from_json(json{{"coords", {"1", "2"}}}), ParseError);
  CHECK_THROWS_AS(icosian_from_json(json{{"coords", {"1", "2", "x", "0"}}}), ParseError);
}

TEST_CASE("sublattices") {
  SublatticeL s = csl_intersection(rotation_of(*to_icosian(parse_quat("(t, 2*t, 0, 0)"))));
  json j = to_json(s);
  CHECK(j["hnf"].size() == 16);
  CHECK(j["index"] == 5);
  CHECK(sublattice_from_json(j) == s);
  json wrong = j;
  wrong["index"] = 6;
  CHECK_THROWS_AS(sublattice_from_json(wrong), ParseError);
  json not_hnf = j;
  not_hnf["hnf"][1] = 99;
  CHECK_THROWS_AS(sublattice_from_json(not_hnf), ParseError);
  CHECK_THROWS_AS(sublattice_from_json(json{{"hnf", {1, 2, 3}}}), ParseError);
}

TEST_CASE("records and census rows") {
  CslRecord rec = csl_record(rotation_of(*to_icosian(parse_quat("(1, 1, 0, 0)"))));
  json j = document(to_json(rec));
  CHECK(j["schema"] == 1);
  CHECK(j["sigma"] == 2);
  CHECK(j["den"] == 2);
  CHECK(j["hnf"].size() == 16);
  CHECK(j["q_alpha"]["quat"] == "(1, 1, 0, 0)");
  SigmaCensus c = census(5);
  CHECK(census_csv_header() == "n,rotation_classes,csl_count,f_formula,match");
  CHECK(census_csv_row(c) == "5,30,6,6,true");
  json cj = to_json(c, true);
  CHECK(cj["records"].size() == 30);
  CHECK(cj["match"] == true);
  CHECK(to_json(c, false).dump() == to_json(census(5, {2, 0}), false).dump());
}
