#include <doctest.h>

#include "topolab/errors.hpp"
#include "topolab/io.hpp"

using namespace topolab;

TEST_CASE("topology JSON round trip") {
  const Topology t = discrete_topology(3);
  const auto j = to_json(t);
  CHECK(j["n"] == 3);
  CHECK(j["opens"].size() == 8);
  CHECK(topology_from_json(j) == t);
  CHECK(parse_topology(j.dump()) == t);
}

TEST_CASE("topology JSON accepts any order and extra keys") {
  const Topology t = parse_topology(R"({"opens":[3,0,1],"n":2,"name":"sierpinski"})");
  CHECK(t.size() == 3);
  CHECK(t.opens()[0].bits() == 0);
}

TEST_CASE("topology JSON errors") {
  CHECK_THROWS_AS(parse_topology("{"), ParseError);
  CHECK_THROWS_AS(parse_topology("[]"), ParseError);
  CHECK_THROWS_AS(parse_topology(R"({"n":2})"), ParseError);
  CHECK_THROWS_AS(parse_topology(R"({"n":"2","opens":[0,3]})"), ParseError);
  CHECK_THROWS_AS(parse_topology(R"({"n":2,"opens":[0,"3"]})"), ParseError);
  CHECK_THROWS_AS(parse_topology(R"({"n":2,"opens":[0,-3]})"), ParseError);
  CHECK_THROWS_AS(parse_topology(R"({"n":2,"opens":[0,1.5,3]})"), ParseError);
  CHECK_THROWS_AS(parse_topology(R"({"n":0,"opens":[0]})"), GroundSizeOutOfRange);
  CHECK_THROWS_AS(parse_topology(R"({"n":2,"opens":[0,7]})"), MaskOutOfRange);
  CHECK_THROWS_AS(parse_topology(R"({"n":2,"opens":[0,1,2]})"), MissingEmptyOrFull);
  CHECK_THROWS_AS(parse_topology(R"({"n":3,"opens":[0,1,2,7]})"), NotClosed);
}

TEST_CASE("coefficient JSON") {
  const CoeffSeq s{1, 3, 3, 1};
  const auto j = to_json(s);
  CHECK(j == nlohmann::json::array({"1", "3", "3", "1"}));
  CHECK(coeffs_from_json(j) == s);
  CHECK(coeffs_from_json(nlohmann::json::array({1, 2})) == CoeffSeq{1, 2});
  const auto big = coeffs_from_json(nlohmann::json::array({"123456789012345678901234567890"}));
  CHECK(big[0] == mpz_class("123456789012345678901234567890"));
  CHECK_THROWS_AS(coeffs_from_json(nlohmann::json::array()), ParseError);
  CHECK_THROWS_AS(coeffs_from_json(nlohmann::json::array({"-1"})), ParseError);
  CHECK_THROWS_AS(coeffs_from_json(nlohmann::json::array({-1})), ParseError);
  CHECK_THROWS_AS(coeffs_from_json(nlohmann::json::array({"1x"})), ParseError);
}

TEST_CASE("report JSON") {
  const auto r = check(instantiate(FamilyId{"nm2-a", 6, 2, std::nullopt}));
  const auto j = to_json(r);
  CHECK(j["family"] == "nm2-a");
  CHECK(j["params"]["j"] == 2);
  CHECK(j["card"] == r.card);
  CHECK(j["poly_match"] == r.poly_match);
  CHECK(j["diff_positions"].is_array());

  EnumStats s;
  s.total = 4;
  s.by_cardinality = {{3, 2}, {4, 2}};
  const auto js = to_json(s);
  CHECK(js["by_cardinality"]["3"] == 2);
  CHECK_FALSE(js.contains("elapsed_ms"));
  CHECK(to_json(s, true).contains("elapsed_ms"));
}

TEST_CASE("pretty masks") {
  CHECK(pretty(SetMask(0b101), 3) == "{x1,x3}");
  CHECK(pretty(SetMask(0), 3) == "{}");
}
