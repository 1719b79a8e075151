#include "doctest.h"
#include "seshadri/serialize.hpp"

using namespace seshadri;

namespace {

StratPoset poset(const char* type, std::vector<std::int64_t> lambda, const char* tau = "w0") {
  Weight w = Weight::Map(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
  return StratPoset::build(CartanData::named(type), w, tau);
}

}  // namespace

TEST_CASE("Cartan data round trips") {
  for (const char* name : {"A3", "B2", "G2", "D4"}) {
    CartanData cd = CartanData::named(name);
    CHECK(cartan_from_json(Json::parse(to_json(cd).dump())) == cd);
  }
  CHECK_THROWS_AS(cartan_from_json(Json{{"cartan", {{2, -1}, {-1}}}}), ValidationError);
  CHECK_THROWS_AS(cartan_from_json(Json{{"nope", 1}}), ValidationError);
}

TEST_CASE("poset JSON round trips") {
  for (auto p : {poset("A2", {1, 1}), poset("B2", {0, 1}, "1.2"), poset("G2", {2, 1}, "2.1.2")}) {
    Json j = to_json(p);
    StratPoset back = poset_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("tampered poset JSON is rejected") {
  Json j = to_json(poset("A2", {1, 1}));
  j["edges"][2]["bond"] = 5;
  CHECK_THROWS_AS(poset_from_json(j), ValidationError);
  Json k = to_json(poset("A2", {1, 1}));
  k["vertices"].erase(k["vertices"].begin());
  CHECK_THROWS_AS(poset_from_json(k), ValidationError);
}

TEST_CASE("fan element and path JSON") {
  StratPoset p = poset("A1", {2}, "1");
  FanElement a = parse_fan_element(p, "1:1/2,id:1/2");
  Json j = to_json(p, a);
  CHECK(j["coeffs"][0]["vertex"] == "1");
  CHECK(j["coeffs"][0]["num"] == 1);
  CHECK(j["coeffs"][0]["den"] == 2);
  CHECK(j["degree"]["num"] == 1);
  CHECK(j["degree"]["den"] == 1);
  Json path = to_json(p, theta_inv(p, a, 1));
  CHECK(path["sigmas"] == Json::array({"1", "id"}));
  CHECK(path["ds"][0]["den"] == 2);
}

TEST_CASE("character JSON is sorted by weight") {
  Character chi = demazure_character(poset("A1", {2}, "1"), 1);
  Json j = to_json(chi);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["weight"] == Json::array({-2}));
  CHECK(j[2]["weight"] == Json::array({2}));
  CHECK(j[1]["mult"] == 1);
  CHECK(character_to_csv(chi) == "weight,mult\n\"-2\",1\n\"0\",1\n\"2\",1\n");
}

TEST_CASE("NOK JSON") {
  Json j = nok_to_json(poset("A2", {1, 1}), {0, 1, 2});
  CHECK(j["degree"] == 6);
  CHECK(j["chains"].size() == 4);
  CHECK(j["hilbert"][1]["count"] == 8);
  for (const auto& c : j["chains"]) CHECK(c["vertices"].size() == 4);
}

TEST_CASE("fan CSV has a header of vertex labels") {
  StratPoset p = poset("A1", {2}, "1");
  CHECK(fan_to_csv(p, enumerate_fan(p, 1)) == "id,1\n0,1\n1/2,1/2\n1,0\n");
}
