#include <catch2/catch_amalgamated.hpp>

#include "magmakit/json_io.hpp"

#include "fixtures.hpp"

using namespace magmakit;
using namespace fixtures;

TEST_CASE("magma JSON round trip") {
  Magma m = m3();
  json j = to_json(m);
  REQUIRE(j.at("order") == 3);
  REQUIRE(j.at("table")[1][1] == 2);
  Magma back = magma_from_json(j);
  REQUIRE(back == m);
  REQUIRE(back.name == "M3");
}

TEST_CASE("malformed magma JSON is rejected with the right codes") {
  REQUIRE_THROWS_MATCHES(magma_from_json(json{{"order", 2}}), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) { return e.code == "MalformedInput"; }));
  json bad{{"order", 2}, {"table", json::array({{0, 1}, {0, 0}})}};
  REQUIRE_THROWS_MATCHES(magma_from_json(bad), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) { return e.code == "UnitLawViolation"; }));
}

TEST_CASE("name-refs resolve through a registry") {
  MagmaRegistry reg{{"Z2", z2()}};
  REQUIRE(magma_from_json(json("Z2"), reg) == z2());
  REQUIRE_THROWS_AS(magma_from_json(json("nope"), reg), validation_error);
}

TEST_CASE("map and action JSON round trips") {
  ZeroMap l{direct_product(z2(), z2()), z2(), {0, 0, 1, 1}};
  ZeroMap back = zero_map_from_json(to_json(l));
  REQUIRE(back == l);

  Action a = z2_action(0);
  Action aback = action_from_json(to_json(a));
  REQUIRE(aback == a);
}

TEST_CASE("split extension and morphism JSON round trips") {
  SplitExtension e = semidirect_extension(z2_action(0));
  SplitExtension eback = split_extension_from_json(to_json(e));
  REQUIRE(eback.a == e.a);
  REQUIRE(eback.alpha.values == e.alpha.values);
  REQUIRE(eback.lambda.values == e.lambda.values);

  SplitExtMorphism m = identity_morphism(e);
  SplitExtMorphism mback = morphism_from_json(to_json(m));
  REQUIRE(mback.p.values == m.p.values);
}

TEST_CASE("JSON round trips over every small extension, byte-identically") {
  for (const Action& a : all_actions_up_to(2)) {
    SplitExtension e = semidirect_extension(a);
    std::string once = dump_canonical(to_json(e));
    std::string twice = dump_canonical(to_json(split_extension_from_json(json::parse(once))));
    REQUIRE(once == twice);
  }
}

TEST_CASE("kind autodetection matches the emitters") {
  REQUIRE(detect_kind(to_json(z2())) == JsonKind::Magma);
  REQUIRE(detect_kind(to_json(ZeroMap{z2(), z2(), {0, 1}})) == JsonKind::Map);
  REQUIRE(detect_kind(to_json(z2_action(1))) == JsonKind::Action);
  SplitExtension e = semidirect_extension(z2_action(1));
  REQUIRE(detect_kind(to_json(e)) == JsonKind::SplitExtension);
  REQUIRE(detect_kind(to_json(identity_morphism(e))) == JsonKind::Morphism);
  REQUIRE_THROWS_AS(detect_kind(json{{"foo", 1}}), validation_error);
}

TEST_CASE("invalid payloads inside well-shaped JSON fail validation") {
  json j = to_json(z2_action(0));
  j["table"][0][1] = 0;  // unit must act as the identity
  REQUIRE_THROWS_MATCHES(action_from_json(j), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) { return e.code == "UnitActsNontrivially"; }));

  SplitExtension e = semidirect_extension(z2_action(0));
  json je = to_json(e);
  je["lambda"] = std::vector<int>{0, 0, 0, 0};
  REQUIRE_THROWS_MATCHES(split_extension_from_json(je), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e2) { return e2.code == "EquationViolation"; }));
}
