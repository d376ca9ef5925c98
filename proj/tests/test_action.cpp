#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace magmakit;
using namespace fixtures;

TEST_CASE("validate_action accepts both Z2-on-Z2 actions") {
  REQUIRE(z2_action(1).act(1, 1) == 1);
  REQUIRE(z2_action(0).act(1, 1) == 0);
}

TEST_CASE("validate_action rejects tables breaking the two action laws") {
  REQUIRE_THROWS_MATCHES(validate_action(z2(), z2(), {{0, 0}, {0, 1}}), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) { return e.code == "UnitActsNontrivially"; }));
  REQUIRE_THROWS_MATCHES(validate_action(z2(), z2(), {{0, 1}, {1, 1}}), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) { return e.code == "ZeroNotFixed"; }));
}

TEST_CASE("semidirect over the trivial action is the direct product") {
  SemidirectDiagram d = semidirect(trivial_action(z2(), z2()));
  REQUIRE(d.total == direct_product(z2(), z2()));
}

TEST_CASE("semidirect evaluates the twisted addition") {
  SemidirectDiagram d = semidirect(z2_action(0));
  // (1,1) + (1,0) = (1 + 1*1, 1+0) = (1, 1) since 1*1 = 0
  REQUIRE(d.total.add(pair_index(1, 1, 2), pair_index(1, 0, 2)) == pair_index(1, 1, 2));
}

TEST_CASE("semidirect with a one-point kernel is isomorphic to the actor") {
  for (const Magma& b : magmas_up_to(3)) {
    SemidirectDiagram d = semidirect(trivial_action(b, trivial()));
    REQUIRE(are_isomorphic(d.total, b).has_value());
  }
}

TEST_CASE("firmness") {
  REQUIRE(is_firm(trivial_action(m3(), z2())));
  Action a = z2_action(0);
  REQUIRE_FALSE(is_firm(a));
  auto w = firmness_witness(a);
  REQUIRE(w.has_value());
  REQUIRE(*w == std::array<int, 3>{1, 1, 1});  // 1*(1*1) = 1*0 = 0 but (1+1)*1 = 0*1 = 1
  REQUIRE(is_firm(trivial_action(trivial(), m3())));
}

TEST_CASE("distributivity") {
  REQUIRE(is_distributive(trivial_action(z2(), m3())));
  REQUIRE(is_distributive(z2_action(0)));
  REQUIRE(is_distributive(validate_action(z2(), or_monoid(), {{0, 1}, {0, 0}})));
}

TEST_CASE("a non-distributive action exists at |X| = 3") {
  bool found = false;
  for (const Magma& x : all_magmas(3)) {
    enumerate_actions(z2(), x, [&](const Action& a) {
      if (!is_distributive(a)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) break;
  }
  REQUIRE(found);
}

TEST_CASE("restrict_action along identity, zero, and a coordinate inclusion") {
  Action a = z2_action(0);
  REQUIRE(restrict_action(a, identity_hom(z2())) == a);
  REQUIRE(restrict_action(a, zero_hom(z2(), z2())) == trivial_action(z2(), z2()));

  Magma b4 = semidirect(trivial_action(z2(), z2())).total;  // Z2 x Z2, (x,b) pairs
  Action big = trivial_action(b4, m3());
  Hom f = make_hom(z2(), b4, {0, pair_index(1, 0, 2)});
  Action small = restrict_action(big, f);
  REQUIRE(small.actor == z2());
  for (int xi = 0; xi < 3; ++xi) REQUIRE(small.act(1, xi) == big.act(pair_index(1, 0, 2), xi));
}

TEST_CASE("restriction preserves firmness and distributivity") {
  for (const Action& a : all_actions_up_to(2))
    for (const Hom& f : all_homs(z2(), a.actor)) {
      Action r = restrict_action(a, f);
      if (is_firm(a)) REQUIRE(is_firm(r));
      if (is_distributive(a)) REQUIRE(is_distributive(r));
    }
}

TEST_CASE("action counts follow the free-cell formula") {
  int n = 0;
  enumerate_actions(z2(), z2(), [&](const Action&) { ++n; return true; });
  REQUIRE(n == 2);
  REQUIRE(count_actions(z2(), z2()) == 2);
  REQUIRE(count_actions(z2(), m3()) == 9);
  REQUIRE(count_actions(trivial(), m3()) == 1);
  int n3 = 0;
  enumerate_actions(z2(), m3(), [&](const Action&) { ++n3; return true; });
  REQUIRE(n3 == 9);
}

TEST_CASE("firm enumeration agrees with filtering at small orders") {
  for (const Magma& b : magmas_up_to(2))
    for (const Magma& x : magmas_up_to(2)) {
      std::vector<Action> filtered;
      enumerate_actions(b, x, [&](const Action& a) {
        if (is_firm(a)) filtered.push_back(a);
        return true;
      });
      REQUIRE(all_firm_actions(b, x).size() == filtered.size());
    }
}
