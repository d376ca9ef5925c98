#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace magmakit;
using namespace fixtures;

TEST_CASE("validate_magma accepts tables with the unit law") {
  Magma m = z2();
  REQUIRE(m.order == 2);
  REQUIRE(m.add(1, 1) == 0);
}

TEST_CASE("validate_magma rejects unit law violations") {
  REQUIRE_THROWS_MATCHES(validate_magma(2, {{0, 1}, {0, 0}}), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) { return e.code == "UnitLawViolation"; }));
  REQUIRE_THROWS_MATCHES(validate_magma(2, {{0, 1}, {1, 5}}), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) { return e.code == "EntryOutOfRange"; }));
}

TEST_CASE("the order-3 example magma is valid but not associative") {
  Magma m = m3();
  REQUIRE(m.add(m.add(1, 1), 1) == 1);
  REQUIRE(m.add(1, m.add(1, 1)) == 0);
  REQUIRE_FALSE(is_associative(m));
  auto w = associativity_witness(m);
  REQUIRE(w.has_value());
  REQUIRE(*w == std::array<int, 3>{1, 1, 1});
}

TEST_CASE("associativity and commutativity on the small fixtures") {
  REQUIRE(is_associative(z2()));
  REQUIRE(is_associative(or_monoid()));
  REQUIRE(is_commutative(z2()));
  REQUIRE(is_commutative(or_monoid()));
}

TEST_CASE("is_hom on identity, zero, and the Z2 -> OR candidate") {
  REQUIRE(is_hom(identity_hom(m3())));
  REQUIRE(is_hom(zero_hom(m3(), z2())));
  ZeroMap bad = validate_zero_map(z2(), or_monoid(), {0, 1});
  REQUIRE_FALSE(is_hom(bad));  // values[1+1] = 0 but values[1]+values[1] = 1
  REQUIRE_THROWS_AS(make_hom(bad), validation_error);
}

TEST_CASE("hom composition stays a hom") {
  for (const Hom& f : all_homs(z2(), z2()))
    for (const Hom& g : all_homs(z2(), or_monoid())) {
      Hom gf = compose(g, f);
      REQUIRE(is_hom(gf));
      for (int i = 0; i < 2; ++i) REQUIRE(gf(i) == g(f(i)));
    }
}

TEST_CASE("submagma extracts closed subsets with an inclusion hom") {
  Magma dp = direct_product(z2(), z2());
  Submagma s = submagma(dp, {0, 2});  // {(0,0), (1,0)} in (x,b) indexing
  REQUIRE(s.sub.order == 2);
  REQUIRE(are_isomorphic(s.sub, z2()).has_value());
  REQUIRE(is_hom(s.inclusion));

  Submagma zero_only = submagma(or_monoid(), {0});
  REQUIRE(zero_only.sub.order == 1);

  REQUIRE_THROWS_MATCHES(submagma(m3(), {0, 1}), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [](const validation_error& e) {
                               return e.code == "NotClosed" && e.witness == std::vector<int>{1, 1};
                             }));
}

TEST_CASE("direct products are componentwise on pair indices") {
  Magma dp = direct_product(z2(), z2());
  REQUIRE(dp.order == 4);
  for (int x1 = 0; x1 < 2; ++x1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int b2 = 0; b2 < 2; ++b2)
          REQUIRE(dp.add(pair_index(x1, b1, 2), pair_index(x2, b2, 2)) ==
                  pair_index((x1 + x2) % 2, (b1 + b2) % 2, 2));

  Magma zor = direct_product(z2(), or_monoid());
  REQUIRE(zor.add(pair_index(1, 1, 2), pair_index(1, 1, 2)) == pair_index(0, 1, 2));

  REQUIRE(are_isomorphic(direct_product(m3(), trivial()), m3()).has_value());
}

TEST_CASE("isomorphism search") {
  auto id = are_isomorphic(z2(), z2());
  REQUIRE(id.has_value());
  REQUIRE(id->values == std::vector<int>{0, 1});
  REQUIRE_FALSE(are_isomorphic(z2(), or_monoid()).has_value());
}

TEST_CASE("isomorphism found for any zero-fixing scramble") {
  Magma m = m3();
  std::vector<int> perm{0, 2, 1};
  Magma scrambled = m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      scrambled.table[static_cast<size_t>(perm[static_cast<size_t>(i)]) * 3 +
                      perm[static_cast<size_t>(j)]] =
          perm[static_cast<size_t>(m.add(i, j))];
  auto iso = are_isomorphic(m, scrambled);
  REQUIRE(iso.has_value());
  REQUIRE(is_hom(*iso));
}

TEST_CASE("isomorphism is reflexive and symmetric over small magmas") {
  for (const Magma& m : magmas_up_to(3)) REQUIRE(are_isomorphic(m, m).has_value());
  auto order2 = all_magmas(2);
  for (const Magma& m : order2)
    for (const Magma& n : order2)
      REQUIRE(are_isomorphic(m, n).has_value() == are_isomorphic(n, m).has_value());
}
