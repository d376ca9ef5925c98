#include <catch2/catch_amalgamated.hpp>

#include "magmakit/verify.hpp"

#include "fixtures.hpp"

using namespace magmakit;
using namespace fixtures;

TEST_CASE("verification suite is vacuous-but-green at order 1") {
  SearchBudget tiny;
  tiny.max_order = 1;
  VerificationReport r = run_verification_suite(tiny);
  REQUIRE(r.all_pass());
  REQUIRE(r.properties.size() >= 15);
}

TEST_CASE("verification suite passes exhaustively at order 2") {
  SearchBudget small;
  small.max_order = 2;
  small.workers = 2;
  VerificationReport r = run_verification_suite(small);
  for (const auto& p : r.properties) {
    INFO(p.name << ": " << p.witness);
    CHECK(p.pass);
    CHECK(p.instances > 0);
  }
  REQUIRE(r.all_pass());
}

TEST_CASE("verification report JSON is worker-independent and run-stable") {
  SearchBudget a;
  a.max_order = 2;
  a.workers = 1;
  SearchBudget b = a;
  b.workers = 4;
  std::string ja = dump_canonical(to_json(run_verification_suite(a)));
  std::string jb = dump_canonical(to_json(run_verification_suite(b)));
  std::string ja2 = dump_canonical(to_json(run_verification_suite(a)));
  REQUIRE(ja == jb);
  REQUIRE(ja == ja2);
}

TEST_CASE("report table marks failures") {
  VerificationReport r;
  r.properties.push_back(PropertyResult{"good", true, 3, "", 0.0});
  r.properties.push_back(PropertyResult{"bad", false, 5, "some witness", 0.0});
  REQUIRE_FALSE(r.all_pass());
  std::string t = report_table(r);
  REQUIRE(t.find("FAIL  bad") != std::string::npos);
  REQUIRE(t.find("some witness") != std::string::npos);
}

TEST_CASE("sampled firm actions are firm") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Magma b = magma_at(3, rng() % 81);
    Magma x = magma_at(3, rng() % 81);
    REQUIRE(is_firm(detail::sample_firm_action(b, x, rng)));
  }
}

TEST_CASE("action sweep covers every pair exactly once") {
  ActionSweep s = make_action_sweep(2);
  std::uint64_t expected = 0;
  for (const Magma& b : magmas_up_to(2))
    for (const Magma& x : magmas_up_to(2)) expected += count_actions(b, x);
  REQUIRE(s.total == expected);
  // decode round trip at the chunk boundaries used by workers
  for (std::uint64_t i = 0; i < s.total; ++i) {
    Action a = s.at(i);
    REQUIRE(a.actor.order <= 2);
    REQUIRE(a.space.order <= 2);
  }
}
