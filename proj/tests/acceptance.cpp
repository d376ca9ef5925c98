// Acceptance gate: ten pinned criteria, one pass/fail line each.
// Exit code 0 iff every criterion passes.

#include <cstdio>
#include <sstream>

#include "magmakit/verify.hpp"

using namespace magmakit;

namespace {

int failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail = "") {
  std::printf("criterion %2d [%s] %s%s%s\n", number, pass ? "PASS" : "FAIL", title,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

Magma z2() { return validate_magma(2, {{0, 1}, {1, 0}}, "Z2"); }
Magma or_monoid() { return validate_magma(2, {{0, 1}, {1, 1}}, "OR"); }

// 1. Every action at component orders <= 3 yields a valid split extension.
void criterion_1(int workers) {
  PropertyResult r = prop_semidirect_validity(3, workers);
  std::ostringstream d;
  d << r.instances << " extensions validated";
  report(1, "semidirect validity at orders <= 3", r.pass && r.instances > 500000, d.str());
}

// 2. Equivalence round trips, including 1000 scrambled extensions.
void criterion_2(int workers) {
  PropertyResult a = prop_action_round_trip(3, workers);
  PropertyResult b = prop_canonical_iso(3, workers, 1000, 2026);
  PropertyResult c = prop_splext_round_trip(3, workers, 1000, 2027);
  std::ostringstream d;
  d << a.instances << " + " << b.instances << " + " << c.instances << " round trips";
  report(2, "equivalence round trips with 1000 scrambles", a.pass && b.pass && c.pass, d.str());
}

// 3. Composability criteria agree and candidates only fail at the
// partial-associativity counterpart, exhaustively at component orders <= 2.
void criterion_3(int workers) {
  PropertyResult r = prop_composability(2, 0, 0, workers);
  std::ostringstream d;
  d << r.instances << " middle-compatible pairs";
  report(3, "composability trichotomy at orders <= 2", r.pass && r.instances > 0, d.str());
}

// 4. The search finds a non-composable pair, and the pinned witness action
// fails exactly at (y,d,x) = (1,1,1).
void criterion_4() {
  SearchBudget b;
  auto found = search_noncomposable_pair(b);
  bool pass = found.has_value();

  SplitExtension outer = semidirect_extension(trivial_action(z2(), z2()));
  Action pinned = validate_action(outer.a, z2(), {{0, 1}, {0, 1}, {0, 1}, {0, 0}});
  ComposabilityReport r = is_composable(outer, semidirect_extension(pinned));
  pass = pass && !r.composable && r.witness && *r.witness == std::array<int, 3>{1, 1, 1};
  report(4, "non-closure witness at order 2", pass,
         pass ? "search hit + pinned witness (1,1,1)" : "");
}

// 5. Firmness closure: exhaustive at orders <= 2 plus >= 10000 seeded firm
// samples at order 3, including the E'' closure check.
void criterion_5(int workers) {
  PropertyResult firm = prop_firm_closure(3, 10000, 99, workers);
  PropertyResult epp = prop_epp_closure(3, 10000, 99, workers);
  std::ostringstream d;
  d << firm.instances << " firm pairs, " << epp.instances << " E'' pairs";
  report(5, "firmness and E'' closure with 10000 samples",
         firm.pass && epp.pass && firm.instances >= 10000, d.str());
}

// 6. Pullback stability with base magmas of order <= 3.
void criterion_6() {
  PropertyResult r = prop_pullback_stability(2, 3);
  std::ostringstream d;
  d << r.instances << " pullbacks";
  report(6, "pullback stability, bases up to order 3", r.pass && r.instances > 0, d.str());
}

// 7. Monoid tuples satisfying the Schreier equalities satisfy the
// partial-associativity ones automatically, orders <= 3.
void criterion_7() {
  PropertyResult r = prop_monoid_specialization(3);
  std::ostringstream d;
  d << r.instances << " Schreier tuples";
  report(7, "monoid specialization at orders <= 3", r.pass && r.instances > 0, d.str());
}

// 8. Short five lemma: cases (a), (b) are isomorphisms on all order <= 3
// instances; case (c) collides on OR and is bijective on Z2.
void criterion_8(int workers) {
  PropertyResult ab = prop_short_five(3, workers);
  ShortFiveReport bad = short_five_case_c(or_monoid(), or_monoid(), identity_hom(or_monoid()));
  ShortFiveReport good = short_five_case_c(z2(), z2(), identity_hom(z2()));
  bool pass = ab.pass && !bad.is_isomorphism && bad.collision &&
              (*bad.collision == std::array<int, 2>{1, 3}) && good.is_isomorphism;
  std::ostringstream d;
  d << ab.instances << " instances; OR collision p(0,1)=p(1,1)";
  report(8, "split short five lemma cases (a)-(c)", pass, d.str());
}

// 9. Golden counts 1, 2, 81, 262144 at orders 1-4 and two order-2 classes.
void criterion_9(int workers) {
  PropertyResult r = prop_counting(4, workers);
  std::ostringstream d;
  d << r.instances << " magmas enumerated";
  report(9, "golden counts through order 4", r.pass && r.instances == 1 + 2 + 81 + 262144,
         d.str());
}

// 10. Byte-identical verification reports across runs and worker counts.
void criterion_10() {
  auto run = [](int workers) {
    SearchBudget b;
    b.max_order = 2;
    b.workers = workers;
    return dump_canonical(to_json(run_verification_suite(b)));
  };
  std::string w1 = run(1), w1b = run(1), w4 = run(4);
  report(10, "deterministic verify reports across workers {1,4}", w1 == w1b && w1 == w4);
}

}  // namespace

int main() {
  int workers = 4;
  criterion_1(workers);
  criterion_2(workers);
  criterion_3(workers);
  criterion_4();
  criterion_5(workers);
  criterion_6();
  criterion_7();
  criterion_8(workers);
  criterion_9(workers);
  criterion_10();
  if (failures) std::printf("%d criteria FAILED\n", failures);
  else std::printf("all 10 criteria pass\n");
  return failures ? 1 : 0;
}
