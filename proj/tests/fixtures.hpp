#ifndef MAGMAKIT_TEST_FIXTURES_HPP
#define MAGMAKIT_TEST_FIXTURES_HPP

#include "magmakit/verify.hpp"

namespace fixtures {

using namespace magmakit;

inline Magma trivial() { return validate_magma(1, {{0}}, "1"); }

inline Magma z2() { return validate_magma(2, {{0, 1}, {1, 0}}, "Z2"); }

// idempotent commutative monoid ({0,1}, max)
inline Magma or_monoid() { return validate_magma(2, {{0, 1}, {1, 1}}, "OR"); }

// non-associative: (1+1)+1 = 2+1 = 1 but 1+(1+1) = 1+2 = 0
inline Magma m3() { return validate_magma(3, {{0, 1, 2}, {1, 2, 0}, {2, 1, 2}}, "M3"); }

// B = X = Z2 with the single free cell 1*1 = v
inline Action z2_action(int v) {
  return validate_action(z2(), z2(), {{0, 1}, {0, v}});
}

}  // namespace fixtures

#endif
