#ifndef SKEW_FIXTURES_HPP
#define SKEW_FIXTURES_HPP

#include "skew/algebra.hpp"

namespace skew::fixtures {

// 2-chain lattice 0 < 1.
Algebra l2();
// Right rectangular pair on 2 elements: x ^ y = y, x v y = x.
Algebra rr2();
// Left rectangular pair: x ^ y = x, x v y = y.
Algebra lr2();
// Diamond lattice 0 < a, b < 1 with a ^ b = 0, a v b = 1 (a=1, b=2, top=3).
Algebra m2();
// Right-handed skew lattice on {0, a, b, 1} with D-class {a, b}:
// a ^ b = b, b ^ a = a, a v b = a, b v a = b (a=1, b=2, top=3).
Algebra f4r();

}  // namespace skew::fixtures

#endif
