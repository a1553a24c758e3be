#include "skew/fixtures.hpp"

namespace skew::fixtures {

Algebra l2() {
  return Algebra(2, {0, 0, 0, 1}, {0, 1, 1, 1}, "L2");
}

Algebra rr2() {
  return Algebra(2, {0, 1, 0, 1}, {0, 0, 1, 1}, "RR2");
}

Algebra lr2() {
  return Algebra(2, {0, 0, 1, 1}, {0, 1, 0, 1}, "LR2");
}

Algebra m2() {
  // elements 0, a=1, b=2, 1=3
  return Algebra(4,
                 {0, 0, 0, 0,   // 0 ^ _
                  0, 1, 0, 1,   // a ^ _
                  0, 0, 2, 2,   // b ^ _
                  0, 1, 2, 3},  // 1 ^ _
                 {0, 1, 2, 3,   // 0 v _
                  1, 1, 3, 3,   // a v _
                  2, 3, 2, 3,   // b v _
                  3, 3, 3, 3},  // 1 v _
                 "M2");
}

Algebra f4r() {
  // elements 0, a=1, b=2, 1=3; class {a, b} right rectangular
  return Algebra(4,
                 {0, 0, 0, 0,   // 0 ^ _
                  0, 1, 2, 1,   // a ^ _: a^b = b
                  0, 1, 2, 2,   // b ^ _: b^a = a
                  0, 1, 2, 3},  // 1 ^ _
                 {0, 1, 2, 3,   // 0 v _
                  1, 1, 1, 3,   // a v _: a v b = a
                  2, 2, 2, 3,   // b v _: b v a = b
                  3, 3, 3, 3},  // 1 v _
                 "F4R");
}

}  // namespace skew::fixtures
