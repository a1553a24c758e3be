#ifndef SKEW_CONGRUENCE_HPP
#define SKEW_CONGRUENCE_HPP

#include <utility>
#include <vector>

#include "skew/algebra.hpp"
#include "skew/green.hpp"

namespace skew {

struct NotACongruence : SkewError {
  using SkewError::SkewError;
};

struct NotAHomomorphism : SkewError {
  using SkewError::SkewError;
};

// First violating quadruple in (x, xp, y, op) order when incompatible:
// x ~ xp but (x op y) !~ (xp op y) or (y op x) !~ (y op xp).
struct CongruenceVerdict {
  bool ok;
  int x, xp, y;
  Op op;
};

CongruenceVerdict is_congruence(const Algebra& a, const Partition& p);

// Least congruence containing the given pairs: union-find seeded with the
// pairs, closed under x ~ xp => (x*y ~ xp*y) and (y*x ~ y*xp) for both
// operations, iterated to a fixpoint.
Partition least_congruence(const Algebra& a,
                           const std::vector<std::pair<int, int>>& pairs);

// Least congruence collapsing every (x^y, y^x); must coincide with D.
Partition commutativity_congruence(const Algebra& a);

struct Quotient {
  Algebra algebra;     // carrier = blocks ordered by least element
  Morphism projection; // element -> its block
};

Quotient quotient(const Algebra& a, const Partition& c);

struct Factorization {
  Morphism epi;   // source -> source/kernel
  Morphism mono;  // source/kernel -> target (injective)
};

// f = mono o epi through the kernel congruence x ~ y iff f(x) = f(y).
Factorization factor_homomorphism(const Morphism& f);

// Every partition of the carrier that is a congruence (test oracle scale:
// Bell(n) partitions, usable to n ~ 8).
std::vector<Partition> all_congruences(const Algebra& a);

}  // namespace skew

#endif
