#ifndef SKEW_IDENTITIES_HPP
#define SKEW_IDENTITIES_HPP

#include <string>
#include <vector>

#include "skew/algebra.hpp"
#include "skew/term.hpp"

namespace skew {

struct UnboundVariable : SkewError {
  using SkewError::SkewError;
};

struct IdentityVerdict {
  bool holds;
  std::vector<int> assignment;  // lexicographically first counterexample
};

int eval_term(const Algebra& a, const Term& t, const std::vector<int>& asg);

// Exhaustive over all n^k assignments, variable 0 most significant.
// check_identity splits the assignment space across OpenMP workers and
// merges to the least counterexample; the serial version is the reference
// path kept for testing and benchmarking.
IdentityVerdict check_identity(const Algebra& a, const Identity& id);
IdentityVerdict check_identity_serial(const Algebra& a, const Identity& id);

bool holds(const Algebra& a, const Identity& id);
bool holds_all(const Algebra& a, const std::vector<Identity>& ids);

bool is_skew_lattice(const Algebra& a);
void require_skew_lattice(const Algebra& a);

struct PropertyProfile {
  // identity-defined flags
  bool skew_lattice = false;
  bool lattice = false;
  bool right_handed = false;
  bool left_handed = false;
  bool lower_symmetric = false;
  bool upper_symmetric = false;
  bool symmetric = false;
  bool middle_distributive = false;
  bool bidistributive = false;
  bool normal = false;
  bool conormal = false;
  bool regular = false;
  bool rectangular = false;
  bool skew_star = false;
  // structural flags (filled from the order/coset machinery)
  bool categorical = false;
  bool strictly_categorical = false;
  bool connected = false;
  bool primitive = false;
  bool skew_chain = false;
  bool diamond = false;
};

// Fills identity flags by exhaustive checking; structural flags are filled
// only when the algebra is a skew lattice. The two handedness routes
// (S15/S16 and S17/S18 versus Green's relation equalities) are
// cross-checked and a mismatch throws.
PropertyProfile classify(const Algebra& a);

// {x : x commutes with every y under both operations}; verified to be a
// subalgebra and to equal the union of singleton D-classes.
std::vector<int> center(const Algebra& a);

}  // namespace skew

#endif
