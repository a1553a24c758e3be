#ifndef SKEW_DECOMPOSE_HPP
#define SKEW_DECOMPOSE_HPP

#include <optional>
#include <vector>

#include "skew/algebra.hpp"
#include "skew/congruence.hpp"
#include "skew/identities.hpp"

namespace skew {

struct TargetMismatch : SkewError {
  using SkewError::SkewError;
};

struct Decomposition {
  enum class Kind { first, component, second };
  Kind kind;
  std::vector<std::vector<int>> parts;  // element sets, ordered by least
  std::vector<Algebra> part_algebras;
  Algebra quotient;
  PropertyProfile quotient_profile;
  // second decomposition only:
  std::optional<Algebra> right_factor;  // a/L
  std::optional<Algebra> left_factor;   // a/R
  std::optional<Algebra> fibered;       // right x_{a/D} left
  std::optional<std::vector<int>> witness;  // iso a -> fibered, the pair map
};

// D-classes as maximal rectangular subalgebras, quotient the maximal
// lattice image.
Decomposition first_decomposition(const Algebra& a);

// Connected components as maximal connected subalgebras, quotient the
// maximal rectangular image.
Decomposition component_decomposition(const Algebra& a);

struct FiberedProduct {
  Algebra algebra;
  std::vector<std::pair<int, int>> elements;  // lexicographic (x, y) pairs
};

// {(x, y) : p(x) = q(y)} with componentwise operations.
FiberedProduct fibered_product(const Algebra& b, const Algebra& c,
                               const Morphism& p, const Morphism& q);

// a  ~  a/L x_{a/D} a/R via the canonical pair map.
Decomposition second_decomposition(const Algebra& a);

}  // namespace skew

#endif
