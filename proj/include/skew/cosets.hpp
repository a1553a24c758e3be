#ifndef SKEW_COSETS_HPP
#define SKEW_COSETS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "skew/algebra.hpp"
#include "skew/green.hpp"

namespace skew {

struct NotComparable : SkewError {
  using SkewError::SkewError;
};

struct LevelMismatch : SkewError {
  using SkewError::SkewError;
};

// Comparable D-classes with upper strictly above lower in the quotient
// order; both stored as sorted element lists.
struct ClassPair {
  std::vector<int> upper;
  std::vector<int> lower;
};

// One coset bijection: maps the lower-coset-of-upper-class block
// upper_cosets[upper_coset] onto lower_cosets[lower_coset], x -> the unique
// y below x. Stored as sorted (x, y) pairs.
struct CosetBijection {
  int upper_coset = -1;
  int lower_coset = -1;
  std::vector<std::pair<int, int>> pairs;
};

struct CosetSystem {
  ClassPair pair;
  std::vector<std::vector<int>> upper_cosets;  // partition of upper: B v a v B
  std::vector<std::vector<int>> lower_cosets;  // partition of lower: A ^ b ^ A
  std::vector<std::vector<int>> image_down;  // per x in upper: {y in lower : y <= x}
  std::vector<std::vector<int>> image_up;    // per y in lower: {x in upper : y <= x}
  std::vector<CosetBijection> bijections;    // one per (upper, lower) coset pair

  const CosetBijection& bijection(int upper_coset, int lower_coset) const;
};

// All class pairs (A, B) with A > B in the quotient order, enumerated by
// (least element of A, least element of B).
std::vector<ClassPair> comparable_class_pairs(const Algebra& a);

CosetSystem coset_system(const Algebra& a, const ClassPair& pair);

// Relational composition of partial bijections; may be empty.
std::vector<std::pair<int, int>> compose_bijections(
    const std::vector<std::pair<int, int>>& f,
    const std::vector<std::pair<int, int>>& g);

enum class Categoricity { strictly_categorical, categorical, neither };

struct CategoricityWitness {
  // The composite psi o phi that is nonempty yet not a full coset bijection,
  // identified by the three classes and the cosets involved.
  std::vector<int> upper_class, middle_class, lower_class;
  CosetBijection phi, psi;
  std::vector<std::pair<int, int>> composite;
};

struct CategoricityReport {
  Categoricity verdict;
  std::optional<CategoricityWitness> witness;
};

CategoricityReport is_categorical(const Algebra& a);

// Structural normality: for all comparable A > B every x in A lies above
// exactly one y in B. Cross-checked against S25; mismatch throws.
bool normality_cover_check(const Algebra& a);

// Union of all coset bijections of the pair; must equal >= on A x B.
std::vector<std::pair<int, int>> order_from_cosets(const Algebra& a,
                                                   const ClassPair& pair);

struct ReconstructionReport {
  Algebra rebuilt;  // on A u B, elements renumbered in increasing order
  bool agrees;
};

// Rebuilds both operations on A u B from the rectangular structure of each
// class and the coset bijections alone, then compares with the original
// tables.
ReconstructionReport reconstruct_operations(const Algebra& a,
                                            const ClassPair& pair);

enum class Shape { primitive, skew_chain, diamond, other };

Shape shape(const Algebra& a);

}  // namespace skew

#endif
