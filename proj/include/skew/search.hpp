#ifndef SKEW_SEARCH_HPP
#define SKEW_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "skew/algebra.hpp"
#include "skew/term.hpp"

namespace skew {

struct BudgetExceeded : SkewError {
  using SkewError::SkewError;
};

struct SizeLimit : SkewError {
  using SkewError::SkewError;
};

struct ModelQuery {
  int n = 1;
  std::vector<Identity> satisfy;  // S1-S6 are always enforced in addition
  std::vector<Identity> falsify;  // each must admit a counterexample
  // Optional chain skeleton of D-class sizes, top class first; sizes must
  // sum to n. When absent at larger sizes, find_model iterates chain
  // skeletons deterministically.
  std::optional<std::vector<int>> skeleton;
  bool require_noncategorical = false;
  double budget_seconds = -1;  // < 0: unlimited
};

enum class SearchStatus { found, exhausted, budget_exceeded };

struct SearchResult {
  SearchStatus status;
  std::optional<Algebra> model;
};

struct Catalog {
  std::string provenance;        // the query that produced the entries
  std::vector<Algebra> entries;  // canonical, pairwise non-isomorphic,
                                 // sorted by (n, table bytes)
};

// All models of S1-S6 plus the given constraints, up to isomorphism.
// Backtracking over table cells in row-major meet-then-join order with the
// diagonal forced idempotent and ground-instance propagation; every emitted
// model is re-verified by the identity checker.
Catalog enumerate_models(int n, const std::vector<Identity>& constraints,
                         double budget_seconds = -1);

// First model meeting the query in deterministic search order.
SearchResult find_model(const ModelQuery& q);

// Lexicographically least (meet bytes, join bytes) relabeling; n <= 9.
Algebra canonical_form(const Algebra& a);

}  // namespace skew

#endif
