#ifndef SKEW_GREEN_HPP
#define SKEW_GREEN_HPP

#include <utility>
#include <vector>

#include "skew/algebra.hpp"

namespace skew {

struct GreenMismatch : SkewError {
  using SkewError::SkewError;
};

// Equivalence partition; block ids are dense and assigned by least element.
struct Partition {
  int n = 0;
  std::vector<int> block_of;
  std::vector<std::vector<int>> blocks;

  static Partition from_block_ids(int n, const std::vector<int>& raw_ids);
  static Partition singletons(int n);
  bool same_block(int x, int y) const { return block_of[x] == block_of[y]; }
  bool operator==(const Partition& o) const { return blocks == o.blocks; }
};

enum class GreenRel { R, L, D, H };

// R: x^y=y and y^x=x;  L: x^y=x and y^x=y;  D: x^y^x=x and y^x^y=y;
// H = R n L. The meet-side and join-side characterizations are both
// computed and must agree (GreenMismatch otherwise).
Partition green(const Algebra& a, GreenRel which);

struct OrderStructure {
  int n = 0;
  std::vector<char> leq;     // leq[x*n+y]: x <= y
  std::vector<char> preceq;  // preceq[x*n+y]: x precedes y in the preorder
  std::vector<std::pair<int, int>> graph_edges;  // {x,y}, x < y as indices

  bool le(int x, int y) const { return leq[x * n + y] != 0; }
  bool pre(int x, int y) const { return preceq[x * n + y] != 0; }
};

// Natural partial order (x >= y iff x^y = y = y^x) and natural preorder
// (x preceq y iff x^y^x = x), with the dual characterizations and the
// Lemma-style identity route (y = x^y^x) cross-checked.
OrderStructure natural_order(const Algebra& a);

// Connected components of the natural graph.
Partition components(const Algebra& a);

}  // namespace skew

#endif
