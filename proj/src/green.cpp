#include "skew/green.hpp"

#include <algorithm>
#include <numeric>

#include "skew/identities.hpp"

namespace skew {

Partition Partition::from_block_ids(int n, const std::vector<int>& raw_ids) {
  Partition p;
  p.n = n;
  p.block_of.assign(n, -1);
  int next = 0;
  std::vector<int> relabel(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = raw_ids[x];
    if (relabel[r] < 0) relabel[r] = next++;
    p.block_of[x] = relabel[r];
  }
  p.blocks.assign(next, {});
  for (int x = 0; x < n; ++x) p.blocks[p.block_of[x]].push_back(x);
  return p;
}

Partition Partition::singletons(int n) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return from_block_ids(n, ids);
}

namespace {

Partition partition_from_relation(int n, const std::vector<char>& rel) {
  // rel is an equivalence; pick least representative per element.
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) {
    int least = x;
    for (int y = 0; y < x; ++y)
      if (rel[x * n + y]) {
        least = y;
        break;
      }
    ids[x] = least;
  }
  return Partition::from_block_ids(n, ids);
}

}  // namespace

Partition green(const Algebra& a, GreenRel which) {
  require_skew_lattice(a);
  int n = a.size();
  auto rel_of = [&](auto pred) {
    std::vector<char> rel(n * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) rel[x * n + y] = pred(x, y) ? 1 : 0;
    return rel;
  };
  // meet-side and join-side routes
  auto r_meet = rel_of([&](int x, int y) {
    return a.meet(x, y) == y && a.meet(y, x) == x;
  });
  auto r_join = rel_of([&](int x, int y) {  // L of the join band
    return a.join(x, y) == x && a.join(y, x) == y;
  });
  auto l_meet = rel_of([&](int x, int y) {
    return a.meet(x, y) == x && a.meet(y, x) == y;
  });
  auto l_join = rel_of([&](int x, int y) {  // R of the join band
    return a.join(x, y) == y && a.join(y, x) == x;
  });
  auto d_meet = rel_of([&](int x, int y) {
    return a.meet(a.meet(x, y), x) == x && a.meet(a.meet(y, x), y) == y;
  });
  auto d_join = rel_of([&](int x, int y) {
    return a.join(a.join(x, y), x) == x && a.join(a.join(y, x), y) == y;
  });
  if (r_meet != r_join || l_meet != l_join || d_meet != d_join)
    throw GreenMismatch("meet-side and join-side Green's relations differ");

  switch (which) {
    case GreenRel::R:
      return partition_from_relation(n, r_meet);
    case GreenRel::L:
      return partition_from_relation(n, l_meet);
    case GreenRel::D:
      return partition_from_relation(n, d_meet);
    case GreenRel::H: {
      std::vector<char> h(n * n);
      for (int i = 0; i < n * n; ++i) h[i] = r_meet[i] && l_meet[i];
      return partition_from_relation(n, h);
    }
  }
  throw SkewError("unreachable");
}

OrderStructure natural_order(const Algebra& a) {
  require_skew_lattice(a);
  int n = a.size();
  OrderStructure o;
  o.n = n;
  o.leq.assign(n * n, 0);
  o.preceq.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // x <= y iff y ^ x = x = x ^ y, dually y v x = y = x v y.
      bool le = a.meet(y, x) == x && a.meet(x, y) == x;
      bool le_dual = a.join(y, x) == y && a.join(x, y) == y;
      // Lemma route: y >= x iff x = y ^ x ^ y.
      bool le_lemma = a.meet(a.meet(y, x), y) == x;
      if (le != le_dual || le != le_lemma)
        throw SkewError("internal: natural order routes disagree");
      o.leq[x * n + y] = le ? 1 : 0;
      // x preceq y iff x ^ y ^ x = x, dually y v x v y = y.
      bool pre = a.meet(a.meet(x, y), x) == x;
      bool pre_dual = a.join(a.join(y, x), y) == y;
      if (pre != pre_dual)
        throw SkewError("internal: natural preorder routes disagree");
      o.preceq[x * n + y] = pre ? 1 : 0;
      if (le && !pre) throw SkewError("internal: leq not within preceq");
    }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if ((o.le(x, y) || o.le(y, x)) && x != y)
        o.graph_edges.emplace_back(x, y);
  return o;
}

Partition components(const Algebra& a) {
  OrderStructure o = natural_order(a);
  int n = a.size();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [x, y] : o.graph_edges) {
    int rx = find(x), ry = find(y);
    if (rx != ry) root[std::max(rx, ry)] = std::min(rx, ry);
  }
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = find(x);
  return Partition::from_block_ids(n, ids);
}

}  // namespace skew
