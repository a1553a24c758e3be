#include "skew/congruence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "skew/identities.hpp"

namespace skew {

CongruenceVerdict is_congruence(const Algebra& a, const Partition& p) {
  int n = a.size();
  if (p.n != n) throw BadShape("partition carrier size mismatch");
  for (int x = 0; x < n; ++x)
    for (int xp = 0; xp < n; ++xp) {
      if (!p.same_block(x, xp)) continue;
      for (int y = 0; y < n; ++y) {
        for (Op op : {Op::meet, Op::join}) {
          if (!p.same_block(a.apply(op, x, y), a.apply(op, xp, y)) ||
              !p.same_block(a.apply(op, y, x), a.apply(op, y, xp)))
            return {false, x, xp, y, op};
        }
      }
    }
  return {true, -1, -1, -1, Op::meet};
}

namespace {

struct UnionFind {
  std::vector<int> root;
  explicit UnionFind(int n) : root(n) {
    std::iota(root.begin(), root.end(), 0);
  }
  int find(int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  }
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    root[std::max(rx, ry)] = std::min(rx, ry);
    return true;
  }
};

}  // namespace

Partition least_congruence(const Algebra& a,
                           const std::vector<std::pair<int, int>>& pairs) {
  int n = a.size();
  UnionFind uf(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw IndexOutOfRange("pair element out of range");
    uf.unite(x, y);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int xp = x + 1; xp < n; ++xp) {
        if (uf.find(x) != uf.find(xp)) continue;
        for (int y = 0; y < n; ++y)
          for (Op op : {Op::meet, Op::join}) {
            changed |= uf.unite(a.apply(op, x, y), a.apply(op, xp, y));
            changed |= uf.unite(a.apply(op, y, x), a.apply(op, y, xp));
          }
      }
  }
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = uf.find(x);
  return Partition::from_block_ids(n, ids);
}

Partition commutativity_congruence(const Algebra& a) {
  require_skew_lattice(a);
  int n = a.size();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      pairs.emplace_back(a.meet(x, y), a.meet(y, x));
  Partition c = least_congruence(a, pairs);
  if (!(c == green(a, GreenRel::D)))
    throw SkewError("internal: commutativity congruence differs from D");
  return c;
}

Quotient quotient(const Algebra& a, const Partition& c) {
  CongruenceVerdict v = is_congruence(a, c);
  if (!v.ok) throw NotACongruence("partition is not a congruence");
  int m = static_cast<int>(c.blocks.size());
  std::vector<int> mt(m * m), jt(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int ri = c.blocks[i][0], rj = c.blocks[j][0];
      mt[i * m + j] = c.block_of[a.meet(ri, rj)];
      jt[i * m + j] = c.block_of[a.join(ri, rj)];
    }
  Algebra q(m, std::move(mt), std::move(jt),
            a.name().empty() ? "" : a.name() + "/~");
  Morphism proj{a, q, c.block_of};
  return {std::move(q), std::move(proj)};
}

Factorization factor_homomorphism(const Morphism& f) {
  if (!is_homomorphism(f.map, f.source, f.target).ok)
    throw NotAHomomorphism("map does not preserve the operations");
  int n = f.source.size();
  // kernel congruence by image value
  std::vector<int> ids(n);
  std::vector<int> least_for(f.target.size(), -1);
  for (int x = 0; x < n; ++x) {
    int v = f.map[x];
    if (least_for[v] < 0) least_for[v] = x;
    ids[x] = least_for[v];
  }
  Partition kernel = Partition::from_block_ids(n, ids);
  Quotient q = quotient(f.source, kernel);
  std::vector<int> mono_map(q.algebra.size());
  for (int b = 0; b < q.algebra.size(); ++b)
    mono_map[b] = f.map[kernel.blocks[b][0]];
  Morphism mono{q.algebra, f.target, mono_map};
  if (!is_homomorphism(mono.map, mono.source, mono.target).ok)
    throw SkewError("internal: factorization mono is not a morphism");
  for (int x = 0; x < n; ++x)
    if (mono.map[q.projection.map[x]] != f.map[x])
      throw SkewError("internal: factorization does not compose to f");
  // image must be a subalgebra
  std::vector<int> image = mono_map;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (subalgebra_closure(f.target, image) != image)
    throw SkewError("internal: image not closed under the operations");
  return {std::move(q.projection), std::move(mono)};
}

namespace {

// Partitions enumerated via restricted growth strings.
void visit_partitions(int n, std::vector<int>& rgs, int pos, int max_used,
                      const std::function<void(const std::vector<int>&)>& f) {
  if (pos == n) {
    f(rgs);
    return;
  }
  for (int b = 0; b <= max_used + 1; ++b) {
    rgs[pos] = b;
    visit_partitions(n, rgs, pos + 1, std::max(max_used, b), f);
  }
}

}  // namespace

std::vector<Partition> all_congruences(const Algebra& a) {
  int n = a.size();
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  visit_partitions(n, rgs, 1, 0, [&](const std::vector<int>& ids) {
    Partition p = Partition::from_block_ids(n, ids);
    if (is_congruence(a, p).ok) out.push_back(std::move(p));
  });
  return out;
}

}  // namespace skew
