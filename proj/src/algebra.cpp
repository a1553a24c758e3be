#include "skew/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skew {

namespace {

const char* op_name(Op op) { return op == Op::meet ? "meet" : "join"; }

}  // namespace

OutOfRangeEntry::OutOfRangeEntry(Op op_, int row_, int col_, int value_)
    : SkewError(std::string(op_name(op_)) + " table entry (" +
                std::to_string(row_) + "," + std::to_string(col_) +
                ") = " + std::to_string(value_) + " out of range"),
      op(op_),
      row(row_),
      col(col_),
      value(value_) {}

Algebra::Algebra(int n, std::vector<int> meet, std::vector<int> join,
                 std::string name)
    : n_(n), meet_(std::move(meet)), join_(std::move(join)),
      name_(std::move(name)) {
  if (n_ < 1) throw BadShape("carrier size must be at least 1");
  auto check = [&](const std::vector<int>& t, Op op) {
    if (static_cast<int>(t.size()) != n_ * n_)
      throw BadShape(std::string(op_name(op)) + " table is not n x n");
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int v = t[x * n_ + y];
        if (v < 0 || v >= n_) throw OutOfRangeEntry(op, x, y, v);
      }
  };
  check(meet_, Op::meet);
  check(join_, Op::join);
}

int Algebra::apply(Op op, int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    throw IndexOutOfRange("element index out of range");
  return op == Op::meet ? meet(x, y) : join(x, y);
}

Algebra dualize(const Algebra& a, DualKind kind) {
  int n = a.size();
  std::vector<int> m(n * n), j(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      switch (kind) {
        case DualKind::horizontal:
          m[x * n + y] = a.meet(y, x);
          j[x * n + y] = a.join(y, x);
          break;
        case DualKind::vertical:
          m[x * n + y] = a.join(x, y);
          j[x * n + y] = a.meet(x, y);
          break;
        case DualKind::double_dual:
          m[x * n + y] = a.join(y, x);
          j[x * n + y] = a.meet(y, x);
          break;
      }
    }
  return Algebra(n, std::move(m), std::move(j), a.name());
}

HomVerdict is_homomorphism(const std::vector<int>& map, const Algebra& a,
                           const Algebra& b) {
  if (static_cast<int>(map.size()) != a.size())
    throw BadShape("map is not total on the source carrier");
  for (int v : map)
    if (v < 0 || v >= b.size())
      throw IndexOutOfRange("map value out of target range");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (map[a.meet(x, y)] != b.meet(map[x], map[y]))
        return {false, Op::meet, x, y};
      if (map[a.join(x, y)] != b.join(map[x], map[y]))
        return {false, Op::join, x, y};
    }
  return {true, Op::meet, -1, -1};
}

namespace {

// Permutation-invariant local profile used to prune the bijection search.
std::vector<int> element_profile(const Algebra& a, int x) {
  int n = a.size();
  std::vector<int> p;
  p.push_back(a.meet(x, x) == x ? 1 : 0);
  p.push_back(a.join(x, x) == x ? 1 : 0);
  int meet_abs = 0, join_abs = 0, commuting = 0, below = 0, above = 0;
  for (int y = 0; y < n; ++y) {
    if (a.meet(x, y) == x) ++meet_abs;
    if (a.join(x, y) == x) ++join_abs;
    if (a.meet(x, y) == a.meet(y, x) && a.join(x, y) == a.join(y, x))
      ++commuting;
    if (a.meet(x, y) == y && a.meet(y, x) == y) ++below;   // y <= x
    if (a.meet(x, y) == x && a.meet(y, x) == x) ++above;   // x <= y
  }
  p.push_back(meet_abs);
  p.push_back(join_abs);
  p.push_back(commuting);
  p.push_back(below);
  p.push_back(above);
  return p;
}

bool extend_iso(const Algebra& a, const Algebra& b, std::vector<int>& map,
                std::vector<bool>& used, int next,
                const std::vector<std::vector<int>>& pa,
                const std::vector<std::vector<int>>& pb) {
  int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || pa[next] != pb[cand]) continue;
    map[next] = cand;
    used[cand] = true;
    bool ok = true;
    for (int y = 0; y <= next && ok; ++y) {
      int mxy = a.meet(next, y), myx = a.meet(y, next);
      int jxy = a.join(next, y), jyx = a.join(y, next);
      if (mxy <= next && map[mxy] != b.meet(cand, map[y])) ok = false;
      if (ok && myx <= next && map[myx] != b.meet(map[y], cand)) ok = false;
      if (ok && jxy <= next && map[jxy] != b.join(cand, map[y])) ok = false;
      if (ok && jyx <= next && map[jyx] != b.join(map[y], cand)) ok = false;
    }
    if (ok && extend_iso(a, b, map, used, next + 1, pa, pb)) return true;
    used[cand] = false;
  }
  map[next] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Algebra& a,
                                               const Algebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  int n = a.size();
  std::vector<std::vector<int>> pa(n), pb(n);
  for (int x = 0; x < n; ++x) {
    pa[x] = element_profile(a, x);
    pb[x] = element_profile(b, x);
  }
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  if (!extend_iso(a, b, map, used, 0, pa, pb)) return std::nullopt;
  // Partial consistency above only covers pairs of already-mapped elements
  // whose products are mapped; confirm the full preservation once.
  if (!is_homomorphism(map, a, b).ok)
    throw SkewError("internal: isomorphism search produced a non-morphism");
  return map;
}

std::vector<int> subalgebra_closure(const Algebra& a,
                                    const std::vector<int>& seed) {
  int n = a.size();
  std::vector<bool> in(n, false);
  for (int x : seed) {
    if (x < 0 || x >= n) throw IndexOutOfRange("seed element out of range");
    in[x] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < n; ++y) {
        if (!in[y]) continue;
        for (int v : {a.meet(x, y), a.join(x, y)}) {
          if (!in[v]) {
            in[v] = true;
            changed = true;
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

Algebra subalgebra(const Algebra& a, const std::vector<int>& elements) {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  int m = static_cast<int>(elems.size());
  std::vector<int> idx(a.size(), -1);
  for (int i = 0; i < m; ++i) idx[elems[i]] = i;
  std::vector<int> mt(m * m), jt(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int mv = a.meet(elems[i], elems[j]);
      int jv = a.join(elems[i], elems[j]);
      if (idx[mv] < 0 || idx[jv] < 0)
        throw SkewError("subset is not closed under the operations");
      mt[i * m + j] = idx[mv];
      jt[i * m + j] = idx[jv];
    }
  return Algebra(m, std::move(mt), std::move(jt));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<int> mt(n * n), jt(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      mt[x * n + y] = a.meet(xa, ya) * nb + b.meet(xb, yb);
      jt[x * n + y] = a.join(xa, ya) * nb + b.join(xb, yb);
    }
  return Algebra(n, std::move(mt), std::move(jt));
}

}  // namespace skew
