#include "skew/decompose.hpp"

#include <algorithm>
#include <map>

namespace skew {

namespace {

Algebra part_subalgebra(const Algebra& a, const std::vector<int>& elems) {
  if (subalgebra_closure(a, elems) != elems)
    throw SkewError("internal: decomposition part is not a subalgebra");
  return subalgebra(a, elems);
}

}  // namespace

Decomposition first_decomposition(const Algebra& a) {
  require_skew_lattice(a);
  Partition d = green(a, GreenRel::D);
  Quotient q = quotient(a, d);

  std::vector<Algebra> part_algebras;
  OrderStructure ord = natural_order(a);
  for (const auto& blk : d.blocks) {
    Algebra part = part_subalgebra(a, blk);
    if (!holds(part, catalog("RECT")))
      throw SkewError("internal: D-class is not rectangular");
    // antichain under the natural order
    for (int x : blk)
      for (int y : blk)
        if (x != y && ord.le(x, y))
          throw SkewError("internal: D-class is not an antichain");
    // maximality: adjoining any outside element breaks rectangularity
    for (int z = 0; z < a.size(); ++z) {
      if (d.same_block(z, blk[0])) continue;
      bool breaks = false;
      for (int x : blk)
        if (a.meet(a.meet(x, z), x) != x || a.meet(a.meet(z, x), z) != z) {
          breaks = true;
          break;
        }
      if (!breaks)
        throw SkewError("internal: D-class is not maximal rectangular");
    }
    part_algebras.push_back(std::move(part));
  }
  if (!holds_all(q.algebra, parse_identity_list("S1-S8")))
    throw SkewError("internal: a/D is not a lattice");
  return {Decomposition::Kind::first, d.blocks, std::move(part_algebras),
          q.algebra, classify(q.algebra)};
}

Decomposition component_decomposition(const Algebra& a) {
  require_skew_lattice(a);
  Partition comp = components(a);
  CongruenceVerdict cv = is_congruence(a, comp);
  if (!cv.ok)
    throw SkewError("internal: component partition is not a congruence");
  Quotient q = quotient(a, comp);

  std::vector<Algebra> part_algebras;
  for (const auto& blk : comp.blocks)
    part_algebras.push_back(part_subalgebra(a, blk));
  if (!holds(q.algebra, catalog("RECT")) || !is_skew_lattice(q.algebra))
    throw SkewError("internal: component quotient is not rectangular");
  // every D-class meets every component
  Partition d = green(a, GreenRel::D);
  for (const auto& dblk : d.blocks)
    for (const auto& cblk : comp.blocks) {
      bool meets = false;
      for (int x : dblk)
        if (std::binary_search(cblk.begin(), cblk.end(), x)) {
          meets = true;
          break;
        }
      if (!meets)
        throw SkewError("internal: a D-class misses a component");
    }
  return {Decomposition::Kind::component, comp.blocks,
          std::move(part_algebras), q.algebra, classify(q.algebra)};
}

FiberedProduct fibered_product(const Algebra& b, const Algebra& c,
                               const Morphism& p, const Morphism& q) {
  if (!(p.source == b) || !(q.source == c))
    throw TargetMismatch("morphism sources do not match the factors");
  if (!(p.target == q.target))
    throw TargetMismatch("morphisms do not share a target");
  if (!is_homomorphism(p.map, p.source, p.target).ok ||
      !is_homomorphism(q.map, q.source, q.target).ok)
    throw NotAHomomorphism("projection is not a homomorphism");

  std::vector<std::pair<int, int>> elems;
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (p.map[x] == q.map[y]) elems.emplace_back(x, y);
  int m = (int)elems.size();
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i < m; ++i) idx[elems[i]] = i;
  std::vector<int> mt(m * m), jt(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [xi, yi] = elems[i];
      auto [xj, yj] = elems[j];
      mt[i * m + j] = idx.at({b.meet(xi, xj), c.meet(yi, yj)});
      jt[i * m + j] = idx.at({b.join(xi, xj), c.join(yi, yj)});
    }
  return {Algebra(m, std::move(mt), std::move(jt)), std::move(elems)};
}

Decomposition second_decomposition(const Algebra& a) {
  require_skew_lattice(a);
  Partition l = green(a, GreenRel::L);
  Partition r = green(a, GreenRel::R);
  Partition d = green(a, GreenRel::D);
  Quotient ql = quotient(a, l);  // maximal right-handed image
  Quotient qr = quotient(a, r);  // maximal left-handed image
  Quotient qd = quotient(a, d);

  if (!holds_all(ql.algebra, {catalog("S15"), catalog("S16")}))
    throw SkewError("internal: a/L is not right-handed");
  if (!holds_all(qr.algebra, {catalog("S17"), catalog("S18")}))
    throw SkewError("internal: a/R is not left-handed");

  // induced projections a/L -> a/D and a/R -> a/D
  auto induced = [&](const Quotient& q) {
    std::vector<int> map(q.algebra.size());
    for (int blk = 0; blk < q.algebra.size(); ++blk) {
      // representative of the block in a
      int rep = -1;
      for (int x = 0; x < a.size(); ++x)
        if (q.projection.map[x] == blk) {
          rep = x;
          break;
        }
      map[blk] = qd.projection.map[rep];
    }
    return Morphism{q.algebra, qd.algebra, std::move(map)};
  };
  Morphism p = induced(ql), qm = induced(qr);
  FiberedProduct fp = fibered_product(ql.algebra, qr.algebra, p, qm);

  // canonical pair map x -> (class_L(x), class_R(x))
  std::map<std::pair<int, int>, int> idx;
  for (size_t i = 0; i < fp.elements.size(); ++i) idx[fp.elements[i]] = (int)i;
  std::vector<int> witness(a.size());
  for (int x = 0; x < a.size(); ++x) {
    auto it = idx.find({ql.projection.map[x], qr.projection.map[x]});
    if (it == idx.end())
      throw SkewError("internal: pair map leaves the fibered product");
    witness[x] = it->second;
  }
  // injectivity (H is trivial) and surjectivity by counting
  std::vector<int> seen(fp.algebra.size(), 0);
  for (int w : witness) ++seen[w];
  for (int s : seen)
    if (s != 1)
      throw SkewError("internal: pair map is not a bijection");
  if (!is_homomorphism(witness, a, fp.algebra).ok)
    throw SkewError("internal: pair map is not a homomorphism");

  std::vector<Algebra> part_algebras;
  for (const auto& blk : d.blocks)
    part_algebras.push_back(subalgebra(a, blk));
  return {Decomposition::Kind::second, d.blocks, std::move(part_algebras),
          qd.algebra, classify(qd.algebra), ql.algebra, qr.algebra,
          fp.algebra, std::move(witness)};
}

}  // namespace skew
