#include "skew/cosets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skew/congruence.hpp"
#include "skew/identities.hpp"

namespace skew {

namespace {

int meet3(const Algebra& a, int x, int y, int z) {
  return a.meet(a.meet(x, y), z);
}

int join3(const Algebra& a, int x, int y, int z) {
  return a.join(a.join(x, y), z);
}

struct QuotientOrder {
  Partition d;
  Algebra quotient;
  OrderStructure order;  // on the quotient carrier
};

QuotientOrder quotient_order(const Algebra& a) {
  Partition d = green(a, GreenRel::D);
  Quotient q = quotient(a, d);
  OrderStructure o = natural_order(q.algebra);
  return {std::move(d), std::move(q.algebra), std::move(o)};
}

}  // namespace

const CosetBijection& CosetSystem::bijection(int upper_coset,
                                             int lower_coset) const {
  for (const auto& b : bijections)
    if (b.upper_coset == upper_coset && b.lower_coset == lower_coset)
      return b;
  throw SkewError("no bijection for the given coset pair");
}

std::vector<ClassPair> comparable_class_pairs(const Algebra& a) {
  QuotientOrder qo = quotient_order(a);
  int m = qo.quotient.size();
  std::vector<ClassPair> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (qo.order.le(j, i))  // class j < class i
        out.push_back({qo.d.blocks[i], qo.d.blocks[j]});
    }
  std::sort(out.begin(), out.end(), [](const ClassPair& x, const ClassPair& y) {
    return std::pair(x.upper[0], x.lower[0]) <
           std::pair(y.upper[0], y.lower[0]);
  });
  return out;
}

CosetSystem coset_system(const Algebra& a, const ClassPair& pair) {
  QuotientOrder qo = quotient_order(a);
  auto block_id = [&](const std::vector<int>& cls) {
    if (cls.empty()) throw NotComparable("empty class");
    int b = qo.d.block_of[cls[0]];
    if (qo.d.blocks[b] != cls)
      throw NotComparable("given set is not a D-class");
    return b;
  };
  int up = block_id(pair.upper), lo = block_id(pair.lower);
  if (up == lo || !qo.order.le(lo, up))
    throw NotComparable("classes are not strictly comparable");

  const auto& A = pair.upper;
  const auto& B = pair.lower;
  OrderStructure ord = natural_order(a);

  CosetSystem sys;
  sys.pair = pair;

  // Lower cosets A ^ b ^ A, checked against Prop strg_prop: the full coset,
  // the all-x route and the single-x route must induce the same grouping.
  std::map<std::vector<int>, std::vector<int>> lower_groups;
  for (int b : B) {
    std::set<int> coset;
    for (int x : A) coset.insert(meet3(a, x, b, x));
    lower_groups[std::vector<int>(coset.begin(), coset.end())].push_back(b);
  }
  for (const auto& [coset, members] : lower_groups) {
    sys.lower_cosets.push_back(coset);
    (void)members;
  }
  // strg_prop: full-coset equality, the all-x route and the single-x route
  // must agree for every pair of lower elements.
  for (int b : B)
    for (int bp : B) {
      std::set<int> cb, cbp;
      for (int x : A) {
        cb.insert(meet3(a, x, b, x));
        cbp.insert(meet3(a, x, bp, x));
      }
      bool full_eq = cb == cbp;
      bool all_eq = true, one_eq = false;
      for (int x : A) {
        bool eq = meet3(a, x, b, x) == meet3(a, x, bp, x);
        all_eq = all_eq && eq;
        one_eq = one_eq || eq;
      }
      if (full_eq != all_eq || all_eq != one_eq)
        throw SkewError("internal: strg_prop equivalence fails");
    }
  std::sort(sys.lower_cosets.begin(), sys.lower_cosets.end());
  // partition check
  {
    std::vector<int> all;
    for (const auto& c : sys.lower_cosets) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    if (all != B) throw SkewError("internal: lower cosets do not partition B");
  }

  // Upper cosets B v a v B.
  std::set<std::vector<int>> upper_set;
  for (int x : A) {
    std::set<int> coset;
    for (int b : B) coset.insert(join3(a, b, x, b));
    upper_set.insert(std::vector<int>(coset.begin(), coset.end()));
  }
  sys.upper_cosets.assign(upper_set.begin(), upper_set.end());
  {
    std::vector<int> all;
    for (const auto& c : sys.upper_cosets) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    if (all != A) throw SkewError("internal: upper cosets do not partition A");
  }

  // Images, with the order route cross-checked against the product route.
  std::map<int, int> lower_coset_of, upper_coset_of;
  for (size_t j = 0; j < sys.lower_cosets.size(); ++j)
    for (int y : sys.lower_cosets[j]) lower_coset_of[y] = (int)j;
  for (size_t i = 0; i < sys.upper_cosets.size(); ++i)
    for (int x : sys.upper_cosets[i]) upper_coset_of[x] = (int)i;

  sys.image_down.resize(A.size());
  for (size_t xi = 0; xi < A.size(); ++xi) {
    int x = A[xi];
    std::set<int> img;
    for (int b : B) img.insert(meet3(a, x, b, x));
    std::vector<int> by_order;
    for (int y : B)
      if (ord.le(y, x)) by_order.push_back(y);
    std::vector<int> by_product(img.begin(), img.end());
    if (by_order != by_product)
      throw SkewError("internal: image routes disagree");
    sys.image_down[xi] = by_order;
    // transversal of the lower cosets
    std::vector<int> hits(sys.lower_cosets.size(), 0);
    for (int y : by_order) ++hits[lower_coset_of[y]];
    for (int h : hits)
      if (h != 1) throw SkewError("internal: image is not a transversal");
  }
  sys.image_up.resize(B.size());
  for (size_t yi = 0; yi < B.size(); ++yi) {
    int y = B[yi];
    std::set<int> img;
    for (int x : A) img.insert(join3(a, y, x, y));
    std::vector<int> by_order;
    for (int x : A)
      if (ord.le(y, x)) by_order.push_back(x);
    if (by_order != std::vector<int>(img.begin(), img.end()))
      throw SkewError("internal: upward image routes disagree");
    sys.image_up[yi] = by_order;
    std::vector<int> hits(sys.upper_cosets.size(), 0);
    for (int x : by_order) ++hits[upper_coset_of[x]];
    for (int h : hits)
      if (h != 1)
        throw SkewError("internal: upward image is not a transversal");
  }

  // Bijections: x in upper coset corresponds to the unique y below it in
  // each lower coset.
  for (size_t i = 0; i < sys.upper_cosets.size(); ++i)
    for (size_t j = 0; j < sys.lower_cosets.size(); ++j) {
      CosetBijection bij;
      bij.upper_coset = (int)i;
      bij.lower_coset = (int)j;
      for (int x : sys.upper_cosets[i])
        for (int y : sys.lower_cosets[j])
          if (ord.le(y, x)) bij.pairs.emplace_back(x, y);
      // total and bijective
      std::set<int> dom, cod;
      for (auto [x, y] : bij.pairs) {
        dom.insert(x);
        cod.insert(y);
      }
      if (bij.pairs.size() != sys.upper_cosets[i].size() ||
          dom.size() != sys.upper_cosets[i].size() ||
          cod.size() != sys.lower_cosets[j].size())
        throw SkewError("internal: coset correspondence is not a bijection");
      sys.bijections.push_back(std::move(bij));
    }
  return sys;
}

std::vector<std::pair<int, int>> compose_bijections(
    const std::vector<std::pair<int, int>>& f,
    const std::vector<std::pair<int, int>>& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : f)
    for (auto [yp, z] : g)
      if (y == yp) out.emplace_back(x, z);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool subset_of(const std::vector<std::pair<int, int>>& small,
               const std::vector<std::pair<int, int>>& big) {
  for (auto& p : small)
    if (!std::binary_search(big.begin(), big.end(), p)) return false;
  return true;
}

}  // namespace

CategoricityReport is_categorical(const Algebra& a) {
  QuotientOrder qo = quotient_order(a);
  int m = qo.quotient.size();
  OrderStructure ord = natural_order(a);

  CategoricityReport report{Categoricity::strictly_categorical, std::nullopt};
  bool saw_empty = false;
  bool failed = false;

  for (int i = 0; i < m && !failed; ++i)
    for (int j = 0; j < m && !failed; ++j)
      for (int k = 0; k < m && !failed; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!(qo.order.le(j, i) && qo.order.le(k, j))) continue;
        ClassPair ab{qo.d.blocks[i], qo.d.blocks[j]};
        ClassPair bc{qo.d.blocks[j], qo.d.blocks[k]};
        ClassPair ac{qo.d.blocks[i], qo.d.blocks[k]};
        CosetSystem sys_ab = coset_system(a, ab);
        CosetSystem sys_bc = coset_system(a, bc);
        CosetSystem sys_ac = coset_system(a, ac);
        for (const auto& phi : sys_ab.bijections) {
          for (const auto& psi : sys_bc.bijections) {
            auto comp = compose_bijections(phi.pairs, psi.pairs);
            if (comp.empty()) {
              saw_empty = true;
              continue;
            }
            bool full = false;
            for (const auto& chi : sys_ac.bijections)
              if (chi.pairs == comp) {
                full = true;
                break;
              }
            if (!full) {
              failed = true;
              CategoricityWitness w;
              w.upper_class = ab.upper;
              w.middle_class = ab.lower;
              w.lower_class = bc.lower;
              w.phi = phi;
              w.psi = psi;
              w.composite = comp;
              report.witness = std::move(w);
              break;
            }
          }
          if (failed) break;
        }
        // Prop sub: for every chain a > b > c the composite through b is
        // contained in the direct bijection.
        if (!failed) {
          for (int x : qo.d.blocks[i])
            for (int y : qo.d.blocks[j])
              for (int z : qo.d.blocks[k]) {
                if (!(ord.le(y, x) && ord.le(z, y))) continue;
                const CosetBijection* phi = nullptr;
                const CosetBijection* psi = nullptr;
                const CosetBijection* chi = nullptr;
                for (const auto& b : sys_ab.bijections)
                  if (std::binary_search(b.pairs.begin(), b.pairs.end(),
                                         std::pair(x, y)))
                    phi = &b;
                for (const auto& b : sys_bc.bijections)
                  if (std::binary_search(b.pairs.begin(), b.pairs.end(),
                                         std::pair(y, z)))
                    psi = &b;
                for (const auto& b : sys_ac.bijections)
                  if (std::binary_search(b.pairs.begin(), b.pairs.end(),
                                         std::pair(x, z)))
                    chi = &b;
                if (!phi || !psi || !chi)
                  throw SkewError("internal: chain triple misses bijections");
                if (!subset_of(compose_bijections(phi->pairs, psi->pairs),
                               chi->pairs))
                  throw SkewError("internal: Prop sub inclusion fails");
              }
        }
      }

  if (failed)
    report.verdict = Categoricity::neither;
  else if (saw_empty)
    report.verdict = Categoricity::categorical;
  return report;
}

bool normality_cover_check(const Algebra& a) {
  OrderStructure ord = natural_order(a);
  bool covers = true;
  for (const auto& pair : comparable_class_pairs(a)) {
    for (int x : pair.upper) {
      int below = 0;
      for (int y : pair.lower)
        if (ord.le(y, x)) ++below;
      if (below != 1) covers = false;
    }
  }
  if (covers != holds(a, catalog("S25")))
    throw SkewError("internal: covering route disagrees with S25");
  return covers;
}

std::vector<std::pair<int, int>> order_from_cosets(const Algebra& a,
                                                   const ClassPair& pair) {
  CosetSystem sys = coset_system(a, pair);
  std::vector<std::pair<int, int>> rel;
  for (const auto& b : sys.bijections)
    rel.insert(rel.end(), b.pairs.begin(), b.pairs.end());
  std::sort(rel.begin(), rel.end());
  OrderStructure ord = natural_order(a);
  std::vector<std::pair<int, int>> geq;
  for (int x : pair.upper)
    for (int y : pair.lower)
      if (ord.le(y, x)) geq.emplace_back(x, y);
  std::sort(geq.begin(), geq.end());
  if (rel != geq)
    throw SkewError("internal: coset bijections do not cover the order");
  return rel;
}

ReconstructionReport reconstruct_operations(const Algebra& a,
                                            const ClassPair& pair) {
  CosetSystem sys = coset_system(a, pair);
  std::vector<int> carrier = pair.upper;
  carrier.insert(carrier.end(), pair.lower.begin(), pair.lower.end());
  std::sort(carrier.begin(), carrier.end());
  int m = (int)carrier.size();
  std::vector<int> idx(a.size(), -1);
  for (int i = 0; i < m; ++i) idx[carrier[i]] = i;

  std::map<int, int> upper_coset_of, lower_coset_of;
  for (size_t i = 0; i < sys.upper_cosets.size(); ++i)
    for (int x : sys.upper_cosets[i]) upper_coset_of[x] = (int)i;
  for (size_t j = 0; j < sys.lower_cosets.size(); ++j)
    for (int y : sys.lower_cosets[j]) lower_coset_of[y] = (int)j;
  std::set<int> in_upper(pair.upper.begin(), pair.upper.end());

  // x in upper, y in lower: the bijection partner of x in y's coset, and
  // the partner of y in x's coset.
  auto down_partner = [&](int x, int y) {
    const auto& bij = sys.bijection(upper_coset_of[x], lower_coset_of[y]);
    for (auto [u, v] : bij.pairs)
      if (u == x) return v;
    throw SkewError("internal: bijection misses an upper element");
  };
  auto up_partner = [&](int x, int y) {
    const auto& bij = sys.bijection(upper_coset_of[x], lower_coset_of[y]);
    for (auto [u, v] : bij.pairs)
      if (v == y) return u;
    throw SkewError("internal: bijection misses a lower element");
  };

  std::vector<int> mt(m * m), jt(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int x = carrier[i], y = carrier[j];
      bool xu = in_upper.count(x) > 0, yu = in_upper.count(y) > 0;
      int mv, jv;
      if (xu == yu) {
        // within a rectangular class
        mv = a.meet(x, y);
        jv = a.join(x, y);
      } else if (xu) {
        int y0 = down_partner(x, y);   // x ^ y ^ x
        int x0 = up_partner(x, y);     // y v x v y
        mv = a.meet(y0, y);
        jv = a.join(x, x0);
      } else {
        // x in lower, y in upper
        int x0 = down_partner(y, x);   // y ^ x ^ y
        int y0 = up_partner(y, x);     // x v y v x
        mv = a.meet(x, x0);
        jv = a.join(y0, y);
      }
      mt[i * m + j] = idx[mv];
      jt[i * m + j] = idx[jv];
    }
  Algebra rebuilt(m, std::move(mt), std::move(jt));
  Algebra original = subalgebra(a, carrier);
  return {rebuilt, rebuilt == original};
}

Shape shape(const Algebra& a) {
  QuotientOrder qo = quotient_order(a);
  int m = qo.quotient.size();
  if (m == 1) return Shape::other;
  if (m == 2) return Shape::primitive;
  bool chain = true;
  for (int i = 0; i < m && chain; ++i)
    for (int j = 0; j < m && chain; ++j)
      if (!qo.order.le(i, j) && !qo.order.le(j, i)) chain = false;
  if (chain) return Shape::skew_chain;
  if (m == 4) {
    // diamond: top, bottom, and two incomparable middle classes
    std::vector<int> below(m, 0), above(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i != j && qo.order.le(j, i)) ++below[i];
        if (i != j && qo.order.le(i, j)) ++above[i];
      }
    int tops = 0, bottoms = 0, middles = 0;
    for (int i = 0; i < m; ++i) {
      if (below[i] == 3 && above[i] == 0) ++tops;
      else if (above[i] == 3 && below[i] == 0) ++bottoms;
      else if (below[i] == 1 && above[i] == 1) ++middles;
    }
    if (tops == 1 && bottoms == 1 && middles == 2) return Shape::diamond;
  }
  return Shape::other;
}

}  // namespace skew
