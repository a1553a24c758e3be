#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skew/congruence.hpp"
#include "skew/fixtures.hpp"
#include "skew/identities.hpp"

using namespace skew;
using namespace skew::fixtures;

TEST_CASE("is_congruence") {
  Algebra f = f4r();
  CHECK(is_congruence(f, Partition::singletons(4)).ok);
  CHECK(is_congruence(f, Partition::from_block_ids(4, {0, 0, 0, 0})).ok);
  // {{0,a},{b},{1}} fails: 0~a but 0vb=b, avb=a and b is not ~ a
  CongruenceVerdict v =
      is_congruence(f, Partition::from_block_ids(4, {0, 0, 1, 2}));
  CHECK_FALSE(v.ok);
}

TEST_CASE("least_congruence") {
  CHECK(least_congruence(f4r(), {}).blocks ==
        Partition::singletons(4).blocks);
  CHECK(least_congruence(f4r(), {{1, 2}}).blocks ==
        std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
  CHECK(least_congruence(l2(), {{0, 1}}).blocks.size() == 1);
}

TEST_CASE("least_congruence is minimal against the enumerated lattice") {
  for (const Algebra& a : {f4r(), m2(), rr2()}) {
    auto all = all_congruences(a);
    for (int x = 0; x < a.size(); ++x)
      for (int y = x + 1; y < a.size(); ++y) {
        Partition lc = least_congruence(a, {{x, y}});
        CHECK(is_congruence(a, lc).ok);
        for (const Partition& c : all)
          if (c.same_block(x, y)) {
            // lc refines every congruence containing the pair
            for (int u = 0; u < a.size(); ++u)
              for (int v = 0; v < a.size(); ++v)
                if (lc.same_block(u, v)) CHECK(c.same_block(u, v));
          }
      }
  }
}

TEST_CASE("commutativity congruence equals D") {
  CHECK(commutativity_congruence(l2()).blocks ==
        Partition::singletons(2).blocks);
  CHECK(commutativity_congruence(rr2()).blocks ==
        std::vector<std::vector<int>>{{0, 1}});
  CHECK(commutativity_congruence(f4r()).blocks ==
        std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
}

TEST_CASE("quotients") {
  Quotient q = quotient(f4r(), green(f4r(), GreenRel::D));
  CHECK(q.algebra.size() == 3);
  // 3-chain lattice
  CHECK(holds(q.algebra, catalog("S7")));
  CHECK(holds(q.algebra, catalog("S8")));
  CHECK(q.projection.map == std::vector<int>{0, 1, 1, 2});

  Quotient idq = quotient(f4r(), Partition::singletons(4));
  CHECK(idq.algebra == f4r());

  Quotient full = quotient(rr2(), Partition::from_block_ids(2, {0, 0}));
  CHECK(full.algebra.size() == 1);

  CHECK_THROWS_AS(quotient(f4r(), Partition::from_block_ids(4, {0, 0, 1, 2})),
                  NotACongruence);
}

TEST_CASE("quotient handedness (Theorem on maximal one-sided images)") {
  for (const Algebra& a : {f4r(), rr2(), lr2()}) {
    Quotient ql = quotient(a, green(a, GreenRel::L));
    CHECK(holds(ql.algebra, catalog("S15")));
    CHECK(holds(ql.algebra, catalog("S16")));
    Quotient qr = quotient(a, green(a, GreenRel::R));
    CHECK(holds(qr.algebra, catalog("S17")));
    CHECK(holds(qr.algebra, catalog("S18")));
  }
}

TEST_CASE("factor_homomorphism") {
  Algebra a = l2();
  Factorization f1 = factor_homomorphism({a, a, {0, 1}});
  CHECK(f1.epi.map == std::vector<int>{0, 1});
  CHECK(f1.mono.map == std::vector<int>{0, 1});

  // projection f4r -> f4r/D: epi is the projection, mono the identity
  Quotient q = quotient(f4r(), green(f4r(), GreenRel::D));
  Factorization f2 =
      factor_homomorphism({f4r(), q.algebra, q.projection.map});
  CHECK(f2.epi.map == q.projection.map);
  CHECK(f2.mono.map == std::vector<int>{0, 1, 2});

  // constant-0 map l2 -> l2
  Factorization f3 = factor_homomorphism({a, a, {0, 0}});
  CHECK(f3.epi.target.size() == 1);
  CHECK(f3.mono.map == std::vector<int>{0});

  CHECK_THROWS_AS(factor_homomorphism({a, a, {1, 0}}), NotAHomomorphism);
}

TEST_CASE("all_congruences on fixtures") {
  // the 2-chain has exactly the identity and full congruences
  CHECK(all_congruences(l2()).size() == 2);
  auto cs = all_congruences(f4r());
  for (const auto& c : cs) CHECK(is_congruence(f4r(), c).ok);
  // D must appear among them
  Partition d = green(f4r(), GreenRel::D);
  bool found = false;
  for (const auto& c : cs) found |= c.blocks == d.blocks;
  CHECK(found);
}
