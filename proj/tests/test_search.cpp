#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skew/fixtures.hpp"
#include "skew/green.hpp"
#include "skew/identities.hpp"
#include "skew/search.hpp"

using namespace skew;
using namespace skew::fixtures;

TEST_CASE("enumerate_models small counts") {
  CHECK(enumerate_models(1, {}).entries.size() == 1);
  Catalog c2 = enumerate_models(2, {});
  CHECK(c2.entries.size() == 3);
  for (const Algebra& m : c2.entries) CHECK(is_skew_lattice(m));
  // the three 2-element models: the chain and the two rectangular pairs
  int lattices = 0;
  for (const Algebra& m : c2.entries)
    lattices += holds(m, catalog("S7")) && holds(m, catalog("S8"));
  CHECK(lattices == 1);
}

TEST_CASE("enumerated models are canonical and non-isomorphic") {
  Catalog c = enumerate_models(3, {});
  for (size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(canonical_form(c.entries[i]) == c.entries[i]);
    for (size_t j = i + 1; j < c.entries.size(); ++j)
      CHECK_FALSE(are_isomorphic(c.entries[i], c.entries[j]).has_value());
  }
}

TEST_CASE("every enumerated model is idempotent") {
  for (int n = 1; n <= 4; ++n)
    for (const Algebra& m : enumerate_models(n, {}).entries) {
      CHECK(holds(m, catalog("IDEM_MEET")));
      CHECK(holds(m, catalog("IDEM_JOIN")));
    }
}

TEST_CASE("constrained enumeration") {
  auto latt = parse_identity_list("S7,S8");
  Catalog c = enumerate_models(3, latt);
  for (const Algebra& m : c.entries) {
    CHECK(holds(m, catalog("S7")));
    CHECK(holds(m, catalog("S8")));
  }
  // exactly one 3-element lattice (the chain)
  CHECK(c.entries.size() == 1);
}

TEST_CASE("find_model basics") {
  ModelQuery q;
  q.n = 2;
  SearchResult r = find_model(q);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(is_skew_lattice(*r.model));

  // nothing falsifies x = x
  ModelQuery impossible;
  impossible.n = 2;
  impossible.falsify = {parse_identity("x = x")};
  CHECK(find_model(impossible).status == SearchStatus::exhausted);
}

TEST_CASE("find_model with skeleton") {
  ModelQuery q;
  q.n = 4;
  q.skeleton = std::vector<int>{1, 2, 1};
  SearchResult r = find_model(q);
  REQUIRE(r.status == SearchStatus::found);
  Partition d = green(*r.model, GreenRel::D);
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[1].size() == 2);  // middle class of size 2
}

TEST_CASE("skeleton must sum to n") {
  ModelQuery q;
  q.n = 4;
  q.skeleton = std::vector<int>{2, 3};
  CHECK_THROWS_AS(find_model(q), SkewError);
}

TEST_CASE("budget exhaustion is reported distinctly") {
  ModelQuery q;
  q.n = 9;
  q.satisfy = {catalog("S19")};
  q.falsify = {catalog("S20")};
  q.budget_seconds = 0.0;  // no time at all
  CHECK(find_model(q).status == SearchStatus::budget_exceeded);
  CHECK_THROWS_AS(enumerate_models(5, {}, 0.0), BudgetExceeded);
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(l2()) == l2());
  // m2 relabeled by swapping its two middle elements
  Algebra src = direct_product(l2(), l2());
  const int n = src.size();
  std::vector<int> p{0, 2, 1, 3};
  std::vector<int> mt(n * n), jt(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mt[p[x] * n + p[y]] = p[src.meet(x, y)];
      jt[p[x] * n + p[y]] = p[src.join(x, y)];
    }
  Algebra swapped(n, std::move(mt), std::move(jt));
  CHECK(canonical_form(swapped) == canonical_form(src));
  CHECK(are_isomorphic(canonical_form(swapped), swapped).has_value());
}

TEST_CASE("model-theoretic propositions on all models up to n=4") {
  for (int n = 1; n <= 4; ++n)
    for (const Algebra& a : enumerate_models(n, {}).entries) {
      // symmetry bridges
      if (holds(a, catalog("S13")) && holds(a, catalog("S19")))
        CHECK(holds(a, catalog("S20")));
      if (holds(a, catalog("S14")) && holds(a, catalog("S20")))
        CHECK(holds(a, catalog("S19")));
      // skew* collapse: S9-S12 along with S1-S6 force a lattice
      if (holds_all(a, parse_identity_list("S9-S12")))
        CHECK(holds_all(a, parse_identity_list("S7,S8")));
      // distributivity axiom-set equivalences, left- and right-handed
      bool lh_dist = holds_all(a, parse_identity_list("S17,S18,S19,S20"));
      bool lh_alt = holds_all(a, parse_identity_list("S1-S4,S9,S10,S21,S24"));
      CHECK(lh_dist == lh_alt);
      bool rh_dist = holds_all(a, parse_identity_list("S15,S16,S19,S20"));
      bool rh_alt = holds_all(a, parse_identity_list("S1-S4,S11,S12,S22,S23"));
      CHECK(rh_dist == rh_alt);
    }
}
