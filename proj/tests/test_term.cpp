#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skew/term.hpp"

using namespace skew;

TEST_CASE("parse_term basics") {
  Term t = parse_term("x ^ (x v y)");
  CHECK(t == Term::node(Op::meet, Term::var(0),
                        Term::node(Op::join, Term::var(0), Term::var(1))));
  CHECK(parse_term("x") == Term::var(0));
  CHECK(parse_term("x2") == Term::var(2));
  CHECK(parse_term("w") == Term::var(3));
  CHECK(parse_term("((x ^ y) ^ z)") == parse_term("x ^ y ^ z"));
}

TEST_CASE("mixing operators without parentheses is rejected") {
  CHECK_THROWS_AS(parse_term("x ^ y v z"), SyntaxError);
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("x ^"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(x ^ y"), SyntaxError);
  CHECK_THROWS_AS(parse_term("q"), SyntaxError);
}

TEST_CASE("dual term") {
  CHECK(parse_term("x ^ y").dual() == parse_term("x v y"));
  const Identity& s19 = catalog("S19");
  CHECK(s19.lhs.dual().dual() == s19.lhs);
  // dual of S3's lhs (y^x)vx is (yvx)^x, S5's lhs
  CHECK(catalog("S3").lhs.dual() == catalog("S5").lhs);
}

TEST_CASE("identity duals pair up in the catalog") {
  // The operation-swap dual of a right-handed meet law is a left-handed
  // join law, so S15 pairs with S18 and S17 with S16.
  const char* pairs[][2] = {{"S1", "S2"},   {"S3", "S5"},   {"S4", "S6"},
                            {"S7", "S8"},   {"S13", "S14"}, {"S15", "S18"},
                            {"S17", "S16"}, {"S19", "S20"}, {"S25", "S26"}};
  for (auto [a, b] : pairs) {
    Identity d = catalog(a).dual();
    CHECK(d.lhs == catalog(b).lhs);
    CHECK(d.rhs == catalog(b).rhs);
  }
}

TEST_CASE("catalog shapes") {
  CHECK(catalog("S1").to_string() == "x ^ (y ^ z) = (x ^ y) ^ z");
  CHECK(catalog("RECT").num_vars == 2);
  CHECK(catalog("S25").num_vars == 4);
  CHECK_THROWS_AS(catalog("S27"), SkewError);
}

TEST_CASE("parse_identity and lists") {
  Identity id = parse_identity("x ^ y = y ^ x");
  CHECK(id.num_vars == 2);
  CHECK(parse_identity_list("S1-S6").size() == 6);
  CHECK(parse_identity_list("S1..S3,S7").size() == 4);
  CHECK(parse_identity_list("REG").size() == 2);
  auto inl = parse_identity_list("x ^ y = y ^ x");
  CHECK(inl.size() == 1);
  CHECK(skew_lattice_axioms().size() == 6);
}

TEST_CASE("postfix programs mirror the trees") {
  const Identity& s1 = catalog("S1");
  // S1 is stored as x ^ (y ^ z) = (x ^ y) ^ z.
  CHECK(s1.lhs_prog == std::vector<int>{0, 1, 2, -1, -1});
  CHECK(s1.rhs_prog == std::vector<int>{0, 1, -1, 2, -1});
}
