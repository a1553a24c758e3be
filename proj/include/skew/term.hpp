#ifndef SKEW_TERM_HPP
#define SKEW_TERM_HPP

#include <memory>
#include <string>
#include <vector>

#include "skew/algebra.hpp"

namespace skew {

struct SyntaxError : SkewError {
  SyntaxError(const std::string& what, int position);
  int position;
};

// Words in {meet, join} over variables x0, x1, ...
class Term {
 public:
  static Term var(int index);
  static Term node(Op op, Term left, Term right);

  bool is_var() const { return node_->var >= 0; }
  int var_index() const { return node_->var; }
  Op op() const { return node_->op; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  int max_var() const;        // -1 when (impossibly) no variable
  Term dual() const;          // swap meet and join, fix variables
  std::string to_string() const;
  bool operator==(const Term& other) const;

 private:
  struct Node {
    int var = -1;
    Op op = Op::meet;
    std::shared_ptr<const Term> left, right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar: variables x,y,z,w (aliases for x0..x3) or x<k>; meet `^`, join
// `v`; both left-associative at equal precedence, so mixing operators
// requires explicit parentheses.
Term parse_term(const std::string& text);

struct Identity {
  Term lhs, rhs;
  std::string code;  // catalog tag when applicable
  int num_vars;
  // Postfix programs for fast evaluation: value >= 0 pushes a variable,
  // -1 applies meet, -2 applies join.
  std::vector<int> lhs_prog, rhs_prog;

  Identity(Term l, Term r, std::string tag = "");
  std::string to_string() const;
  Identity dual() const;
};

// `<term> = <term>`
Identity parse_identity(const std::string& text);

// Axiom catalog: S1..S26 plus RECT (x^y^x = x) and REG_MEET / REG_JOIN
// (xyxzx = xyzx for the respective operation).
const Identity& catalog(const std::string& code);

// Expands a comma-separated tag list; items are catalog codes, ranges like
// S1-S6 or S1..S6, REG (both regularity identities), or inline identities.
std::vector<Identity> parse_identity_list(const std::string& spec);

// S1..S6.
const std::vector<Identity>& skew_lattice_axioms();

}  // namespace skew

#endif
