#include "skew/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace skew {

SyntaxError::SyntaxError(const std::string& what, int pos)
    : SkewError(what + " at position " + std::to_string(pos)),
      position(pos) {}

Term Term::var(int index) {
  auto n = std::make_shared<Node>();
  n->var = index;
  return Term(std::move(n));
}

Term Term::node(Op op, Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->left = std::make_shared<const Term>(std::move(left));
  n->right = std::make_shared<const Term>(std::move(right));
  return Term(std::move(n));
}

int Term::max_var() const {
  if (is_var()) return var_index();
  return std::max(left().max_var(), right().max_var());
}

Term Term::dual() const {
  if (is_var()) return *this;
  return node(op() == Op::meet ? Op::join : Op::meet, left().dual(),
              right().dual());
}

std::string Term::to_string() const {
  if (is_var()) {
    static const char* alias[] = {"x", "y", "z", "w"};
    int i = var_index();
    return i < 4 ? alias[i] : "x" + std::to_string(i);
  }
  auto wrap = [&](const Term& t) {
    std::string s = t.to_string();
    return t.is_var() ? s : "(" + s + ")";
  };
  return wrap(left()) + (op() == Op::meet ? " ^ " : " v ") + wrap(right());
}

bool Term::operator==(const Term& other) const {
  if (is_var() != other.is_var()) return false;
  if (is_var()) return var_index() == other.var_index();
  return op() == other.op() && left() == other.left() &&
         right() == other.right();
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Term parse_primary() {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("unexpected end of input", (int)pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Term t = parse_sequence();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw SyntaxError("expected ')'", (int)pos);
      ++pos;
      return t;
    }
    if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      size_t start = pos;
      ++pos;
      if (c == 'x' && pos < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[pos]))) {
        size_t d = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        return Term::var(std::stoi(text.substr(d, pos - d)));
      }
      switch (c) {
        case 'x': return Term::var(0);
        case 'y': return Term::var(1);
        case 'z': return Term::var(2);
        default: return Term::var(3);
      }
      (void)start;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", (int)pos);
  }

  // Left-associative run of one operator; mixing requires parentheses.
  Term parse_sequence() {
    Term acc = parse_primary();
    bool have_op = false;
    Op seq_op = Op::meet;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      Op op;
      if (c == '^') op = Op::meet;
      else if (c == 'v') op = Op::join;
      else break;
      if (have_op && op != seq_op)
        throw SyntaxError(
            "mixing '^' and 'v' requires explicit parentheses", (int)pos);
      have_op = true;
      seq_op = op;
      ++pos;
      acc = Term::node(op, std::move(acc), parse_primary());
    }
    return acc;
  }
};

void compile_term(const Term& t, std::vector<int>& prog) {
  if (t.is_var()) {
    prog.push_back(t.var_index());
    return;
  }
  compile_term(t.left(), prog);
  compile_term(t.right(), prog);
  prog.push_back(t.op() == Op::meet ? -1 : -2);
}

}  // namespace

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.parse_sequence();
  if (!p.at_end())
    throw SyntaxError("trailing input", (int)p.pos);
  return t;
}

Identity::Identity(Term l, Term r, std::string tag)
    : lhs(std::move(l)), rhs(std::move(r)), code(std::move(tag)) {
  num_vars = std::max(lhs.max_var(), rhs.max_var()) + 1;
  // Variable indices must be contiguous from 0.
  std::vector<bool> seen(num_vars, false);
  auto mark = [&](const Term& t, auto&& self) -> void {
    if (t.is_var()) seen[t.var_index()] = true;
    else {
      self(t.left(), self);
      self(t.right(), self);
    }
  };
  mark(lhs, mark);
  mark(rhs, mark);
  for (int i = 0; i < num_vars; ++i)
    if (!seen[i])
      throw SkewError("identity variables are not contiguous from 0");
  compile_term(lhs, lhs_prog);
  compile_term(rhs, rhs_prog);
}

std::string Identity::to_string() const {
  return lhs.to_string() + " = " + rhs.to_string();
}

Identity Identity::dual() const {
  std::string tag;
  return Identity(lhs.dual(), rhs.dual(), tag);
}

Identity parse_identity(const std::string& text) {
  size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw SyntaxError("expected '=' between terms", (int)text.size());
  return Identity(parse_term(text.substr(0, eq)),
                  parse_term(text.substr(eq + 1)));
}

namespace {

std::map<std::string, Identity> build_catalog() {
  std::map<std::string, Identity> c;
  auto add = [&](const std::string& code, const std::string& l,
                 const std::string& r) {
    c.emplace(code, Identity(parse_term(l), parse_term(r), code));
  };
  add("S1", "x ^ (y ^ z)", "(x ^ y) ^ z");
  add("S2", "x v (y v z)", "(x v y) v z");
  add("S3", "(y ^ x) v x", "x");
  add("S4", "x ^ (x v y)", "x");
  add("S5", "(y v x) ^ x", "x");
  add("S6", "x v (x ^ y)", "x");
  add("S7", "x ^ y", "y ^ x");
  add("S8", "x v y", "y v x");
  add("S9", "(x ^ y) v x", "x");
  add("S10", "x ^ (y v x)", "x");
  add("S11", "(x v y) ^ x", "x");
  add("S12", "x v (y ^ x)", "x");
  add("S13", "x ^ y ^ (x v y v x)", "(x v y v x) ^ y ^ x");
  add("S14", "x v y v (x ^ y ^ x)", "(x ^ y ^ x) v y v x");
  add("S15", "x ^ y ^ x", "y ^ x");
  add("S16", "x v y v x", "x v y");
  add("S17", "x ^ y ^ x", "x ^ y");
  add("S18", "x v y v x", "y v x");
  add("S19", "(x ^ (y v z)) ^ x", "(x ^ y ^ x) v (x ^ z ^ x)");
  add("S20", "(x v (y ^ z)) v x", "(x v y v x) ^ (x v z v x)");
  add("S21", "x ^ (y v z)", "(x ^ y) v (x ^ z)");
  add("S22", "(x v y) ^ z", "(x ^ z) v (y ^ z)");
  add("S23", "x v (y ^ z)", "(x v y) ^ (x v z)");
  add("S24", "(x ^ y) v z", "(x v z) ^ (y v z)");
  add("S25", "x ^ y ^ z ^ w", "x ^ z ^ y ^ w");
  add("S26", "x v y v z v w", "x v z v y v w");
  add("RECT", "x ^ y ^ x", "x");
  add("REG_MEET", "x ^ y ^ x ^ z ^ x", "x ^ y ^ z ^ x");
  add("REG_JOIN", "x v y v x v z v x", "x v y v z v x");
  add("IDEM_MEET", "x ^ x", "x");
  add("IDEM_JOIN", "x v x", "x");
  return c;
}

const std::map<std::string, Identity>& the_catalog() {
  static const std::map<std::string, Identity> c = build_catalog();
  return c;
}

}  // namespace

const Identity& catalog(const std::string& code) {
  auto it = the_catalog().find(code);
  if (it == the_catalog().end())
    throw SkewError("unknown identity tag: " + code);
  return it->second;
}

const std::vector<Identity>& skew_lattice_axioms() {
  static const std::vector<Identity> axioms = {
      catalog("S1"), catalog("S2"), catalog("S3"),
      catalog("S4"), catalog("S5"), catalog("S6")};
  return axioms;
}

std::vector<Identity> parse_identity_list(const std::string& spec) {
  std::vector<Identity> out;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    std::string item = spec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    // trim
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a != std::string::npos) {
      item = item.substr(a, b - a + 1);
      if (item == "REG") {
        out.push_back(catalog("REG_MEET"));
        out.push_back(catalog("REG_JOIN"));
      } else if (item.find('=') != std::string::npos) {
        out.push_back(parse_identity(item));
      } else {
        size_t dash = item.find('-');
        if (dash == std::string::npos) dash = item.find("..");
        if (dash != std::string::npos && item.size() > 1 && item[0] == 'S') {
          size_t len = item[dash] == '-' ? 1 : 2;
          std::string lo = item.substr(0, dash), hi = item.substr(dash + len);
          int i = std::stoi(lo.substr(1)), j = std::stoi(hi.substr(1));
          for (int k = i; k <= j; ++k)
            out.push_back(catalog("S" + std::to_string(k)));
        } else {
          out.push_back(catalog(item));
        }
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace skew
