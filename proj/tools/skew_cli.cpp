// skew: command-line workbench for finite skew lattices.
//
// Exit codes: 0 success/property holds, 1 property fails or model absent,
// 2 usage or parse error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "skew/congruence.hpp"
#include "skew/cosets.hpp"
#include "skew/decompose.hpp"
#include "skew/fixtures.hpp"
#include "skew/green.hpp"
#include "skew/identities.hpp"
#include "skew/io.hpp"
#include "skew/search.hpp"

namespace {

using namespace skew;

std::string mark(bool b) { return b ? "✓" : "✗"; }

std::string show_assignment(const std::vector<int>& asg,
                            const NamedAlgebra& a) {
  static const char* alias[] = {"x", "y", "z", "w"};
  std::ostringstream out;
  for (size_t i = 0; i < asg.size(); ++i) {
    if (i) out << ", ";
    out << (i < 4 ? alias[i] : "x" + std::to_string(i)) << "="
        << a.label(asg[i]);
  }
  return out.str();
}

std::string show_set(const std::vector<int>& xs, const NamedAlgebra& a) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < xs.size(); ++i)
    out << (i ? "," : "") << a.label(xs[i]);
  out << "}";
  return out.str();
}

void print_flag(const std::string& name, const NamedAlgebra& a,
                const std::vector<std::string>& codes) {
  bool ok = true;
  std::vector<int> cex;
  std::string cex_code;
  for (const auto& c : codes) {
    auto v = check_identity(a.algebra, catalog(c));
    if (!v.holds) {
      ok = false;
      cex = v.assignment;
      cex_code = c;
      break;
    }
  }
  std::cout << "  " << name << " " << mark(ok);
  if (!ok)
    std::cout << " (counterexample " << cex_code << ": "
              << show_assignment(cex, a) << ")";
  std::cout << "\n";
}

int cmd_check(const std::string& file) {
  NamedAlgebra a = read_skw_file(file);
  std::cout << "algebra: n=" << a.algebra.size() << "\n";
  print_flag("skew lattice (S1-S6)", a, {"S1", "S2", "S3", "S4", "S5", "S6"});
  bool sl = is_skew_lattice(a.algebra);
  print_flag("lattice (S7, S8)", a, {"S7", "S8"});
  print_flag("right-handed (S15, S16)", a, {"S15", "S16"});
  print_flag("left-handed (S17, S18)", a, {"S17", "S18"});
  print_flag("lower symmetric (S13)", a, {"S13"});
  print_flag("upper symmetric (S14)", a, {"S14"});
  print_flag("middle distributive (S19, S20)", a, {"S19", "S20"});
  print_flag("bidistributive (S21-S24)", a, {"S21", "S22", "S23", "S24"});
  print_flag("normal (S25)", a, {"S25"});
  print_flag("conormal (S26)", a, {"S26"});
  print_flag("regular", a, {"REG_MEET", "REG_JOIN"});
  if (sl) {
    PropertyProfile p = classify(a.algebra);
    std::cout << "  rectangular " << mark(p.rectangular) << "\n";
    std::cout << "  connected " << mark(p.connected) << "\n";
    std::cout << "  categorical " << mark(p.categorical) << "\n";
    std::cout << "  strictly categorical " << mark(p.strictly_categorical)
              << "\n";
    const char* shp = p.primitive    ? "primitive"
                      : p.skew_chain ? "skew chain"
                      : p.diamond    ? "diamond"
                                     : "other";
    std::cout << "  shape: " << shp << "\n";
    std::cout << "  center: " << show_set(center(a.algebra), a) << "\n";
  }
  return sl ? 0 : 1;
}

int cmd_green(const std::string& file) {
  NamedAlgebra a = read_skw_file(file);
  for (auto [rel, name] : {std::pair{GreenRel::R, "R"},
                           {GreenRel::L, "L"},
                           {GreenRel::D, "D"},
                           {GreenRel::H, "H"}}) {
    Partition p = green(a.algebra, rel);
    std::cout << name << ":";
    for (const auto& blk : p.blocks) std::cout << " " << show_set(blk, a);
    std::cout << "\n";
  }
  return 0;
}

int cmd_order(const std::string& file) {
  NamedAlgebra a = read_skw_file(file);
  OrderStructure o = natural_order(a.algebra);
  int n = a.algebra.size();
  std::cout << "natural partial order (x <= y):\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && o.le(x, y))
        std::cout << "  " << a.label(x) << " <= " << a.label(y) << "\n";
  std::cout << "natural preorder (strictly below):\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (o.pre(x, y) && !o.pre(y, x))
        std::cout << "  " << a.label(x) << " < " << a.label(y) << "\n";
  Partition comp = components(a.algebra);
  std::cout << "components:";
  for (const auto& blk : comp.blocks) std::cout << " " << show_set(blk, a);
  std::cout << "\n";
  return 0;
}

int cmd_quotient(const std::string& file, const std::string& by) {
  NamedAlgebra a = read_skw_file(file);
  Partition p;
  if (by == "D") p = green(a.algebra, GreenRel::D);
  else if (by == "L") p = green(a.algebra, GreenRel::L);
  else if (by == "R") p = green(a.algebra, GreenRel::R);
  else if (by == "commutativity") p = commutativity_congruence(a.algebra);
  else {
    std::cerr << "unknown congruence: " << by << "\n";
    return 2;
  }
  Quotient q = quotient(a.algebra, p);
  std::cout << "blocks:";
  for (const auto& blk : p.blocks) std::cout << " " << show_set(blk, a);
  std::cout << "\n";
  write_skw(std::cout, {q.algebra, {}});
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& kind) {
  NamedAlgebra a = read_skw_file(file);
  Decomposition dec = [&] {
    if (kind == "first") return first_decomposition(a.algebra);
    if (kind == "component") return component_decomposition(a.algebra);
    if (kind == "second") return second_decomposition(a.algebra);
    throw SkewError("unknown decomposition kind: " + kind);
  }();
  std::cout << "parts:";
  for (const auto& blk : dec.parts) std::cout << " " << show_set(blk, a);
  std::cout << "\nquotient (n=" << dec.quotient.size() << "):\n";
  write_skw(std::cout, {dec.quotient, {}});
  if (dec.kind == Decomposition::Kind::second) {
    std::cout << "right factor a/L (n=" << dec.right_factor->size()
              << "), left factor a/R (n=" << dec.left_factor->size()
              << ")\n";
    std::cout << "fibered product size: " << dec.fibered->size() << "\n";
    std::cout << "pair map is an isomorphism: yes\n";
  }
  return 0;
}

int cmd_cosets(const std::string& file, int upper, int lower, bool has_pair) {
  NamedAlgebra a = read_skw_file(file);
  auto pairs = comparable_class_pairs(a.algebra);
  if (pairs.empty()) {
    std::cout << "no comparable D-class pairs\n";
    return 0;
  }
  for (const auto& pr : pairs) {
    if (has_pair) {
      Partition d = green(a.algebra, GreenRel::D);
      if (d.block_of[pr.upper[0]] != upper || d.block_of[pr.lower[0]] != lower)
        continue;
    }
    CosetSystem sys = coset_system(a.algebra, pr);
    std::cout << "pair " << show_set(pr.upper, a) << " > "
              << show_set(pr.lower, a) << "\n";
    std::cout << "  cosets in upper:";
    for (const auto& c : sys.upper_cosets) std::cout << " " << show_set(c, a);
    std::cout << "\n  cosets in lower:";
    for (const auto& c : sys.lower_cosets) std::cout << " " << show_set(c, a);
    std::cout << "\n";
    for (const auto& b : sys.bijections) {
      std::cout << "  bijection " << show_set(sys.upper_cosets[b.upper_coset], a)
                << " -> " << show_set(sys.lower_cosets[b.lower_coset], a)
                << ":";
      for (auto [x, y] : b.pairs)
        std::cout << " " << a.label(x) << ">" << a.label(y);
      std::cout << "\n";
    }
    auto rel = order_from_cosets(a.algebra, pr);
    std::cout << "  order from cosets:";
    for (auto [x, y] : rel)
      std::cout << " " << a.label(x) << ">=" << a.label(y);
    std::cout << "\n";
    auto rec = reconstruct_operations(a.algebra, pr);
    std::cout << "  reconstruction agrees: " << (rec.agrees ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int cmd_categorical(const std::string& file) {
  NamedAlgebra a = read_skw_file(file);
  CategoricityReport rep = is_categorical(a.algebra);
  switch (rep.verdict) {
    case Categoricity::strictly_categorical:
      std::cout << "strictly categorical\n";
      return 0;
    case Categoricity::categorical:
      std::cout << "categorical\n";
      return 0;
    case Categoricity::neither: {
      std::cout << "not categorical\n";
      const auto& w = *rep.witness;
      std::cout << "witness classes: " << show_set(w.upper_class, a) << " > "
                << show_set(w.middle_class, a) << " > "
                << show_set(w.lower_class, a) << "\n";
      std::cout << "composite:";
      for (auto [x, z] : w.composite)
        std::cout << " " << a.label(x) << ">" << a.label(z);
      std::cout << " is not a full coset bijection\n";
      return 1;
    }
  }
  return 0;
}

int cmd_iso(const std::string& f1, const std::string& f2) {
  NamedAlgebra a = read_skw_file(f1), b = read_skw_file(f2);
  auto w = are_isomorphic(a.algebra, b.algebra);
  if (!w) {
    std::cout << "not isomorphic\n";
    return 1;
  }
  std::cout << "isomorphic:";
  for (int x = 0; x < a.algebra.size(); ++x)
    std::cout << " " << a.label(x) << "->" << b.label((*w)[x]);
  std::cout << "\n";
  return 0;
}

int cmd_dot(const std::string& file) {
  std::cout << to_dot(read_skw_file(file));
  return 0;
}

int cmd_enumerate(int n, const std::string& satisfy,
                  const std::string& falsify, const std::string& out_file) {
  auto sat = satisfy.empty() ? std::vector<Identity>{}
                             : parse_identity_list(satisfy);
  auto fal = falsify.empty() ? std::vector<Identity>{}
                             : parse_identity_list(falsify);
  Catalog cat = enumerate_models(n, sat);
  if (!fal.empty()) {
    std::vector<Algebra> kept;
    for (const auto& m : cat.entries) {
      bool ok = true;
      for (const auto& id : fal)
        if (holds(m, id)) {
          ok = false;
          break;
        }
      if (ok) kept.push_back(m);
    }
    cat.entries = std::move(kept);
  }
  std::ostringstream prov;
  prov << "enumerate --size " << n;
  if (!satisfy.empty()) prov << " --satisfy " << satisfy;
  if (!falsify.empty()) prov << " --falsify " << falsify;
  cat.provenance = prov.str();
  std::cout << cat.entries.size() << " model(s) up to isomorphism\n";
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    write_catalog(out, cat);
  } else {
    write_catalog(std::cout, cat);
  }
  return 0;
}

int cmd_find(int n, const std::string& satisfy, const std::string& falsify,
             const std::string& skeleton, double budget, bool noncategorical,
             const std::string& out_file) {
  ModelQuery q;
  q.n = n;
  if (!satisfy.empty()) q.satisfy = parse_identity_list(satisfy);
  if (!falsify.empty()) q.falsify = parse_identity_list(falsify);
  q.budget_seconds = budget;
  q.require_noncategorical = noncategorical;
  if (!skeleton.empty()) {
    std::vector<int> sizes;
    std::istringstream ss(skeleton);
    std::string part;
    while (std::getline(ss, part, '>')) sizes.push_back(std::stoi(part));
    q.skeleton = sizes;
  }
  SearchResult res = find_model(q);
  switch (res.status) {
    case SearchStatus::found: {
      std::cout << "model found (n=" << res.model->size() << ")\n";
      NamedAlgebra na{*res.model, {}};
      if (!out_file.empty()) write_skw_file(out_file, na);
      else write_skw(std::cout, na);
      return 0;
    }
    case SearchStatus::exhausted:
      std::cout << "no model: search exhausted\n";
      return 1;
    case SearchStatus::budget_exceeded:
      std::cout << "no verdict: budget exceeded\n";
      return 3;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew: a workbench for finite skew lattices"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers,
                 "number of parallel workers (default: all cores)");

  std::string file, file2, by = "D", kind = "first", satisfy, falsify,
              skeleton, out_file;
  int n = 2, pair_i = -1, pair_j = -1;
  double budget = -1;
  bool noncategorical = false;
  std::vector<int> pair_opt;

  auto* c_check = app.add_subcommand("check", "property report");
  c_check->add_option("file", file)->required();
  auto* c_green = app.add_subcommand("green", "Green's relations");
  c_green->add_option("file", file)->required();
  auto* c_order = app.add_subcommand("order", "natural order and components");
  c_order->add_option("file", file)->required();
  auto* c_quot = app.add_subcommand("quotient", "quotient algebra");
  c_quot->add_option("file", file)->required();
  c_quot->add_option("--by", by, "D, L, R, or commutativity");
  auto* c_dec = app.add_subcommand("decompose", "Leech decompositions");
  c_dec->add_option("file", file)->required();
  c_dec->add_option("--kind", kind, "first, component, or second");
  auto* c_cos = app.add_subcommand("cosets", "coset systems");
  c_cos->add_option("file", file)->required();
  c_cos->add_option("--pair", pair_opt, "upper and lower D-class index")
      ->expected(2);
  auto* c_cat = app.add_subcommand("categorical", "categoricity verdict");
  c_cat->add_option("file", file)->required();
  auto* c_iso = app.add_subcommand("iso", "isomorphism test");
  c_iso->add_option("file1", file)->required();
  c_iso->add_option("file2", file2)->required();
  auto* c_dot = app.add_subcommand("dot", "DOT diagram");
  c_dot->add_option("file", file)->required();
  auto* c_enum = app.add_subcommand("enumerate", "enumerate models");
  c_enum->add_option("--size", n)->required();
  c_enum->add_option("--satisfy", satisfy);
  c_enum->add_option("--falsify", falsify);
  c_enum->add_option("--out", out_file);
  auto* c_find = app.add_subcommand("find", "search for one model");
  c_find->add_option("--size", n)->required();
  c_find->add_option("--satisfy", satisfy);
  c_find->add_option("--falsify", falsify);
  c_find->add_option("--skeleton", skeleton, "chain sizes, e.g. 2>4>2");
  c_find->add_option("--budget", budget, "seconds");
  c_find->add_flag("--non-categorical", noncategorical);
  c_find->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#endif

  try {
    if (c_check->parsed()) return cmd_check(file);
    if (c_green->parsed()) return cmd_green(file);
    if (c_order->parsed()) return cmd_order(file);
    if (c_quot->parsed()) return cmd_quotient(file, by);
    if (c_dec->parsed()) return cmd_decompose(file, kind);
    if (c_cos->parsed())
      return cmd_cosets(file, pair_opt.size() == 2 ? pair_opt[0] : -1,
                        pair_opt.size() == 2 ? pair_opt[1] : -1,
                        pair_opt.size() == 2);
    if (c_cat->parsed()) return cmd_categorical(file);
    if (c_iso->parsed()) return cmd_iso(file, file2);
    if (c_dot->parsed()) return cmd_dot(file);
    if (c_enum->parsed()) return cmd_enumerate(n, satisfy, falsify, out_file);
    if (c_find->parsed())
      return cmd_find(n, satisfy, falsify, skeleton, budget, noncategorical,
                      out_file);
  } catch (const skew::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const skew::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const skew::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  (void)pair_i;
  (void)pair_j;
  return 2;
}
