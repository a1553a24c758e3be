#include "skew/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "skew/cosets.hpp"
#include "skew/identities.hpp"

namespace skew {

namespace {

using Clock = std::chrono::steady_clock;

// One ground instance of an identity: a concrete variable binding.
struct Instance {
  const Identity* id;
  std::array<std::int8_t, 4> asg;
};

// Backtracking model builder over partial operation tables. Cells are
// indexed op * n * n + x * n + y; -1 marks unknown. Propagation scans the
// ground instances: an instance whose one side evaluates to a value and
// whose other side reduces to a single unknown cell forces that cell.
class Engine {
 public:
  Engine(int n, std::vector<Identity> satisfy)
      : n_(n), satisfy_(std::move(satisfy)), cells_(2 * n * n, -1),
        domain_(2 * n * n, ~std::uint16_t(0)) {
    if (n_ > 12) throw SizeLimit("search supports n <= 12");
    std::uint16_t full = static_cast<std::uint16_t>((1u << n_) - 1);
    std::fill(domain_.begin(), domain_.end(), full);
  }

  // Restrict a cell's candidate set to the given elements.
  void restrict_domain(Op op, int x, int y, const std::vector<int>& allowed) {
    std::uint16_t mask = 0;
    for (int v : allowed) mask |= static_cast<std::uint16_t>(1u << v);
    domain_[cell_index(op, x, y)] &= mask;
  }

  void prefill(Op op, int x, int y, int v) { prefills_.push_back({cell_index(op, x, y), v}); }

  // Ground instances restricted to the given bindings (used for per-class
  // rectangularity under a skeleton).
  void add_instance(const Identity& id, std::array<std::int8_t, 4> asg) {
    extra_ids_.push_back(id);
    extra_asg_.push_back(asg);
  }

  void set_deadline(double seconds) {
    if (seconds >= 0) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
  }

  bool budget_hit() const { return budget_hit_; }

  // Runs the search; emit returns false to stop. Returns true when the
  // space was exhausted (no early stop, no budget hit).
  bool run(const std::function<bool(const Algebra&)>& emit) {
    emit_ = &emit;
    stopped_ = false;
    budget_hit_ = false;
    build_instances();
    // idempotent diagonal
    for (int op = 0; op < 2; ++op)
      for (int x = 0; x < n_; ++x)
        if (!assign(op * n_ * n_ + x * n_ + x, x)) return true;
    for (auto [cell, v] : prefills_)
      if (!assign(cell, v)) return true;
    // Cells whose domain was restricted to one value are already decided.
    for (int c = 0; c < 2 * n_ * n_; ++c)
      if (cells_[c] < 0 && (domain_[c] & (domain_[c] - 1)) == 0) {
        if (domain_[c] == 0) return true;
        int v = 0;
        while (!(domain_[c] & (1u << v))) ++v;
        if (!assign(c, v)) return true;
      }
    if (!propagate()) return true;
    search();
    return !stopped_ && !budget_hit_;
  }

 private:
  int cell_index(Op op, int x, int y) const {
    return (op == Op::meet ? 0 : n_ * n_) + x * n_ + y;
  }

  void build_instances() {
    instances_.clear();
    auto add_all = [&](const Identity& id) {
      int k = id.num_vars;
      std::array<std::int8_t, 4> asg{0, 0, 0, 0};
      std::int64_t total = 1;
      for (int i = 0; i < k; ++i) total *= n_;
      for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t v = t;
        for (int i = k - 1; i >= 0; --i) {
          asg[i] = static_cast<std::int8_t>(v % n_);
          v /= n_;
        }
        instances_.push_back({&id, asg});
      }
    };
    for (const auto& id : skew_lattice_axioms()) add_all(id);
    for (const auto& id : satisfy_) add_all(id);
    for (size_t i = 0; i < extra_ids_.size(); ++i)
      instances_.push_back({&extra_ids_[i], extra_asg_[i]});
  }

  // Stack entries: >= 0 value, -1 deep unknown, <= -2 pending single cell
  // (encoded as -2 - cell).
  int eval_partial(const std::vector<int>& prog,
                   const std::array<std::int8_t, 4>& asg) const {
    int stack[64];
    int sp = 0;
    for (int instr : prog) {
      if (instr >= 0) {
        stack[sp++] = asg[instr];
        continue;
      }
      int r = stack[--sp];
      int l = stack[--sp];
      if (l < 0 || r < 0) {
        stack[sp++] = -1;
        continue;
      }
      int cell = (instr == -1 ? 0 : n_ * n_) + l * n_ + r;
      int v = cells_[cell];
      stack[sp++] = v >= 0 ? v : -2 - cell;
    }
    return stack[0];
  }

  bool assign(int cell, int v) {
    int cur = cells_[cell];
    if (cur >= 0) return cur == v;
    if (!(domain_[cell] & (1u << v))) return false;
    cells_[cell] = static_cast<std::int8_t>(v);
    trail_.push_back(cell);
    return true;
  }

  // Returns false on conflict (or on budget exhaustion, which also sets
  // budget_hit_ so callers unwind).
  bool propagate() {
    if (++props_ % 256 == 0 && deadline_ && Clock::now() > *deadline_) {
      budget_hit_ = true;
      return false;
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& inst : instances_) {
        int l = eval_partial(inst.id->lhs_prog, inst.asg);
        int r = eval_partial(inst.id->rhs_prog, inst.asg);
        if (l >= 0 && r >= 0) {
          if (l != r) return false;
        } else if (l >= 0 && r <= -2) {
          if (!assign(-2 - r, l)) return false;
          progress = true;
        } else if (r >= 0 && l <= -2) {
          if (!assign(-2 - l, r)) return false;
          progress = true;
        } else if (l <= -2 && r <= -2 && l == r) {
          // same pending cell on both sides: trivially satisfiable
        }
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      cells_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void search() {
    if (stopped_ || budget_hit_) return;
    if (++nodes_ % 1024 == 0 && deadline_ && Clock::now() > *deadline_) {
      budget_hit_ = true;
      return;
    }
    // Most-constrained cell first (smallest domain, then lowest index);
    // domains are fixed up front, so this order is deterministic.
    int cell = -1;
    int best = 1 << 30;
    for (int c = 0; c < 2 * n_ * n_; ++c)
      if (cells_[c] < 0) {
        int width = std::popcount(domain_[c]);
        if (width < best) {
          best = width;
          cell = c;
        }
      }
    if (cell < 0) {
      emit_model();
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (!(domain_[cell] & (1u << v))) continue;
      size_t mark = trail_.size();
      if (assign(cell, v) && propagate()) search();
      undo_to(mark);
      if (stopped_ || budget_hit_) return;
    }
  }

  void emit_model() {
    std::vector<int> mt(cells_.begin(), cells_.begin() + n_ * n_);
    std::vector<int> jt(cells_.begin() + n_ * n_, cells_.end());
    Algebra a(n_, std::move(mt), std::move(jt));
    // Post-hoc re-verification through the independent identity checker.
    if (!is_skew_lattice(a))
      throw SkewError("internal: search emitted a non-skew-lattice");
    for (const auto& id : satisfy_)
      if (!holds(a, id))
        throw SkewError("internal: search emitted a constraint violation");
    if (!(*emit_)(a)) stopped_ = true;
  }

  int n_;
  std::vector<Identity> satisfy_;
  std::vector<std::int8_t> cells_;
  std::vector<std::uint16_t> domain_;
  std::vector<std::pair<int, int>> prefills_;
  std::vector<Identity> extra_ids_;
  std::vector<std::array<std::int8_t, 4>> extra_asg_;
  std::vector<Instance> instances_;
  std::vector<int> trail_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  std::uint64_t props_ = 0;
  bool stopped_ = false;
  bool budget_hit_ = false;
  const std::function<bool(const Algebra&)>* emit_ = nullptr;
};

// The chain lattice on m classes with class 0 on top: meets fall to the
// larger index, joins rise to the smaller one.
Algebra chain_lattice(int m) {
  std::vector<int> mt(m * m), jt(m * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      mt[x * m + y] = std::max(x, y);
      jt[x * m + y] = std::min(x, y);
    }
  return Algebra(m, std::move(mt), std::move(jt));
}

// Applies a quotient skeleton: elements are grouped into consecutive
// classes (one per quotient element, sizes as given), every cell is
// restricted to the class forced by the quotient lattice, and per-class
// rectangularity instances are added.
void apply_quotient_skeleton(Engine& eng, int n, const Algebra& quotient,
                             const std::vector<int>& sizes) {
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
    throw BadShape("skeleton sizes do not sum to n");
  if (static_cast<int>(sizes.size()) != quotient.size())
    throw BadShape("skeleton sizes do not match the quotient");
  std::vector<int> class_of(n);
  std::vector<std::vector<int>> classes;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> cls;
    for (int i = 0; i < s; ++i) {
      class_of[next] = static_cast<int>(classes.size());
      cls.push_back(next++);
    }
    classes.push_back(std::move(cls));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      eng.restrict_domain(Op::meet, x, y,
                          classes[quotient.meet(class_of[x], class_of[y])]);
      eng.restrict_domain(Op::join, x, y,
                          classes[quotient.join(class_of[x], class_of[y])]);
    }
  // Same-class pairs are D-related: x ^ y ^ x = x and x v y v x = x.
  const Identity& rect_meet = catalog("RECT");
  static const Identity rect_join(parse_term("x v y v x"), parse_term("x"));
  for (const auto& cls : classes)
    for (int x : cls)
      for (int y : cls)
        if (x != y) {
          eng.add_instance(rect_meet, {std::int8_t(x), std::int8_t(y), 0, 0});
          eng.add_instance(rect_join, {std::int8_t(x), std::int8_t(y), 0, 0});
        }
}

void apply_chain_skeleton(Engine& eng, int n, const std::vector<int>& sizes) {
  apply_quotient_skeleton(eng, n, chain_lattice(static_cast<int>(sizes.size())),
                          sizes);
}

enum class HandHint { right, left, none };

void apply_hand_hint(Engine& eng, const std::vector<int>& sizes,
                     HandHint hint) {
  if (hint == HandHint::none) return;
  int next = 0;
  for (int s : sizes) {
    for (int x = next; x < next + s; ++x)
      for (int y = next; y < next + s; ++y) {
        if (x == y) continue;
        if (hint == HandHint::right) {
          eng.prefill(Op::meet, x, y, y);
          eng.prefill(Op::join, x, y, x);
        } else {
          eng.prefill(Op::meet, x, y, x);
          eng.prefill(Op::join, x, y, y);
        }
      }
    next += s;
  }
}

bool passes_filters(const Algebra& a, const ModelQuery& q) {
  for (const auto& id : q.falsify)
    if (holds(a, id)) return false;
  if (q.require_noncategorical &&
      is_categorical(a).verdict != Categoricity::neither)
    return false;
  return true;
}

// Compositions of n into exactly `parts` positive parts, in
// lexicographic order.
std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int idx, int rest) {
    if (idx == parts - 1) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int s = 1; s <= rest - (parts - 1 - idx); ++s) {
      cur.push_back(s);
      rec(idx + 1, rest - s);
      cur.pop_back();
    }
  };
  rec(0, n);
  return out;
}

std::vector<std::vector<int>> chain_skeletons(int n) {
  // Compositions of n, fewer parts first, then lexicographically by sizes.
  // The single-part skeleton covers rectangular models.
  std::vector<std::vector<int>> out;
  for (int parts = 1; parts <= n; ++parts)
    for (auto& c : compositions(n, parts)) out.push_back(std::move(c));
  return out;
}

bool is_chain(const Algebra& lat) {
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y)
      if (lat.meet(x, y) != x && lat.meet(x, y) != y) return false;
  return true;
}

}  // namespace

Catalog enumerate_models(int n, const std::vector<Identity>& constraints,
                         double budget_seconds) {
  Engine eng(n, constraints);
  eng.set_deadline(budget_seconds);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<Algebra> models;
  bool exhausted = eng.run([&](const Algebra& a) {
    Algebra c = canonical_form(a);
    if (seen.insert({c.meet_table(), c.join_table()}).second)
      models.push_back(std::move(c));
    return true;
  });
  if (!exhausted) throw BudgetExceeded("enumeration budget exceeded");
  std::sort(models.begin(), models.end(),
            [](const Algebra& a, const Algebra& b) {
              return std::tuple(a.size(), a.meet_table(), a.join_table()) <
                     std::tuple(b.size(), b.meet_table(), b.join_table());
            });
  Catalog cat;
  cat.entries = std::move(models);
  return cat;
}

SearchResult find_model(const ModelQuery& q) {
  auto deadline_left = [start = Clock::now(), &q]() -> double {
    if (q.budget_seconds < 0) return -1;
    double used =
        std::chrono::duration<double>(Clock::now() - start).count();
    return q.budget_seconds - used;
  };

  std::optional<Algebra> found;
  bool any_budget_hit = false;

  auto try_one = [&](const Algebra* quotient, const std::vector<int>* skel,
                     HandHint hint) -> bool {  // true: stop iterating
    double left = deadline_left();
    if (q.budget_seconds >= 0 && left <= 0) {
      any_budget_hit = true;
      return true;
    }
    std::vector<Identity> satisfy = q.satisfy;
    if (skel && hint != HandHint::none) {
      // Flat classes under a skeleton make the model one-handed, so the
      // matching handedness identities hold on this subspace; enforcing
      // them is sound and sharpens propagation.
      if (hint == HandHint::right) {
        satisfy.push_back(catalog("S15"));
        satisfy.push_back(catalog("S16"));
      } else {
        satisfy.push_back(catalog("S17"));
        satisfy.push_back(catalog("S18"));
      }
    }
    Engine eng(q.n, satisfy);
    eng.set_deadline(left);
    if (skel) {
      apply_quotient_skeleton(eng, q.n, *quotient, *skel);
      apply_hand_hint(eng, *skel, hint);
    }
    eng.run([&](const Algebra& a) {
      if (passes_filters(a, q)) {
        found = a;
        return false;
      }
      return true;
    });
    if (eng.budget_hit()) any_budget_hit = true;
    return found.has_value() || any_budget_hit;
  };

  if (q.skeleton) {
    // Handedness hints only narrow the space; exhaustion requires the
    // unrestricted pass, so hints run first and `none` settles absence.
    Algebra chain = chain_lattice(static_cast<int>(q.skeleton->size()));
    for (HandHint h : {HandHint::right, HandHint::left, HandHint::none})
      if (try_one(&chain, &*q.skeleton, h)) break;
  } else if (q.n <= 6) {
    try_one(nullptr, nullptr, HandHint::none);
  } else {
    // Every model's quotient by Green's D is a lattice, and relabeling puts
    // its classes into consecutive blocks matching a canonical quotient, so
    // iterating all quotient lattices with all class-size compositions is
    // complete up to isomorphism. Chains go first, then non-chain quotients
    // by class count; the cache avoids re-enumerating lattices per hint.
    std::vector<Algebra> chain_lats;
    for (int m = 1; m <= q.n; ++m) chain_lats.push_back(chain_lattice(m));
    std::map<int, std::vector<Algebra>> nonchain_cache;
    auto nonchain = [&](int m) -> const std::vector<Algebra>& {
      auto it = nonchain_cache.find(m);
      if (it != nonchain_cache.end()) return it->second;
      std::vector<Algebra> lats;
      for (Algebra& lat :
           enumerate_models(m, {catalog("S7"), catalog("S8")}, deadline_left())
               .entries)
        if (!is_chain(lat)) lats.push_back(std::move(lat));
      return nonchain_cache.emplace(m, std::move(lats)).first->second;
    };
    auto skels = chain_skeletons(q.n);
    bool stop = false;
    for (HandHint h : {HandHint::right, HandHint::left, HandHint::none}) {
      for (const auto& s : skels)
        if (try_one(&chain_lats[s.size() - 1], &s, h)) {
          stop = true;
          break;
        }
      for (int m = 4; m <= q.n && !stop; ++m) {
        std::vector<Algebra> const* lats;
        try {
          lats = &nonchain(m);
        } catch (const BudgetExceeded&) {
          any_budget_hit = true;
          stop = true;
          break;
        }
        for (const Algebra& lat : *lats) {
          for (const auto& s : compositions(q.n, m))
            if (try_one(&lat, &s, h)) {
              stop = true;
              break;
            }
          if (stop) break;
        }
      }
      if (stop) break;
    }
  }

  if (found) return {SearchStatus::found, std::move(found)};
  if (any_budget_hit) return {SearchStatus::budget_exceeded, std::nullopt};
  return {SearchStatus::exhausted, std::nullopt};
}

Algebra canonical_form(const Algebra& a) {
  int n = a.size();
  if (n > 9) throw SizeLimit("canonical form supported for n <= 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_m, best_j;
  std::vector<int> mt(n * n), jt(n * n);
  do {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        mt[perm[x] * n + perm[y]] = perm[a.meet(x, y)];
        jt[perm[x] * n + perm[y]] = perm[a.join(x, y)];
      }
    if (best_m.empty() || std::tie(mt, jt) < std::tie(best_m, best_j)) {
      best_m = mt;
      best_j = jt;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Algebra(n, std::move(best_m), std::move(best_j), a.name());
}

}  // namespace skew
