#include "skew/identities.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skew/cosets.hpp"
#include "skew/green.hpp"

namespace skew {

int eval_term(const Algebra& a, const Term& t, const std::vector<int>& asg) {
  if (t.is_var()) {
    if (t.var_index() >= static_cast<int>(asg.size()))
      throw UnboundVariable("variable x" + std::to_string(t.var_index()) +
                            " is not assigned");
    return asg[t.var_index()];
  }
  int l = eval_term(a, t.left(), asg);
  int r = eval_term(a, t.right(), asg);
  return t.op() == Op::meet ? a.meet(l, r) : a.join(l, r);
}

namespace {

// Postfix evaluation; asg indexed by variable.
inline int run_prog(const Algebra& a, const std::vector<int>& prog,
                    const int* asg, int* stack) {
  int sp = 0;
  for (int instr : prog) {
    if (instr >= 0) {
      stack[sp++] = asg[instr];
    } else {
      int r = stack[--sp];
      int l = stack[--sp];
      stack[sp++] = instr == -1 ? a.meet(l, r) : a.join(l, r);
    }
  }
  return stack[0];
}

inline void decode_assignment(std::uint64_t index, int n, int k, int* asg) {
  for (int v = k - 1; v >= 0; --v) {
    asg[v] = static_cast<int>(index % n);
    index /= n;
  }
}

// Least failing assignment index within [lo, hi), or -1.
std::int64_t scan_range(const Algebra& a, const Identity& id,
                        std::uint64_t lo, std::uint64_t hi) {
  int asg[8];
  int stack[64];
  int k = id.num_vars, n = a.size();
  if (k > 0) decode_assignment(lo, n, k, asg);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (run_prog(a, id.lhs_prog, asg, stack) !=
        run_prog(a, id.rhs_prog, asg, stack))
      return static_cast<std::int64_t>(idx);
    // odometer increment, variable 0 most significant
    for (int v = k - 1; v >= 0; --v) {
      if (++asg[v] < n) break;
      asg[v] = 0;
    }
  }
  return -1;
}

IdentityVerdict verdict_from_index(const Algebra& a, const Identity& id,
                                   std::int64_t idx) {
  if (idx < 0) return {true, {}};
  std::vector<int> asg(id.num_vars);
  int buf[8];
  decode_assignment(static_cast<std::uint64_t>(idx), a.size(), id.num_vars,
                    buf);
  std::copy(buf, buf + id.num_vars, asg.begin());
  return {false, asg};
}

std::uint64_t pow_u64(int base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
  return r;
}

}  // namespace

IdentityVerdict check_identity_serial(const Algebra& a, const Identity& id) {
  if (id.num_vars > 8)
    throw SkewError("identities with more than 8 variables are unsupported");
  std::uint64_t total = pow_u64(a.size(), id.num_vars);
  return verdict_from_index(a, id, scan_range(a, id, 0, total));
}

IdentityVerdict check_identity(const Algebra& a, const Identity& id) {
  if (id.num_vars > 8)
    throw SkewError("identities with more than 8 variables are unsupported");
  std::uint64_t total = pow_u64(a.size(), id.num_vars);
#ifdef _OPENMP
  if (total >= 4096) {
    std::int64_t best = -1;
#pragma omp parallel
    {
      int workers = omp_get_num_threads();
      int me = omp_get_thread_num();
      std::uint64_t chunk = (total + workers - 1) / workers;
      std::uint64_t lo = std::min<std::uint64_t>(me * chunk, total);
      std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
      std::int64_t local = lo < hi ? scan_range(a, id, lo, hi) : -1;
#pragma omp critical
      if (local >= 0 && (best < 0 || local < best)) best = local;
    }
    return verdict_from_index(a, id, best);
  }
#endif
  return verdict_from_index(a, id, scan_range(a, id, 0, total));
}

bool holds(const Algebra& a, const Identity& id) {
  return check_identity(a, id).holds;
}

bool holds_all(const Algebra& a, const std::vector<Identity>& ids) {
  for (const auto& id : ids)
    if (!holds(a, id)) return false;
  return true;
}

bool is_skew_lattice(const Algebra& a) {
  return holds_all(a, skew_lattice_axioms());
}

void require_skew_lattice(const Algebra& a) {
  if (!is_skew_lattice(a))
    throw NotASkewLattice("algebra does not satisfy S1-S6");
}

PropertyProfile classify(const Algebra& a) {
  PropertyProfile p;
  auto all = [&](std::initializer_list<const char*> codes) {
    for (const char* c : codes)
      if (!holds(a, catalog(c))) return false;
    return true;
  };
  p.skew_lattice = all({"S1", "S2", "S3", "S4", "S5", "S6"});
  p.lattice = p.skew_lattice && all({"S7", "S8"});
  p.right_handed = p.skew_lattice && all({"S15", "S16"});
  p.left_handed = p.skew_lattice && all({"S17", "S18"});
  p.lower_symmetric = all({"S13"});
  p.upper_symmetric = all({"S14"});
  p.symmetric = p.lower_symmetric && p.upper_symmetric;
  p.middle_distributive = all({"S19", "S20"});
  p.bidistributive = all({"S21", "S22", "S23", "S24"});
  p.normal = all({"S25"});
  p.conormal = all({"S26"});
  p.regular = all({"REG_MEET", "REG_JOIN"});
  p.rectangular = p.skew_lattice && all({"RECT"});
  p.skew_star = all({"S1", "S2", "S9", "S10", "S11", "S12"});

  if (p.skew_lattice) {
    // Handedness must agree with the Green's relation route.
    bool r_is_d = green(a, GreenRel::R).blocks == green(a, GreenRel::D).blocks;
    bool l_is_d = green(a, GreenRel::L).blocks == green(a, GreenRel::D).blocks;
    if (r_is_d != p.right_handed || l_is_d != p.left_handed)
      throw SkewError("internal: handedness routes disagree");

    p.connected = components(a).blocks.size() == 1;
    Shape s = shape(a);
    p.primitive = s == Shape::primitive;
    p.skew_chain = s == Shape::skew_chain;
    p.diamond = s == Shape::diamond;
    CategoricityReport cat = is_categorical(a);
    p.strictly_categorical = cat.verdict == Categoricity::strictly_categorical;
    p.categorical = p.strictly_categorical ||
                    cat.verdict == Categoricity::categorical;
  }
  return p;
}

std::vector<int> center(const Algebra& a) {
  require_skew_lattice(a);
  int n = a.size();
  std::vector<int> z;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y)
      central = a.meet(x, y) == a.meet(y, x) && a.join(x, y) == a.join(y, x);
    if (central) z.push_back(x);
  }
  // The center is a subalgebra and the union of the singleton D-classes.
  std::vector<int> closed = subalgebra_closure(a, z);
  if (closed != z) throw SkewError("internal: center is not closed");
  Partition d = green(a, GreenRel::D);
  std::vector<int> singletons;
  for (const auto& blk : d.blocks)
    if (blk.size() == 1) singletons.push_back(blk[0]);
  if (singletons != z)
    throw SkewError("internal: center differs from singleton D-classes");
  return z;
}

}  // namespace skew
