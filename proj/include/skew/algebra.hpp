#ifndef SKEW_ALGEBRA_HPP
#define SKEW_ALGEBRA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skew {

enum class Op { meet, join };

enum class DualKind { horizontal, vertical, double_dual };

struct SkewError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadShape : SkewError {
  using SkewError::SkewError;
};

struct OutOfRangeEntry : SkewError {
  OutOfRangeEntry(Op op, int row, int col, int value);
  Op op;
  int row, col, value;
};

struct IndexOutOfRange : SkewError {
  using SkewError::SkewError;
};

struct NotASkewLattice : SkewError {
  using SkewError::SkewError;
};

// A finite algebra with two binary operations given by tables. No law is
// assumed at construction; laws are checked by the identities module.
class Algebra {
 public:
  Algebra(int n, std::vector<int> meet, std::vector<int> join,
          std::string name = "");

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int meet(int x, int y) const { return meet_[x * n_ + y]; }
  int join(int x, int y) const { return join_[x * n_ + y]; }

  int apply(Op op, int x, int y) const;

  const std::vector<int>& meet_table() const { return meet_; }
  const std::vector<int>& join_table() const { return join_; }

  bool operator==(const Algebra& other) const {
    return n_ == other.n_ && meet_ == other.meet_ && join_ == other.join_;
  }

 private:
  int n_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::string name_;
};

struct Morphism {
  Algebra source;
  Algebra target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

// First violating pair, in lexicographic (x, y) order, when not a
// homomorphism.
struct HomVerdict {
  bool ok;
  Op op;
  int x, y;
};

Algebra dualize(const Algebra& a, DualKind kind);

HomVerdict is_homomorphism(const std::vector<int>& map, const Algebra& a,
                           const Algebra& b);

// Witness bijection preserving both operations, or absent.
std::optional<std::vector<int>> are_isomorphic(const Algebra& a,
                                               const Algebra& b);

std::vector<int> subalgebra_closure(const Algebra& a,
                                    const std::vector<int>& seed);

// Algebra induced on a subset closed under both operations.
// Elements are renumbered in increasing carrier order.
Algebra subalgebra(const Algebra& a, const std::vector<int>& elements);

// Direct product with lexicographic (x, y) element indexing.
Algebra direct_product(const Algebra& a, const Algebra& b);

}  // namespace skew

#endif
