#pragma once

#include <vector>

#include "fpkit/errors.hpp"

namespace fpkit {

/// A finite group given by its Cayley table. Elements are the row indices of
/// the table; the identity may sit at any index and is discovered during
/// validation.
class FiniteGroup {
 public:
  /// Checks that `table` is the Cayley table of a group: a two-sided
  /// identity exists, every element has a two-sided inverse, and the product
  /// is associative. Each check failure names a witness.
  static FiniteGroup validate(const std::vector<std::vector<int>>& table);

  static FiniteGroup cyclic(int n);

  /// S_n with elements the permutations of {0..n-1} in lexicographic order
  /// of one-line notation; index 0 is the identity. (x*y)(k) = x(y(k)).
  static FiniteGroup symmetric(int n);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[x * order_ + y]; }
  int inv(int x) const { return inverse_[x]; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major order x order
  std::vector<int> inverse_;
};

/// A subgroup as a sorted set of element indices of a parent group.
struct Subgroup {
  std::vector<int> elements;  // sorted, no duplicates

  /// Validates that `elems` contains the identity and is closed under the
  /// product and inverse. `on_fail` selects the error kind: user-supplied
  /// sets report ConfigError, internally computed sets report NotASubgroup.
  static Subgroup of(const FiniteGroup& g, std::vector<int> elems,
                     ErrorKind on_fail = ErrorKind::ConfigError);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  bool is_trivial() const { return elements.size() == 1; }
  bool is_whole(const FiniteGroup& g) const { return order() == g.order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements == b.elements;
  }
};

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

/// gSg^-1 = S for every g.
bool is_normal(const FiniteGroup& g, const Subgroup& s);

/// G/N for normal N. Blocks are the cosets of N, numbered by their minimal
/// element; `section` picks one parent element per block, the minimal one,
/// except that the identity block maps to the parent identity (so lifting
/// the trivial quotient word gives the empty word).
struct QuotientGroup {
  FiniteGroup group;                     // Cayley table on blocks
  std::vector<int> block_of;             // parent element -> block
  std::vector<std::vector<int>> blocks;  // block -> sorted parent elements
  std::vector<int> section;              // block -> chosen parent element
  int identity_block = 0;
};

QuotientGroup build_quotient(const FiniteGroup& g, const Subgroup& n);

}  // namespace fpkit
