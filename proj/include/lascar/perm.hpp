#ifndef LASCAR_PERM_HPP_
#define LASCAR_PERM_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace lascar {

/// Permutation of {0..n-1} as an image table.
using Perm = std::vector<uint16_t>;

Perm perm_identity(int n);
/// (a * b)(x) = a(b(x)): apply b first.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool is_permutation(const Perm& a);

/// A finite permutation group held as its full, sorted element list.
/// Intended for desk-scale groups (order members in the low thousands).
class PermGroup {
public:
  PermGroup() = default;
  /// Generate from `gens` by product closure; throws std::length_error past `cap`.
  static PermGroup closure(int degree, const std::vector<Perm>& gens, size_t cap = 2000000);
  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup from_elements(int degree, std::vector<Perm> elems);

  int degree() const { return degree_; }
  size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  /// Normality of *this inside `other`; requires containment.
  bool is_normal_in(const PermGroup& other) const;
  bool operator==(const PermGroup& o) const {
    return degree_ == o.degree_ && elems_ == o.elems_;
  }

  /// A small generating set (greedy sifting over the element list).
  std::vector<Perm> minimal_generators() const;

  /// All subgroups, found by one-element extensions from the trivial group,
  /// deduplicated by sorted element lists. Throws past `max_order`.
  std::vector<PermGroup> all_subgroups(size_t max_order = 5040) const;

private:
  int degree_ = 0;
  std::vector<Perm> elems_;  // sorted
};

/// Finite group given by its multiplication table (indices 0..n-1, 0 = id).
struct GroupTable {
  int n = 0;
  std::vector<int> mul;  // n*n, mul[i*n+j] = i*j

  int at(int i, int j) const { return mul[i * n + j]; }
  static GroupTable from_perm_group(const PermGroup& g);
};

/// Quotient table of g by a normal subgroup n (coset multiplication, cosets
/// keyed by their minimal element for determinism).
GroupTable quotient_table(const PermGroup& g, const PermGroup& n);

/// Multiplication-table isomorphism test by backtracking; practical for n <= 24.
bool tables_isomorphic(const GroupTable& a, const GroupTable& b);

}  // namespace lascar

#endif  // LASCAR_PERM_HPP_
