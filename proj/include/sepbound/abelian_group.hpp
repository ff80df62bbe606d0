#ifndef SEPBOUND_ABELIAN_GROUP_HPP
#define SEPBOUND_ABELIAN_GROUP_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "sepbound/errors.hpp"

namespace sepbound {

/// Element of a finite abelian group, stored as a coordinate vector reduced
/// modulo the respective invariant factors.
struct Element {
  std::vector<long long> coords;

  auto operator<=>(const Element&) const = default;
};

/// Finite abelian group C_{n_1} + ... + C_{n_r} with n_{i+1} | n_i and every
/// n_i >= 2. The empty factor list is the trivial group. Immutable after
/// construction.
class AbelianGroup {
 public:
  /// Builds a group from a factor list. In strict mode (normalize=false) the
  /// list must already be an invariant-factor chain; otherwise it is brought
  /// to invariant-factor form via the Smith normal form of the diagonal
  /// relation matrix, so primary decompositions like (2,4) are accepted.
  static AbelianGroup make(std::vector<long long> factors, bool normalize = false);

  AbelianGroup() = default;  // trivial group

  const std::vector<long long>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  long long exponent() const { return factors_.empty() ? 1 : factors_.front(); }
  long long order() const { return order_; }
  /// d*(G) = sum of (n_i - 1).
  long long dstar() const;
  /// Helly dimension: rank + 1 for nontrivial groups, 1 for the trivial group.
  int kappa() const { return rank() + 1 > 1 ? rank() + 1 : 1; }

  bool trivial() const { return factors_.empty(); }

  Element zero() const { return Element{std::vector<long long>(factors_.size(), 0)}; }
  /// i-th standard generator (order n_i).
  Element generator(int i) const;

  bool contains(const Element& g) const;
  void require(const Element& g) const;  // throws ElementNotInGroup

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(long long c, const Element& a) const;
  /// Reduces an arbitrary integer coordinate vector into the group.
  Element reduce(std::vector<long long> coords) const;

  long long element_order(const Element& g) const;

  /// Mixed-radix index in [0, order); inverse of element_at.
  long long index_of(const Element& g) const;
  Element element_at(long long idx) const;
  /// All elements in index order.
  std::vector<Element> elements() const;

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

 private:
  std::vector<long long> factors_;
  long long order_ = 1;
};

struct GroupStats {
  int rank;
  long long exponent;
  long long order;
  long long dstar;
  int kappa;
};

GroupStats group_stats(const AbelianGroup& g);

/// Subgroup materialized as a member set (element indices into the ambient
/// group) plus the generators it was built from.
class Subgroup {
 public:
  static Subgroup from_members(const AbelianGroup& g, std::vector<Element> members);

  long long size() const { return static_cast<long long>(members_.size()); }
  bool contains_index(long long idx) const { return mask_[static_cast<size_t>(idx)] != 0; }
  bool contains(const AbelianGroup& g, const Element& e) const;
  const std::vector<long long>& member_indices() const { return members_; }
  std::vector<Element> members(const AbelianGroup& g) const;
  const std::vector<Element>& generators() const { return gens_; }

  /// Verifies closure under addition; throws NotASubgroup on failure.
  void validate(const AbelianGroup& g) const;

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

 private:
  friend Subgroup subgroup_closure(const AbelianGroup&, const std::vector<Element>&);
  friend std::vector<Subgroup> all_subgroups(const AbelianGroup&, long long);

  std::vector<long long> members_;    // sorted element indices
  std::vector<std::uint8_t> mask_;    // indexed by element index
  std::vector<Element> gens_;
};

/// Smallest subgroup containing gens, materialized by breadth-first closure.
Subgroup subgroup_closure(const AbelianGroup& g, const std::vector<Element>& gens);

/// Smallest d >= 1 with d*g in h; equals 1 iff g in h.
long long order_mod_subgroup(const AbelianGroup& g, const Element& elem, const Subgroup& h);

/// Every subgroup of g exactly once, deduped by member set. Deterministic
/// order: by size, then by member index list.
std::vector<Subgroup> all_subgroups(const AbelianGroup& g, long long cap = 64);

/// Invariant factors of the quotient G/K, via the Smith normal form of the
/// relation matrix [diag(n); lifts of K's generators].
AbelianGroup quotient_invariants(const AbelianGroup& g, const Subgroup& k);

/// Invariant factors of the subgroup H itself (as an abstract group).
AbelianGroup subgroup_invariants(const AbelianGroup& g, const Subgroup& h);

}  // namespace sepbound

#endif
