#ifndef SEPBOUND_FIELD_ORACLE_HPP
#define SEPBOUND_FIELD_ORACLE_HPP

#include <optional>
#include <vector>

#include "sepbound/abelian_group.hpp"
#include "sepbound/separating.hpp"
#include "sepbound/zerosum.hpp"

namespace sepbound {

/// Diagonal action of G on F_q^k: variable i scales by chi_i(g), where the
/// characters are realized through a fixed primitive root of F_q and the
/// coordinatewise pairing. Requires exponent(G) | q-1.
struct DiagonalAction {
  long long q = 0;
  int k = 0;
  AbelianGroup group;
  std::vector<Element> chars;
  /// diag[g][i] = chi_i(g) as an element of F_q, indexed by group element index.
  std::vector<std::vector<long long>> diag;

  long long point_count() const;
  /// Mixed-radix decode of a point index into coordinates in F_q.
  std::vector<long long> decode(long long point) const;
  long long apply(long long group_elem_index, long long point) const;
};

/// Smallest prime congruent to 1 mod m.
long long smallest_prime_1_mod(long long m);
/// Primes congruent to 1 mod m, in increasing order, skipping the first
/// `skip` of them.
long long nth_prime_1_mod(long long m, int skip);

DiagonalAction build_diagonal_action(const AbelianGroup& g, const std::vector<Element>& chars,
                                     std::optional<long long> q = std::nullopt,
                                     long long point_cap = 100000);

struct OrbitPartition {
  /// Canonical representative (minimal point index) per point.
  std::vector<long long> rep;
  long long orbit_count = 0;
};

OrbitPartition orbit_partition(const DiagonalAction& act);

struct SeparationResult {
  bool separating = false;
  /// On failure: two points in distinct orbits on which every monomial agrees.
  long long point_a = -1, point_b = -1;
  std::vector<long long> values;  // common monomial evaluations at the pair
};

/// Direct check of the separating property: every pair of points in distinct
/// orbits must be distinguished by some monomial in M. Each m in M must be
/// an invariant monomial (sum m_i chi_i = 0).
SeparationResult monomials_separate(const DiagonalAction& act,
                                    const std::vector<ZeroSumVec>& monomials);

struct CrossValidation {
  bool criterion_verdict = false;
  bool oracle_verdict = false;
  bool agree = false;
  std::vector<long long> primes_tried;
};

/// Runs the lattice criterion and the finite-field oracle side by side. A
/// single F_q can have too few points to witness non-separation, so when the
/// criterion says "not separating" but the oracle disagrees, the oracle is
/// retried with the next two admissible primes before the verdicts are
/// compared.
CrossValidation cross_validate(const AbelianGroup& g, const std::vector<Element>& chars,
                               const std::vector<ZeroSumVec>& monomials,
                               long long point_cap = 100000);

}  // namespace sepbound

#endif
