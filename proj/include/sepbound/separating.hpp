#ifndef SEPBOUND_SEPARATING_HPP
#define SEPBOUND_SEPARATING_HPP

#include <map>
#include <optional>
#include <vector>

#include "sepbound/abelian_group.hpp"
#include "sepbound/integer_lattice.hpp"
#include "sepbound/zerosum.hpp"

namespace sepbound {

// Characters of G are identified with group elements once and for all via
// the coordinatewise standard pairing, so a character sequence is just a
// GSequence read multiplicatively.

enum class CheckMode { Full, Helly };

struct SeparatingVerdict {
  bool separating = false;
  /// On failure: the subset J (0-based indices into the character sequence)
  /// and a kernel-lattice vector of the subsequence not in the Z-span of M_J.
  std::vector<int> witness_subset;
  IntVec witness_vector;  // in the coordinates of J
};

/// Generation test behind the monomial separating criterion: for each subset
/// J of coordinates, the kernel lattice of the subsequence must be generated
/// by the monomials supported inside J. Full mode checks all subsets, Helly
/// mode only those with |J| <= kappa(G); the two always agree.
SeparatingVerdict check_separating_monomials(const AbelianGroup& g,
                                             const std::vector<Element>& chars,
                                             const std::vector<ZeroSumVec>& monomials,
                                             CheckMode mode = CheckMode::Full);

/// Minimal d such that the kernel lattice of the subset is generated by its
/// zero-sum vectors of length <= d. Hard cap d*(G)+1; exceeding it throws
/// BoundExceeded and signals a bug.
long long min_separating_bound_for_subset(const AbelianGroup& g,
                                          const std::vector<Element>& subset);

struct BetaSepOptions {
  long long max_order = 32;
  int max_rank = 4;
  int workers = 1;
  bool aut_reduction = false;
  bool record_per_subset = false;
};

struct BetaSepResult {
  long long value = 0;
  std::vector<Element> witness_subset;
  /// Subset (as sorted element index list) -> minimal d. Only filled when
  /// record_per_subset is set.
  std::map<std::vector<long long>, long long> per_subset_min_bound;
};

/// beta_sep(G): maximum of min_separating_bound_for_subset over all nonempty
/// subsets of G \ {0} of size <= kappa(G). The zero element never increases
/// the bound, so it is excluded from the enumeration. Deterministic for any
/// worker count.
BetaSepResult beta_sep(const AbelianGroup& g, const BetaSepOptions& opts = {});

/// The extremal length-(r+1) sequence witnessing beta_sep = d*+1 for groups
/// of shape C_{n_1}+...+C_{n_s}+C_2+...+C_2 with r = 2s-1 or r = 2s.
/// Throws WrongShape for cyclic groups or groups outside the family.
GSequence extremal_sequence(const AbelianGroup& g);

/// True iff beta_sep(G) = d*(G)+1: G cyclic, or at least floor(r/2) trailing
/// invariant factors equal to 2.
bool equality_case(const AbelianGroup& g);

struct DstarIneqResult {
  bool holds = false;
  bool equality = false;
  /// When equality holds: the j with m_1=n_1,...,m_j=n_j and m_{j+i}=n_{j+i+1}
  /// for the rest (n_{r+1}=1). j = 0 means the whole m-tuple is shifted.
  std::optional<int> shape_index;
};

/// Evaluates sum(n_i-1) >= sum(m_i-1) + prod(n_i/m_i) - 1 exactly, given the
/// divisibility conditions m_i | n_i and n_{i+1} | m_i.
DstarIneqResult dstar_inequality(const std::vector<long long>& n,
                                 const std::vector<long long>& m);

struct StrictnessReport {
  long long beta_sep = 0;
  long long davenport = 0;
  long long dstar = 0;
  bool strict = false;  // beta_sep < davenport
};

StrictnessReport strictness_report(const AbelianGroup& g, const BetaSepOptions& opts = {},
                                   long long davenport_cap = 32);

/// All automorphisms of g, each as the image table over element indices.
/// Brute force over generator images; intended for small groups only.
std::vector<std::vector<long long>> automorphisms(const AbelianGroup& g);

}  // namespace sepbound

#endif
