#ifndef SEPBOUND_ZEROSUM_HPP
#define SEPBOUND_ZEROSUM_HPP

#include <map>
#include <vector>

#include "sepbound/abelian_group.hpp"
#include "sepbound/integer_lattice.hpp"

namespace sepbound {

/// Ordered sequence a_1,...,a_k of group elements (repetition allowed).
struct GSequence {
  AbelianGroup group;
  std::vector<Element> elems;

  int k() const { return static_cast<int>(elems.size()); }
  GSequence prefix(int len) const;
};

/// Exponent vector m in N_0^k with sum m_i * a_i = 0.
struct ZeroSumVec {
  std::vector<long long> m;

  long long length() const;
  std::vector<int> supp() const;

  auto operator<=>(const ZeroSumVec&) const = default;
};

/// d_i = order of a_i modulo <a_1,...,a_{i-1}>. The product of the d_i is the
/// order of the subgroup generated by the sequence.
std::vector<long long> chain_orders(const GSequence& seq);

struct NormalForm {
  std::vector<long long> coeffs;       // l_i in [0, d_i)
  std::vector<long long> chain_orders; // d_i
  long long deficit = 0;               // sum of (d_i - 1 - l_i)
};

/// Unique expression b = sum l_i * a_i with 0 <= l_i < d_i, found by
/// descending the subgroup chain from the last element. Throws NotInSpan
/// when b is outside <a_1,...,a_k>.
NormalForm normal_form(const GSequence& seq, const Element& b);

/// All m with sum m_i a_i = 0 and |m| <= bound, in lexicographic order.
/// With span_only, m is restricted to m_i < ord(a_i) plus the pure-power
/// vectors ord(a_i) e_i with ord(a_i) <= bound; this preserves the Z-span
/// since any m with m_i >= ord(a_i) splits as ord(a_i) e_i + m' with both
/// parts zero-sum and no longer than m.
std::vector<ZeroSumVec> enumerate_B(const GSequence& seq, long long bound,
                                    bool span_only = false);

struct DavenportResult {
  long long value = 0;
  /// Witness atom attaining the maximal length, as element -> multiplicity.
  std::map<std::vector<long long>, long long> witness_atom;
};

/// Davenport constant: maximal length of an atom of the zero-sum monoid over
/// all of G. Backtracking over zero-sum-free sequences with subset-sum
/// pruning; an atom of maximal length is one longer than a longest
/// zero-sum-free sequence.
DavenportResult davenport(const AbelianGroup& g, long long cap = 32);

/// The relation m = (l_1,...,l_{k-1}, d_k) where the l_i are the normal form
/// of -d_k a_k with respect to a_1,...,a_{k-1}. Always lies in B, has
/// m_k = d_k and |m| <= d*(G) + 1.
ZeroSumVec construct_relation(const GSequence& seq);

struct DecompTerm {
  long long coeff;
  ZeroSumVec vec;
};

/// Writes a kernel vector u as an integer combination of zero-sum vectors of
/// length <= bound, where bound is d*(G)+1 (always succeeds) or d*(G)
/// (succeeds unless G is cyclic or in the trailing-twos equality family).
/// Throws NotInKernel when u is not a relation, DecompositionFailed when the
/// bound-d* search is exhausted.
std::vector<DecompTerm> decompose(const GSequence& seq, const std::vector<long long>& u,
                                  long long bound);

}  // namespace sepbound

#endif
