#ifndef SEPBOUND_INTEGER_LATTICE_HPP
#define SEPBOUND_INTEGER_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <vector>

#include "sepbound/abelian_group.hpp"
#include "sepbound/errors.hpp"

namespace sepbound {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Dense exact integer matrix, row-major. All arithmetic in this module is
/// arbitrary precision; intermediate entry growth in HNF/SNF is real.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMat(std::initializer_list<std::initializer_list<long long>> init);

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  IntVec row(int i) const;

  bool operator==(const IntMat&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Basis of a sublattice of Z^dim in canonical row Hermite normal form:
/// pivots positive, entries above each pivot reduced into [0, pivot), zero
/// rows removed. Two sublattices are equal iff their HNF matrices are
/// identical; that is the lattice-equality test used throughout.
struct LatticeBasis {
  IntMat mat;                    // rank x dim, HNF rows
  int dim = 0;
  int rank = 0;
  std::vector<int> pivot_cols;   // one per row, strictly increasing

  bool full_rank() const { return rank == dim; }
  /// Product of pivots; for full-rank bases this is the index in Z^dim.
  Int determinant() const;
  /// Membership via back-substitution along the pivots.
  bool contains(const IntVec& v) const;

  bool operator==(const LatticeBasis& o) const { return mat == o.mat && dim == o.dim; }
};

/// Canonical row HNF of the row span of M. The row span is unchanged and the
/// output is deterministic for fixed input.
LatticeBasis hnf(const IntMat& m);

struct SmithResult {
  std::vector<Int> diagonal;  // d_1 | d_2 | ..., nonnegative, zeros trailing
  IntMat left, right;         // unimodular, left * M * right = diag(diagonal)
};

/// Smith normal form with unimodular transforms.
SmithResult snf(const IntMat& m);

/// Full-rank basis of the kernel of Z^k -> G, e_i -> seq[i]: the lattice of
/// integer vectors m with sum m_i * seq[i] = 0 in G. Computed from the right
/// transform of the SNF of the block matrix [A | diag(n)] whose first k
/// columns hold the element coordinates. det(result) = |<seq>|.
LatticeBasis kernel_lattice(const AbelianGroup& g, const std::vector<Element>& seq);

struct IndexResult {
  bool finite = false;
  Int index = 0;  // meaningful only when finite

  bool is_one() const { return finite && index == 1; }
};

/// Index [L : span(gens)], or infinite when the span is rank-deficient.
/// Every generator must lie in L; a violation throws VectorOutsideLattice.
IndexResult sublattice_index(const std::vector<IntVec>& gens, const LatticeBasis& l);

}  // namespace sepbound

#endif
