#include "sepbound/integer_lattice.hpp"

#include <algorithm>
#include <utility>

namespace sepbound {

namespace {

// Floor division with positive divisor.
Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

}  // namespace

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
  a_.resize(static_cast<size_t>(rows_) * cols_);
  int i = 0;
  for (const auto& row : init) {
    int j = 0;
    for (long long v : row) at(i, j++) = v;
    ++i;
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, int cols) {
  IntMat m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
  }
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec r(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
  return r;
}

Int LatticeBasis::determinant() const {
  Int d = 1;
  for (int i = 0; i < rank; ++i) d *= mat.at(i, pivot_cols[static_cast<size_t>(i)]);
  return d;
}

bool LatticeBasis::contains(const IntVec& v) const {
  IntVec w = v;
  for (int i = 0; i < rank; ++i) {
    int p = pivot_cols[static_cast<size_t>(i)];
    const Int& pivot = mat.at(i, p);
    if (w[static_cast<size_t>(p)] % pivot != 0) return false;
    Int q = w[static_cast<size_t>(p)] / pivot;
    if (q != 0) {
      for (int j = 0; j < dim; ++j) w[static_cast<size_t>(j)] -= q * mat.at(i, j);
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

LatticeBasis hnf(const IntMat& m) {
  int nrows = m.rows(), ncols = m.cols();
  std::vector<IntVec> rows;
  rows.reserve(static_cast<size_t>(nrows));
  for (int i = 0; i < nrows; ++i) rows.push_back(m.row(i));

  int r = 0;  // next pivot row
  std::vector<int> pivots;
  for (int col = 0; col < ncols && r < static_cast<int>(rows.size()); ++col) {
    // Gcd-eliminate below position r in this column.
    while (true) {
      int best = -1;
      for (int i = r; i < static_cast<int>(rows.size()); ++i) {
        const Int& v = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
        if (v == 0) continue;
        if (best < 0 || abs(v) < abs(rows[static_cast<size_t>(best)][static_cast<size_t>(col)])) {
          best = i;
        }
      }
      if (best < 0) break;
      std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(best)]);
      bool reduced_all = true;
      const Int pivot = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
      for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
        Int& v = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
        if (v == 0) continue;
        Int q = v / pivot;  // truncated; leaves |remainder| < |pivot|
        if (q != 0) {
          for (int j = 0; j < ncols; ++j) {
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                q * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
          }
        }
        if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
    if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] < 0) {
      for (int j = 0; j < ncols; ++j) {
        rows[static_cast<size_t>(r)][static_cast<size_t>(j)] = -rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
      }
    }
    // Reduce the entries above the pivot into [0, pivot).
    const Int& pivot = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
    for (int i = 0; i < r; ++i) {
      Int q = floordiv(rows[static_cast<size_t>(i)][static_cast<size_t>(col)], pivot);
      if (q != 0) {
        for (int j = 0; j < ncols; ++j) {
          rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              q * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
      }
    }
    pivots.push_back(col);
    ++r;
  }

  LatticeBasis b;
  b.dim = ncols;
  b.rank = r;
  b.pivot_cols = std::move(pivots);
  b.mat = IntMat(r, ncols);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < ncols; ++j) b.mat.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return b;
}

SmithResult snf(const IntMat& m) {
  int nr = m.rows(), nc = m.cols();
  IntMat a = m;
  IntMat left = IntMat::identity(nr);
  IntMat right = IntMat::identity(nc);

  auto row_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < nc; ++j) a.at(dst, j) -= q * a.at(src, j);
    for (int j = 0; j < nr; ++j) left.at(dst, j) -= q * left.at(src, j);
  };
  auto col_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < nr; ++i) a.at(i, dst) -= q * a.at(i, src);
    for (int i = 0; i < nc; ++i) right.at(i, dst) -= q * right.at(i, src);
  };
  auto row_swap = [&](int i1, int i2) {
    if (i1 == i2) return;
    for (int j = 0; j < nc; ++j) std::swap(a.at(i1, j), a.at(i2, j));
    for (int j = 0; j < nr; ++j) std::swap(left.at(i1, j), left.at(i2, j));
  };
  auto col_swap = [&](int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < nr; ++i) std::swap(a.at(i, j1), a.at(i, j2));
    for (int i = 0; i < nc; ++i) std::swap(right.at(i, j1), right.at(i, j2));
  };
  auto row_negate = [&](int i) {
    for (int j = 0; j < nc; ++j) a.at(i, j) = -a.at(i, j);
    for (int j = 0; j < nr; ++j) left.at(i, j) = -left.at(i, j);
  };

  int t = 0;
  while (t < nr && t < nc) {
    // Move a minimal-magnitude nonzero entry of the trailing block to (t,t).
    int pi = -1, pj = -1;
    for (int i = t; i < nr; ++i) {
      for (int j = t; j < nc; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    while (true) {
      bool clean = true;
      for (int i = t + 1; i < nr; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        row_sub(i, t, q);
        if (a.at(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < nc; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        col_sub(j, t, q);
        if (a.at(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Force the corner to divide every remaining entry.
      bool divides_all = true;
      for (int i = t + 1; i < nr && divides_all; ++i) {
        for (int j = t + 1; j < nc; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_sub(t, i, Int(-1));  // fold row i into row t, then re-eliminate
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (a.at(t, t) < 0) row_negate(t);
    ++t;
  }

  SmithResult res;
  res.diagonal.resize(static_cast<size_t>(std::min(nr, nc)));
  for (int i = 0; i < std::min(nr, nc); ++i) res.diagonal[static_cast<size_t>(i)] = a.at(i, i);
  res.left = std::move(left);
  res.right = std::move(right);
  return res;
}

LatticeBasis kernel_lattice(const AbelianGroup& g, const std::vector<Element>& seq) {
  int k = static_cast<int>(seq.size());
  for (const Element& e : seq) g.require(e);
  int r = g.rank();
  if (r == 0) {
    // Trivial group: every integer vector is a relation.
    return hnf(IntMat::identity(k));
  }
  IntMat block(r, k + r);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < r; ++i) block.at(i, j) = seq[static_cast<size_t>(j)].coords[static_cast<size_t>(i)];
  }
  for (int i = 0; i < r; ++i) block.at(i, k + i) = g.factors()[static_cast<size_t>(i)];
  SmithResult s = snf(block);
  // block has full row rank r (the diagonal part), so its integer kernel is
  // spanned by the last k columns of the right transform.
  int nullity = k;
  std::vector<IntVec> rows;
  rows.reserve(static_cast<size_t>(nullity));
  for (int c = k + r - nullity; c < k + r; ++c) {
    IntVec v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = s.right.at(i, c);
    rows.push_back(std::move(v));
  }
  LatticeBasis b = hnf(IntMat::from_rows(rows, k));
  if (b.rank != k) {
    throw InternalError("kernel lattice is not full rank");
  }
  return b;
}

IndexResult sublattice_index(const std::vector<IntVec>& gens, const LatticeBasis& l) {
  for (const IntVec& v : gens) {
    if (static_cast<int>(v.size()) != l.dim || !l.contains(v)) {
      throw VectorOutsideLattice("generator vector lies outside the target lattice");
    }
  }
  LatticeBasis h = hnf(IntMat::from_rows(gens, l.dim));
  if (h.rank < l.rank) return IndexResult{false, 0};
  IndexResult res;
  res.finite = true;
  Int dh = h.determinant();
  Int dl = l.determinant();
  if (dh % dl != 0) throw InternalError("sublattice determinant is not a multiple");
  res.index = dh / dl;
  return res;
}

}  // namespace sepbound
