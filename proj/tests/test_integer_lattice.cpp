#include <doctest.h>

#include <random>

#include "sepbound/integer_lattice.hpp"
#include "sepbound/zerosum.hpp"
#include "test_util.hpp"

using namespace sepbound;
using namespace sepbound::test;

TEST_CASE("hnf basics") {
  LatticeBasis id = hnf(IntMat::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.mat == IntMat::identity(2));

  LatticeBasis b = hnf(IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}});
  CHECK(b.rank == 3);
  CHECK(b.determinant() == 4);

  LatticeBasis one = hnf(IntMat{{4}});
  CHECK(one.mat == IntMat{{4}});
}

TEST_CASE("hnf is a projection and preserves the row span") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long long> dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 4);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    }
    LatticeBasis h = hnf(m);
    CHECK(hnf(h.mat).mat == h.mat);
    // Original rows are in the HNF span and vice versa.
    for (int i = 0; i < rows; ++i) CHECK(h.contains(m.row(i)));
    LatticeBasis back = hnf(m);
    for (int i = 0; i < h.rank; ++i) CHECK(back.contains(h.mat.row(i)));
  }
}

TEST_CASE("snf basics") {
  SmithResult s = snf(IntMat{{4, 0}, {0, 2}});
  CHECK(s.diagonal == std::vector<Int>{2, 4});

  s = snf(IntMat(3, 2));
  CHECK(s.diagonal == std::vector<Int>{0, 0});

  s = snf(IntMat{{2, 1}, {0, 2}});
  CHECK(s.diagonal == std::vector<Int>{1, 4});
}

namespace {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Int acc = 0;
      for (int t = 0; t < a.cols(); ++t) acc += a.at(i, t) * b.at(t, j);
      c.at(i, j) = acc;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("snf transforms reconstruct the diagonal and are unimodular") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long long> dist(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    }
    SmithResult s = snf(m);
    IntMat d = mat_mul(mat_mul(s.left, m), s.right);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        CHECK(d.at(i, j) == (i == j ? s.diagonal[static_cast<size_t>(i)] : Int(0)));
      }
    }
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i + 1] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    // Unimodular transforms have full-rank HNF with determinant 1.
    CHECK(hnf(s.left).determinant() == 1);
    CHECK(hnf(s.right).determinant() == 1);
  }
}

TEST_CASE("snf diagonal is permutation invariant") {
  IntMat m{{6, 2, 0}, {0, 4, 1}};
  IntMat perm{{0, 4, 1}, {6, 2, 0}};  // swapped rows
  CHECK(snf(m).diagonal == snf(perm).diagonal);
  IntMat colperm{{2, 6, 0}, {4, 0, 1}};  // swapped first two columns
  CHECK(snf(m).diagonal == snf(colperm).diagonal);
}

TEST_CASE("kernel_lattice examples") {
  AbelianGroup c2 = G({2});
  LatticeBasis k1 = kernel_lattice(c2, {el({1})});
  CHECK(k1.mat == IntMat{{2}});

  LatticeBasis k2 = kernel_lattice(c2, {el({1}), el({1})});
  CHECK(k2.mat == IntMat{{1, 1}, {0, 2}});
  CHECK(k2.determinant() == 2);

  AbelianGroup v4 = G({2, 2});
  LatticeBasis k3 = kernel_lattice(v4, {el({1, 0}), el({1, 1}), el({0, 1})});
  CHECK(k3.determinant() == 4);

  CHECK_THROWS_AS(kernel_lattice(c2, {el({5})}), ElementNotInGroup);
}

TEST_CASE("kernel determinant equals subgroup order") {
  std::mt19937 rng(4321);
  for (const auto& factors : small_groups(16, 3)) {
    AbelianGroup g = AbelianGroup::make(factors);
    for (int trial = 0; trial < 10; ++trial) {
      int k = 1 + static_cast<int>(rng() % 4);
      GSequence s = random_sequence(g, k, rng);
      LatticeBasis ker = kernel_lattice(g, s.elems);
      CHECK(ker.determinant() == subgroup_closure(g, s.elems).size());
    }
  }
}

TEST_CASE("sublattice_index") {
  AbelianGroup v4 = G({2, 2});
  LatticeBasis l = kernel_lattice(v4, {el({1, 0}), el({1, 1}), el({0, 1})});

  std::vector<IntVec> basis_rows;
  for (int i = 0; i < l.rank; ++i) basis_rows.push_back(l.mat.row(i));
  CHECK(sublattice_index(basis_rows, l).is_one());

  std::vector<IntVec> squares{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  IndexResult r = sublattice_index(squares, l);
  CHECK(r.finite);
  CHECK(r.index == 2);

  squares.push_back({1, 1, 1});
  CHECK(sublattice_index(squares, l).is_one());

  CHECK_FALSE(sublattice_index({{2, 0, 0}}, l).finite);
  CHECK_THROWS_AS(sublattice_index({{1, 0, 0}}, l), VectorOutsideLattice);
}

TEST_CASE("enumerated zero-sum vectors always lie in the kernel lattice") {
  std::mt19937 rng(99);
  for (const auto& factors : small_groups(12, 2)) {
    AbelianGroup g = AbelianGroup::make(factors);
    for (int trial = 0; trial < 5; ++trial) {
      GSequence s = random_sequence(g, 3, rng);
      LatticeBasis ker = kernel_lattice(g, s.elems);
      for (const ZeroSumVec& m : enumerate_B(s, g.dstar() + 1)) {
        IntVec v(m.m.begin(), m.m.end());
        CHECK(ker.contains(v));
      }
    }
  }
}
