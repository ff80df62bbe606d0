#include <doctest.h>

#include "sepbound/abelian_group.hpp"
#include "test_util.hpp"

using namespace sepbound;
using namespace sepbound::test;

TEST_CASE("make accepts invariant factor chains") {
  AbelianGroup c6 = G({6});
  CHECK(c6.rank() == 1);
  CHECK(c6.exponent() == 6);
  CHECK(c6.order() == 6);

  AbelianGroup g = G({4, 2});
  CHECK(g.rank() == 2);
  CHECK(g.order() == 8);

  CHECK(AbelianGroup::make({}).trivial());
}

TEST_CASE("make rejects broken chains in strict mode") {
  CHECK_THROWS_AS(AbelianGroup::make({2, 4}), NonDivisibleChain);
  CHECK_THROWS_AS(AbelianGroup::make({1}), NonDivisibleChain);
}

TEST_CASE("make normalizes primary decompositions") {
  CHECK(AbelianGroup::make({2, 4}, true).factors() == std::vector<long long>{4, 2});
  CHECK(AbelianGroup::make({2, 3}, true).factors() == std::vector<long long>{6});
  CHECK(AbelianGroup::make({6, 4}, true).factors() == std::vector<long long>{12, 2});
}

TEST_CASE("group_stats") {
  GroupStats s = group_stats(G({6}));
  CHECK(s.dstar == 5);
  CHECK(s.kappa == 2);

  s = group_stats(G({2, 2}));
  CHECK(s.dstar == 2);
  CHECK(s.kappa == 3);

  s = group_stats(G({4, 2}));
  CHECK(s.dstar == 4);
  CHECK(s.kappa == 3);

  s = group_stats(AbelianGroup{});
  CHECK(s.dstar == 0);
  CHECK(s.kappa == 1);
  CHECK(s.order == 1);
}

TEST_CASE("element_order") {
  AbelianGroup g = G({4, 2});
  CHECK(g.element_order(g.zero()) == 1);
  CHECK(g.element_order(el({1, 0})) == 4);
  CHECK(g.element_order(el({1, 1})) == 4);
  CHECK(g.element_order(el({2, 1})) == 2);
}

TEST_CASE("element order annihilates and no earlier multiple does") {
  for (const auto& factors : {std::vector<long long>{6}, {4, 2}, {3, 3}, {2, 2, 2}}) {
    AbelianGroup g = AbelianGroup::make(factors);
    for (const Element& e : g.elements()) {
      long long ord = g.element_order(e);
      CHECK(g.scale(ord, e) == g.zero());
      for (long long k = 1; k < ord; ++k) CHECK(g.scale(k, e) != g.zero());
    }
  }
}

TEST_CASE("subgroup_closure") {
  AbelianGroup g = G({2, 2});
  CHECK(subgroup_closure(g, {}).size() == 1);
  CHECK(subgroup_closure(g, {el({1, 0}), el({0, 1})}).size() == 4);

  AbelianGroup h = G({4, 2});
  Subgroup s = subgroup_closure(h, {el({2, 0})});
  CHECK(s.size() == 2);
  CHECK(s.contains(h, el({2, 0})));
  CHECK(s.contains(h, h.zero()));
}

TEST_CASE("closure is idempotent") {
  for (const auto& factors : {std::vector<long long>{12}, {4, 2}, {2, 2, 2}}) {
    AbelianGroup g = AbelianGroup::make(factors);
    for (const Subgroup& h : all_subgroups(g)) {
      Subgroup again = subgroup_closure(g, h.generators());
      CHECK(again.member_indices() == h.member_indices());
    }
  }
}

TEST_CASE("order_mod_subgroup") {
  AbelianGroup g = G({2, 2});
  Subgroup h = subgroup_closure(g, {el({1, 0})});
  CHECK(order_mod_subgroup(g, el({1, 0}), h) == 1);
  CHECK(order_mod_subgroup(g, el({1, 1}), h) == 2);

  AbelianGroup q = G({4, 2});
  Subgroup k = subgroup_closure(q, {el({2, 0})});
  CHECK(order_mod_subgroup(q, el({1, 0}), k) == 2);
}

TEST_CASE("order_mod_subgroup rejects non-subgroups") {
  AbelianGroup g = G({2, 2});
  Subgroup bad = Subgroup::from_members(g, {g.zero(), el({1, 0}), el({0, 1})});
  CHECK_THROWS_AS(order_mod_subgroup(g, el({1, 1}), bad), NotASubgroup);
}

TEST_CASE("all_subgroups counts") {
  CHECK(all_subgroups(G({2, 2})).size() == 5);
  CHECK(all_subgroups(G({4})).size() == 3);
  CHECK(all_subgroups(AbelianGroup{}).size() == 1);
  CHECK_THROWS_AS(all_subgroups(G({6}), 5), GroupTooLarge);
}

TEST_CASE("quotient_invariants") {
  AbelianGroup g = G({2, 2});
  CHECK(quotient_invariants(g, subgroup_closure(g, {})).factors() == g.factors());
  CHECK(quotient_invariants(g, subgroup_closure(g, {el({1, 0})})).factors() ==
        std::vector<long long>{2});

  AbelianGroup c4 = G({4});
  CHECK(quotient_invariants(c4, subgroup_closure(c4, {el({2})})).factors() ==
        std::vector<long long>{2});
}

TEST_CASE("quotient order is |G|/|K|") {
  for (const auto& factors : {std::vector<long long>{12}, {4, 2}, {6, 2}, {2, 2, 2}}) {
    AbelianGroup g = AbelianGroup::make(factors);
    for (const Subgroup& k : all_subgroups(g)) {
      CHECK(quotient_invariants(g, k).order() == g.order() / k.size());
    }
  }
}

TEST_CASE("subgroup_invariants matches subgroup order and structure") {
  AbelianGroup g = G({4, 2});
  Subgroup h = subgroup_closure(g, {el({2, 0}), el({0, 1})});
  CHECK(subgroup_invariants(g, h).factors() == std::vector<long long>{2, 2});
  for (const Subgroup& s : all_subgroups(g)) {
    CHECK(subgroup_invariants(g, s).order() == s.size());
  }
}

// d*(G) >= d*(H) + [G:H] - 1 for subgroups with cyclic quotient, and
// d*(G) >= d*(G/K) + |K| - 1 for cyclic K; the equality cases delete one
// invariant factor. Full sweep up to order 48 runs in the acceptance suite.
TEST_CASE("cyclic factor and dual subgroup inequalities, small sweep") {
  for (const auto& factors : small_groups(24, 3)) {
    AbelianGroup g = AbelianGroup::make(factors);
    for (const Subgroup& h : all_subgroups(g)) {
      AbelianGroup quot = quotient_invariants(g, h);
      AbelianGroup sub = subgroup_invariants(g, h);
      if (quot.rank() <= 1 && h.size() < g.order()) {
        long long index = g.order() / h.size();
        CHECK(g.dstar() >= sub.dstar() + index - 1);
        if (g.dstar() == sub.dstar() + index - 1 && sub.rank() > 0) {
          // H's factors arise by deleting one entry of G's factor list.
          bool deletion = false;
          for (size_t j = 0; j < factors.size(); ++j) {
            std::vector<long long> del = factors;
            del.erase(del.begin() + static_cast<long>(j));
            if (AbelianGroup::make(del, true).factors() == sub.factors()) deletion = true;
          }
          CHECK(deletion);
        }
      }
      if (h.size() > 1 && subgroup_invariants(g, h).rank() == 1) {
        CHECK(g.dstar() >= quot.dstar() + h.size() - 1);
        if (g.dstar() == quot.dstar() + h.size() - 1) {
          CHECK(quot.rank() == g.rank() - 1);
        }
      }
    }
  }
}
