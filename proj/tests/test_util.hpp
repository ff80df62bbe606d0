#ifndef SEPBOUND_TEST_UTIL_HPP
#define SEPBOUND_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "sepbound/abelian_group.hpp"
#include "sepbound/zerosum.hpp"

namespace sepbound::test {

inline AbelianGroup G(std::initializer_list<long long> factors) {
  return AbelianGroup::make(std::vector<long long>(factors));
}

inline Element el(std::initializer_list<long long> coords) {
  return Element{std::vector<long long>(coords)};
}

inline GSequence seq_of(const AbelianGroup& g, std::initializer_list<std::initializer_list<long long>> elems) {
  GSequence s;
  s.group = g;
  for (const auto& e : elems) s.elems.push_back(g.reduce(std::vector<long long>(e)));
  return s;
}

inline Element random_element(const AbelianGroup& g, std::mt19937& rng) {
  std::uniform_int_distribution<long long> dist(0, g.order() - 1);
  return g.element_at(dist(rng));
}

inline GSequence random_sequence(const AbelianGroup& g, int k, std::mt19937& rng) {
  GSequence s;
  s.group = g;
  for (int i = 0; i < k; ++i) s.elems.push_back(random_element(g, rng));
  return s;
}

/// Invariant-factor chains of all groups with order in [2, max_order] and
/// rank at most max_rank.
inline std::vector<std::vector<long long>> small_groups(long long max_order, int max_rank) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> chain;
  auto rec = [&](auto&& self, long long order_left, long long max_factor) -> void {
    if (!chain.empty()) out.push_back(chain);
    if (static_cast<int>(chain.size()) == max_rank) return;
    for (long long n = 2; n <= max_factor && n <= order_left; ++n) {
      if (!chain.empty() && chain.back() % n != 0) continue;
      chain.push_back(n);
      self(self, order_left / n, n);
      chain.pop_back();
    }
  };
  rec(rec, max_order, max_order);
  return out;
}

}  // namespace sepbound::test

#endif
