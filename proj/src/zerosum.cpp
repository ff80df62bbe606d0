#include "sepbound/zerosum.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace sepbound {

namespace {

using Mask = std::vector<std::uint8_t>;  // indexed by element index

Mask trivial_mask(const AbelianGroup& g) {
  Mask m(static_cast<size_t>(g.order()), 0);
  m[static_cast<size_t>(g.index_of(g.zero()))] = 1;
  return m;
}

// Closure of the subgroup given by `mask` together with one new element.
Mask extend_mask(const AbelianGroup& g, const Mask& mask, const Element& e) {
  Mask out = mask;
  std::vector<long long> queue;
  for (long long i = 0; i < g.order(); ++i) {
    if (out[static_cast<size_t>(i)]) queue.push_back(i);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    long long next = g.index_of(g.add(g.element_at(queue[qi]), e));
    if (!out[static_cast<size_t>(next)]) {
      out[static_cast<size_t>(next)] = 1;
      queue.push_back(next);
    }
  }
  return out;
}

long long order_mod_mask(const AbelianGroup& g, const Element& e, const Mask& mask) {
  Element cur = e;
  for (long long d = 1;; ++d) {
    if (mask[static_cast<size_t>(g.index_of(cur))]) return d;
    cur = g.add(cur, e);
  }
}

// Prefix closure masks H_0 = {0}, H_1 = <a_1>, ..., H_k, plus chain orders.
struct Chain {
  std::vector<Mask> prefix;  // size k+1
  std::vector<long long> orders;
};

Chain build_chain(const GSequence& seq) {
  Chain c;
  c.prefix.push_back(trivial_mask(seq.group));
  for (const Element& a : seq.elems) {
    seq.group.require(a);
    c.orders.push_back(order_mod_mask(seq.group, a, c.prefix.back()));
    c.prefix.push_back(extend_mask(seq.group, c.prefix.back(), a));
  }
  return c;
}

NormalForm normal_form_chain(const GSequence& seq, const Chain& chain, const Element& b) {
  const AbelianGroup& g = seq.group;
  int k = seq.k();
  if (!chain.prefix[static_cast<size_t>(k)][static_cast<size_t>(g.index_of(b))]) {
    throw NotInSpan("element is not in the span of the sequence");
  }
  NormalForm nf;
  nf.coeffs.assign(static_cast<size_t>(k), 0);
  nf.chain_orders = chain.orders;
  Element cur = b;
  for (int i = k - 1; i >= 0; --i) {
    long long di = chain.orders[static_cast<size_t>(i)];
    const Element& ai = seq.elems[static_cast<size_t>(i)];
    long long l = 0;
    Element probe = cur;
    while (!chain.prefix[static_cast<size_t>(i)][static_cast<size_t>(g.index_of(probe))]) {
      probe = g.sub(probe, ai);
      ++l;
      if (l >= di) throw InternalError("normal form descent failed");
    }
    nf.coeffs[static_cast<size_t>(i)] = l;
    cur = probe;
  }
  nf.deficit = 0;
  for (int i = 0; i < k; ++i) {
    nf.deficit += nf.chain_orders[static_cast<size_t>(i)] - 1 - nf.coeffs[static_cast<size_t>(i)];
  }
  return nf;
}

}  // namespace

GSequence GSequence::prefix(int len) const {
  return GSequence{group, std::vector<Element>(elems.begin(), elems.begin() + len)};
}

long long ZeroSumVec::length() const { return std::accumulate(m.begin(), m.end(), 0LL); }

std::vector<int> ZeroSumVec::supp() const {
  std::vector<int> s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

std::vector<long long> chain_orders(const GSequence& seq) { return build_chain(seq).orders; }

NormalForm normal_form(const GSequence& seq, const Element& b) {
  seq.group.require(b);
  Chain chain = build_chain(seq);
  return normal_form_chain(seq, chain, b);
}

std::vector<ZeroSumVec> enumerate_B(const GSequence& seq, long long bound, bool span_only) {
  const AbelianGroup& g = seq.group;
  int k = seq.k();
  std::vector<long long> orders(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    g.require(seq.elems[static_cast<size_t>(i)]);
    orders[static_cast<size_t>(i)] = g.element_order(seq.elems[static_cast<size_t>(i)]);
  }

  std::vector<ZeroSumVec> out;
  std::vector<long long> cur(static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, int i, long long remaining, const Element& sum) -> void {
    if (i == k) {
      if (sum == g.zero()) out.push_back(ZeroSumVec{cur});
      return;
    }
    long long cap = remaining;
    if (span_only) cap = std::min(cap, orders[static_cast<size_t>(i)] - 1);
    Element partial = sum;
    for (long long mi = 0; mi <= cap; ++mi) {
      cur[static_cast<size_t>(i)] = mi;
      self(self, i + 1, remaining - mi, partial);
      partial = g.add(partial, seq.elems[static_cast<size_t>(i)]);
    }
    cur[static_cast<size_t>(i)] = 0;
  };
  rec(rec, 0, bound, g.zero());

  if (span_only) {
    for (int i = 0; i < k; ++i) {
      if (orders[static_cast<size_t>(i)] <= bound) {
        std::vector<long long> pure(static_cast<size_t>(k), 0);
        pure[static_cast<size_t>(i)] = orders[static_cast<size_t>(i)];
        out.push_back(ZeroSumVec{std::move(pure)});
      }
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

DavenportResult davenport(const AbelianGroup& g, long long cap) {
  if (g.order() > cap) {
    throw GroupTooLarge("group order " + std::to_string(g.order()) +
                        " exceeds davenport cap " + std::to_string(cap));
  }
  if (g.order() > 64) throw GroupTooLarge("davenport search limited to order <= 64");
  long long n = g.order();
  if (g.trivial()) {
    DavenportResult res;
    res.value = 1;
    res.witness_atom[{}] = 1;
    return res;
  }

  std::vector<std::vector<long long>> add(static_cast<size_t>(n),
                                          std::vector<long long>(static_cast<size_t>(n)));
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      add[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          g.index_of(g.add(g.element_at(i), g.element_at(j)));
    }
  }
  long long zero_idx = g.index_of(g.zero());

  // Longest zero-sum-free sequence by DFS in nondecreasing element index
  // order. `sums` is the set of sums of nonempty sub-multisets as a bitmask;
  // each appended element adds at least one new sum, which gives the
  // remaining-length bound used for pruning.
  long long best = 0;
  std::vector<long long> best_seq, seq;
  auto rec = [&](auto&& self, long long min_idx, std::uint64_t sums) -> void {
    long long len = static_cast<long long>(seq.size());
    if (len > best) {
      best = len;
      best_seq = seq;
    }
    if (len + (n - 1 - std::popcount(sums)) <= best) return;
    for (long long idx = min_idx; idx < n; ++idx) {
      if (idx == zero_idx) continue;
      std::uint64_t shifted = 0;
      for (long long s = 0; s < n; ++s) {
        if (sums >> s & 1) shifted |= 1ULL << add[static_cast<size_t>(s)][static_cast<size_t>(idx)];
      }
      std::uint64_t next = sums | shifted | (1ULL << idx);
      if (next >> zero_idx & 1) continue;  // a nonempty zero-sum sub-multiset
      seq.push_back(idx);
      self(self, idx, next);
      seq.pop_back();
    }
  };
  rec(rec, 0, 0);

  DavenportResult res;
  res.value = best + 1;
  Element total = g.zero();
  for (long long idx : best_seq) {
    Element e = g.element_at(idx);
    total = g.add(total, e);
    res.witness_atom[e.coords] += 1;
  }
  res.witness_atom[g.neg(total).coords] += 1;
  return res;
}

ZeroSumVec construct_relation(const GSequence& seq) {
  const AbelianGroup& g = seq.group;
  int k = seq.k();
  if (k < 1) throw Error("construct_relation requires a nonempty sequence");
  Chain chain = build_chain(seq);
  long long dk = chain.orders[static_cast<size_t>(k - 1)];
  GSequence prefix = seq.prefix(k - 1);
  Chain prefix_chain = build_chain(prefix);
  Element target = g.neg(g.scale(dk, seq.elems[static_cast<size_t>(k - 1)]));
  NormalForm nf = normal_form_chain(prefix, prefix_chain, target);
  ZeroSumVec out;
  out.m = nf.coeffs;
  out.m.push_back(dk);
  return out;
}

std::vector<DecompTerm> decompose(const GSequence& seq, const std::vector<long long>& u,
                                  long long bound) {
  const AbelianGroup& g = seq.group;
  int k = seq.k();
  if (static_cast<int>(u.size()) != k) throw NotInKernel("vector length mismatch");
  Element sum = g.zero();
  for (int i = 0; i < k; ++i) {
    sum = g.add(sum, g.scale(u[static_cast<size_t>(i)], seq.elems[static_cast<size_t>(i)]));
  }
  if (sum != g.zero()) throw NotInKernel("vector is not a relation of the sequence");

  std::vector<DecompTerm> terms;
  std::vector<long long> rem = u;

  if (bound >= g.dstar() + 1) {
    // Peel the last coordinate with the constructive relation per prefix.
    for (int j = k; j >= 1; --j) {
      if (rem[static_cast<size_t>(j - 1)] == 0) continue;
      GSequence pre = seq.prefix(j);
      ZeroSumVec m = construct_relation(pre);
      long long dj = m.m[static_cast<size_t>(j - 1)];
      if (rem[static_cast<size_t>(j - 1)] % dj != 0) {
        throw InternalError("kernel coordinate not divisible by chain order");
      }
      long long l = rem[static_cast<size_t>(j - 1)] / dj;
      ZeroSumVec padded;
      padded.m = m.m;
      padded.m.resize(static_cast<size_t>(k), 0);
      for (int i = 0; i < j; ++i) rem[static_cast<size_t>(i)] -= l * m.m[static_cast<size_t>(i)];
      terms.push_back(DecompTerm{l, std::move(padded)});
    }
    return terms;
  }

  // Bound-d* mode: peel coordinates in order, searching every choice of the
  // coordinate to eliminate before giving up. Case (a): some bounded m has
  // m_i equal to the order of a_i modulo the rest; case (b): a pair with
  // m'_i = 2 and m''_i = 3 contributes m'' - m'.
  std::vector<int> active(static_cast<size_t>(k));
  std::iota(active.begin(), active.end(), 0);
  while (!active.empty()) {
    // Free elimination of already-zero coordinates.
    bool progressed = false;
    for (size_t pos = 0; pos < active.size(); ++pos) {
      if (rem[static_cast<size_t>(active[pos])] == 0) {
        active.erase(active.begin() + static_cast<long>(pos));
        progressed = true;
        break;
      }
    }
    if (progressed) continue;

    GSequence sub;
    sub.group = g;
    for (int idx : active) sub.elems.push_back(seq.elems[static_cast<size_t>(idx)]);
    std::vector<ZeroSumVec> pool = enumerate_B(sub, bound, false);

    for (size_t pos = 0; pos < active.size() && !progressed; ++pos) {
      int idx = active[pos];
      // Order of a_idx modulo the subgroup of the other active elements.
      std::vector<Element> others;
      for (size_t q = 0; q < active.size(); ++q) {
        if (q != pos) others.push_back(seq.elems[static_cast<size_t>(active[q])]);
      }
      Subgroup h = subgroup_closure(g, others);
      long long gi = 1;
      {
        Element cur = seq.elems[static_cast<size_t>(idx)];
        while (!h.contains(g, cur)) {
          cur = g.add(cur, seq.elems[static_cast<size_t>(idx)]);
          ++gi;
        }
      }
      auto pad = [&](const ZeroSumVec& m) {
        ZeroSumVec full;
        full.m.assign(static_cast<size_t>(k), 0);
        for (size_t q = 0; q < active.size(); ++q) {
          full.m[static_cast<size_t>(active[q])] = m.m[q];
        }
        return full;
      };
      // Case (a): lexicographically least m with m_pos = gi.
      const ZeroSumVec* found = nullptr;
      for (const ZeroSumVec& m : pool) {
        if (m.m[pos] == gi) {
          found = &m;
          break;
        }
      }
      if (found != nullptr) {
        if (rem[static_cast<size_t>(idx)] % gi != 0) {
          throw InternalError("kernel coordinate not divisible by relative order");
        }
        long long l = rem[static_cast<size_t>(idx)] / gi;
        ZeroSumVec full = pad(*found);
        for (int i = 0; i < k; ++i) rem[static_cast<size_t>(i)] -= l * full.m[static_cast<size_t>(i)];
        terms.push_back(DecompTerm{l, std::move(full)});
        active.erase(active.begin() + static_cast<long>(pos));
        progressed = true;
        break;
      }
      // Case (b): needs gi = 1; the pair difference has coordinate 1 at pos.
      const ZeroSumVec* m2 = nullptr;
      const ZeroSumVec* m3 = nullptr;
      for (const ZeroSumVec& m : pool) {
        if (m2 == nullptr && m.m[pos] == 2) m2 = &m;
        if (m3 == nullptr && m.m[pos] == 3) m3 = &m;
      }
      if (m2 != nullptr && m3 != nullptr && gi == 1) {
        long long l = rem[static_cast<size_t>(idx)];
        ZeroSumVec f2 = pad(*m2), f3 = pad(*m3);
        for (int i = 0; i < k; ++i) {
          rem[static_cast<size_t>(i)] -= l * (f3.m[static_cast<size_t>(i)] - f2.m[static_cast<size_t>(i)]);
        }
        terms.push_back(DecompTerm{l, std::move(f3)});
        terms.push_back(DecompTerm{-l, std::move(f2)});
        active.erase(active.begin() + static_cast<long>(pos));
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      throw DecompositionFailed("no coordinate admits a bounded elimination at bound " +
                                std::to_string(bound));
    }
  }
  return terms;
}

}  // namespace sepbound
