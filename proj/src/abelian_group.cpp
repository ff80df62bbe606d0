#include "sepbound/abelian_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "sepbound/integer_lattice.hpp"

namespace sepbound {

namespace {

std::string factors_to_string(const std::vector<long long>& f) {
  std::string s = "(";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + ")";
}

}  // namespace

AbelianGroup AbelianGroup::make(std::vector<long long> factors, bool normalize) {
  for (long long n : factors) {
    if (n < 2) throw NonDivisibleChain("factor " + std::to_string(n) + " is < 2");
  }
  if (normalize && !factors.empty()) {
    // Invariant factors of the direct sum via SNF of the diagonal matrix.
    int t = static_cast<int>(factors.size());
    IntMat d(t, t);
    for (int i = 0; i < t; ++i) d.at(i, i) = factors[i];
    SmithResult s = snf(d);
    std::vector<long long> norm;
    for (const Int& v : s.diagonal) {
      if (v > 1) norm.push_back(static_cast<long long>(v));
    }
    std::reverse(norm.begin(), norm.end());  // decreasing, n_{i+1} | n_i
    factors = std::move(norm);
  } else {
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      if (factors[i] % factors[i + 1] != 0) {
        throw NonDivisibleChain("factors " + factors_to_string(factors) +
                                " violate the divisibility chain");
      }
    }
  }
  AbelianGroup g;
  g.factors_ = std::move(factors);
  g.order_ = 1;
  for (long long n : g.factors_) g.order_ *= n;
  return g;
}

long long AbelianGroup::dstar() const {
  long long d = 0;
  for (long long n : factors_) d += n - 1;
  return d;
}

Element AbelianGroup::generator(int i) const {
  Element e = zero();
  e.coords[static_cast<size_t>(i)] = 1;
  return e;
}

bool AbelianGroup::contains(const Element& g) const {
  if (g.coords.size() != factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) return false;
  }
  return true;
}

void AbelianGroup::require(const Element& g) const {
  if (!contains(g)) throw ElementNotInGroup("element does not belong to the group");
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element r = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  }
  return r;
}

Element AbelianGroup::neg(const Element& a) const {
  Element r = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = a.coords[i] == 0 ? 0 : factors_[i] - a.coords[i];
  }
  return r;
}

Element AbelianGroup::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element AbelianGroup::scale(long long c, const Element& a) const {
  Element r = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    long long v = (c % factors_[i]) * a.coords[i] % factors_[i];
    if (v < 0) v += factors_[i];
    r.coords[i] = v;
  }
  return r;
}

Element AbelianGroup::reduce(std::vector<long long> coords) const {
  Element r = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    long long v = coords[i] % factors_[i];
    if (v < 0) v += factors_[i];
    r.coords[i] = v;
  }
  return r;
}

long long AbelianGroup::element_order(const Element& g) const {
  long long ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    long long ci = factors_[i] / std::gcd(factors_[i], g.coords[i]);
    ord = std::lcm(ord, ci);
  }
  return ord;
}

long long AbelianGroup::index_of(const Element& g) const {
  long long idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + g.coords[i];
  return idx;
}

Element AbelianGroup::element_at(long long idx) const {
  Element e = zero();
  for (size_t i = factors_.size(); i-- > 0;) {
    e.coords[i] = idx % factors_[i];
    idx /= factors_[i];
  }
  return e;
}

std::vector<Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(order_));
  for (long long i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

GroupStats group_stats(const AbelianGroup& g) {
  return GroupStats{g.rank(), g.exponent(), g.order(), g.dstar(), g.kappa()};
}

Subgroup Subgroup::from_members(const AbelianGroup& g, std::vector<Element> members) {
  Subgroup h;
  h.mask_.assign(static_cast<size_t>(g.order()), 0);
  for (const Element& e : members) {
    g.require(e);
    long long idx = g.index_of(e);
    if (!h.mask_[static_cast<size_t>(idx)]) {
      h.mask_[static_cast<size_t>(idx)] = 1;
      h.members_.push_back(idx);
    }
  }
  std::sort(h.members_.begin(), h.members_.end());
  h.gens_ = std::move(members);
  return h;
}

bool Subgroup::contains(const AbelianGroup& g, const Element& e) const {
  return contains_index(g.index_of(e));
}

std::vector<Element> Subgroup::members(const AbelianGroup& g) const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (long long idx : members_) out.push_back(g.element_at(idx));
  return out;
}

void Subgroup::validate(const AbelianGroup& g) const {
  if (members_.empty() || !contains_index(g.index_of(g.zero()))) {
    throw NotASubgroup("member set does not contain zero");
  }
  for (long long i : members_) {
    for (long long j : members_) {
      Element s = g.add(g.element_at(i), g.element_at(j));
      if (!contains(g, s)) throw NotASubgroup("member set not closed under addition");
    }
  }
}

Subgroup subgroup_closure(const AbelianGroup& g, const std::vector<Element>& gens) {
  for (const Element& e : gens) g.require(e);
  Subgroup h;
  h.mask_.assign(static_cast<size_t>(g.order()), 0);
  std::deque<long long> queue;
  long long zero_idx = g.index_of(g.zero());
  h.mask_[static_cast<size_t>(zero_idx)] = 1;
  h.members_.push_back(zero_idx);
  queue.push_back(zero_idx);
  while (!queue.empty()) {
    Element cur = g.element_at(queue.front());
    queue.pop_front();
    for (const Element& gen : gens) {
      long long next = g.index_of(g.add(cur, gen));
      if (!h.mask_[static_cast<size_t>(next)]) {
        h.mask_[static_cast<size_t>(next)] = 1;
        h.members_.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(h.members_.begin(), h.members_.end());
  h.gens_ = gens;
  return h;
}

long long order_mod_subgroup(const AbelianGroup& g, const Element& elem, const Subgroup& h) {
  g.require(elem);
  h.validate(g);
  Element cur = elem;
  for (long long d = 1;; ++d) {
    if (h.contains(g, cur)) return d;
    cur = g.add(cur, elem);
  }
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& g, long long cap) {
  if (g.order() > cap) {
    throw GroupTooLarge("group order " + std::to_string(g.order()) +
                        " exceeds subgroup enumeration cap " + std::to_string(cap));
  }
  // Breadth-first over the subgroup lattice: extend each known subgroup by
  // one element outside it and close. Every subgroup is reached through a
  // chain of strictly increasing subgroups.
  std::vector<Subgroup> found;
  std::vector<std::vector<long long>> seen;  // member index lists of found
  auto known = [&](const std::vector<long long>& members) {
    return std::find(seen.begin(), seen.end(), members) != seen.end();
  };
  std::deque<Subgroup> queue;
  Subgroup triv = subgroup_closure(g, {});
  seen.push_back(triv.member_indices());
  found.push_back(triv);
  queue.push_back(triv);
  std::vector<Element> elems = g.elements();
  while (!queue.empty()) {
    Subgroup h = queue.front();
    queue.pop_front();
    for (const Element& e : elems) {
      if (h.contains(g, e)) continue;
      std::vector<Element> gens = h.generators();
      gens.push_back(e);
      Subgroup bigger = subgroup_closure(g, gens);
      if (!known(bigger.member_indices())) {
        seen.push_back(bigger.member_indices());
        found.push_back(bigger);
        queue.push_back(bigger);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.member_indices() < b.member_indices();
  });
  return found;
}

AbelianGroup quotient_invariants(const AbelianGroup& g, const Subgroup& k) {
  k.validate(g);
  int r = g.rank();
  if (r == 0) return AbelianGroup{};
  // Relations of G/K in Z^r: the rows diag(n) plus coordinate lifts of K's
  // generators (fall back to all members when no generator list is present).
  std::vector<Element> lifts = k.generators();
  if (lifts.empty()) lifts = k.members(g);
  IntMat rel(r + static_cast<int>(lifts.size()), r);
  for (int i = 0; i < r; ++i) rel.at(i, i) = g.factors()[static_cast<size_t>(i)];
  for (size_t t = 0; t < lifts.size(); ++t) {
    for (int j = 0; j < r; ++j) {
      rel.at(r + static_cast<int>(t), j) = lifts[t].coords[static_cast<size_t>(j)];
    }
  }
  SmithResult s = snf(rel);
  std::vector<long long> factors;
  for (const Int& d : s.diagonal) {
    if (d > 1) factors.push_back(static_cast<long long>(d));
  }
  std::reverse(factors.begin(), factors.end());
  return AbelianGroup::make(std::move(factors));
}

AbelianGroup subgroup_invariants(const AbelianGroup& g, const Subgroup& h) {
  h.validate(g);
  std::vector<Element> gens = h.generators();
  if (gens.empty()) gens = h.members(g);
  if (gens.empty() || h.size() == 1) return AbelianGroup{};
  // H = Z^t / ker(Z^t -> G, e_i -> gens[i]).
  LatticeBasis ker = kernel_lattice(g, gens);
  SmithResult s = snf(ker.mat);
  std::vector<long long> factors;
  for (const Int& d : s.diagonal) {
    if (d > 1) factors.push_back(static_cast<long long>(d));
  }
  std::reverse(factors.begin(), factors.end());
  return AbelianGroup::make(std::move(factors));
}

}  // namespace sepbound
