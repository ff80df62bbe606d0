#include "sepbound/separating.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

namespace sepbound {

namespace {

// All nonempty subsets of {0..k-1}, smaller first, each sorted ascending.
std::vector<std::vector<int>> subsets_up_to(int k, int max_size) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= std::min(k, max_size); ++size) {
    std::vector<int> idx(static_cast<size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.push_back(idx);
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == k - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int j = pos + 1; j < size; ++j) {
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

IntVec to_int_vec(const std::vector<long long>& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace

SeparatingVerdict check_separating_monomials(const AbelianGroup& g,
                                             const std::vector<Element>& chars,
                                             const std::vector<ZeroSumVec>& monomials,
                                             CheckMode mode) {
  int k = static_cast<int>(chars.size());
  for (const Element& c : chars) g.require(c);
  for (const ZeroSumVec& m : monomials) {
    if (static_cast<int>(m.m.size()) != k) throw NotZeroSum("monomial length mismatch");
    Element sum = g.zero();
    for (int i = 0; i < k; ++i) {
      sum = g.add(sum, g.scale(m.m[static_cast<size_t>(i)], chars[static_cast<size_t>(i)]));
    }
    if (sum != g.zero()) throw NotZeroSum("monomial is not a zero-sum vector of the characters");
  }

  int max_size = mode == CheckMode::Helly ? g.kappa() : k;
  for (const std::vector<int>& j : subsets_up_to(k, max_size)) {
    std::vector<Element> sub_chars;
    for (int idx : j) sub_chars.push_back(chars[static_cast<size_t>(idx)]);
    LatticeBasis kernel = kernel_lattice(g, sub_chars);

    // M_J restricted to the coordinates of J.
    std::vector<std::uint8_t> in_j(static_cast<size_t>(k), 0);
    for (int idx : j) in_j[static_cast<size_t>(idx)] = 1;
    std::vector<IntVec> gens;
    for (const ZeroSumVec& m : monomials) {
      bool inside = true;
      for (int i = 0; i < k && inside; ++i) {
        if (m.m[static_cast<size_t>(i)] != 0 && !in_j[static_cast<size_t>(i)]) inside = false;
      }
      if (!inside) continue;
      IntVec v;
      v.reserve(j.size());
      for (int idx : j) v.push_back(m.m[static_cast<size_t>(idx)]);
      gens.push_back(std::move(v));
    }

    IndexResult idx = sublattice_index(gens, kernel);
    if (!idx.is_one()) {
      SeparatingVerdict verdict;
      verdict.separating = false;
      verdict.witness_subset = j;
      // A kernel basis row outside the span of M_J always exists here.
      LatticeBasis span = hnf(IntMat::from_rows(gens, static_cast<int>(j.size())));
      for (int row = 0; row < kernel.rank; ++row) {
        IntVec v = kernel.mat.row(row);
        if (!span.contains(v)) {
          verdict.witness_vector = std::move(v);
          break;
        }
      }
      if (verdict.witness_vector.empty()) {
        throw InternalError("failed to produce a non-generation witness");
      }
      return verdict;
    }
  }
  return SeparatingVerdict{true, {}, {}};
}

long long min_separating_bound_for_subset(const AbelianGroup& g,
                                          const std::vector<Element>& subset) {
  if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
  for (size_t i = 0; i < subset.size(); ++i) {
    g.require(subset[i]);
    if (subset[i] == g.zero()) throw std::invalid_argument("subset elements must be nonzero");
    for (size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i] == subset[j]) throw std::invalid_argument("subset elements must be distinct");
    }
  }
  GSequence seq{g, subset};
  LatticeBasis kernel = kernel_lattice(g, subset);
  long long hard_cap = g.dstar() + 1;
  for (long long d = 1; d <= hard_cap; ++d) {
    std::vector<ZeroSumVec> gens = enumerate_B(seq, d, /*span_only=*/true);
    std::vector<IntVec> rows;
    rows.reserve(gens.size());
    for (const ZeroSumVec& m : gens) rows.push_back(to_int_vec(m.m));
    LatticeBasis span = hnf(IntMat::from_rows(rows, static_cast<int>(subset.size())));
    if (span == kernel) return d;
  }
  throw BoundExceeded("minimal separating bound exceeds d*(G)+1");
}

std::vector<std::vector<long long>> automorphisms(const AbelianGroup& g) {
  long long n = g.order();
  int r = g.rank();
  std::vector<std::vector<long long>> out;
  if (r == 0) {
    out.push_back({0});
    return out;
  }
  std::vector<Element> elems = g.elements();
  // Candidate images per standard generator: elements whose order divides n_i.
  std::vector<std::vector<long long>> candidates(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (long long e = 0; e < n; ++e) {
      if (g.factors()[static_cast<size_t>(i)] % g.element_order(elems[static_cast<size_t>(e)]) == 0) {
        candidates[static_cast<size_t>(i)].push_back(e);
      }
    }
  }
  std::vector<long long> choice(static_cast<size_t>(r), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      // phi(x) = sum x_j * image_j; an endomorphism by construction, an
      // automorphism iff surjective.
      std::vector<long long> table(static_cast<size_t>(n));
      std::vector<std::uint8_t> hit(static_cast<size_t>(n), 0);
      for (long long e = 0; e < n; ++e) {
        Element img = g.zero();
        for (int j = 0; j < r; ++j) {
          img = g.add(img, g.scale(elems[static_cast<size_t>(e)].coords[static_cast<size_t>(j)],
                                   elems[static_cast<size_t>(choice[static_cast<size_t>(j)])]));
        }
        long long idx = g.index_of(img);
        table[static_cast<size_t>(e)] = idx;
        hit[static_cast<size_t>(idx)] = 1;
      }
      if (std::all_of(hit.begin(), hit.end(), [](std::uint8_t b) { return b != 0; })) {
        out.push_back(std::move(table));
      }
      return;
    }
    for (long long c : candidates[static_cast<size_t>(i)]) {
      choice[static_cast<size_t>(i)] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

BetaSepResult beta_sep(const AbelianGroup& g, const BetaSepOptions& opts) {
  if (g.order() > opts.max_order) {
    throw GroupTooLarge("group order " + std::to_string(g.order()) + " exceeds beta_sep cap " +
                        std::to_string(opts.max_order));
  }
  if (g.rank() > opts.max_rank) {
    throw GroupTooLarge("group rank " + std::to_string(g.rank()) + " exceeds beta_sep rank cap " +
                        std::to_string(opts.max_rank));
  }
  BetaSepResult res;
  if (g.trivial()) {
    res.value = 1;
    return res;
  }

  std::vector<Element> nonzero;
  for (const Element& e : g.elements()) {
    if (e != g.zero()) nonzero.push_back(e);
  }
  std::vector<std::vector<int>> subsets =
      subsets_up_to(static_cast<int>(nonzero.size()), g.kappa());

  std::vector<std::vector<long long>> auts;
  if (opts.aut_reduction) auts = automorphisms(g);

  auto subset_elements = [&](const std::vector<int>& s) {
    std::vector<Element> out;
    for (int i : s) out.push_back(nonzero[static_cast<size_t>(i)]);
    return out;
  };
  auto subset_indices = [&](const std::vector<int>& s) {
    std::vector<long long> out;
    for (int i : s) out.push_back(g.index_of(nonzero[static_cast<size_t>(i)]));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto canonical = [&](const std::vector<int>& s) {
    if (!opts.aut_reduction) return true;
    std::vector<long long> self_idx = subset_indices(s);
    for (const std::vector<long long>& phi : auts) {
      std::vector<long long> image;
      for (long long idx : self_idx) image.push_back(phi[static_cast<size_t>(idx)]);
      std::sort(image.begin(), image.end());
      if (image < self_idx) return false;
    }
    return true;
  };

  // Independent subsets across workers, reduced in enumeration order so the
  // result is identical for any worker count.
  int workers = std::max(1, opts.workers);
  std::vector<long long> bounds(subsets.size(), -1);
  auto work = [&](int w) {
    for (size_t s = static_cast<size_t>(w); s < subsets.size(); s += static_cast<size_t>(workers)) {
      if (!canonical(subsets[s])) continue;
      bounds[s] = min_separating_bound_for_subset(g, subset_elements(subsets[s]));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }

  res.value = 0;
  for (size_t s = 0; s < subsets.size(); ++s) {
    if (bounds[s] < 0) continue;
    if (opts.record_per_subset) res.per_subset_min_bound[subset_indices(subsets[s])] = bounds[s];
    if (bounds[s] > res.value) {
      res.value = bounds[s];
      res.witness_subset = subset_elements(subsets[s]);
    }
  }
  if (res.value > g.dstar() + 1) {
    throw BoundExceeded("beta_sep exceeded the d*(G)+1 hard cap");
  }
  return res;
}

bool equality_case(const AbelianGroup& g) {
  int r = g.rank();
  if (r <= 1) return true;  // cyclic (or trivial)
  int s = (r + 1) / 2;      // r = 2s-1 or r = 2s
  return g.factors()[static_cast<size_t>(s)] == 2;
}

GSequence extremal_sequence(const AbelianGroup& g) {
  int r = g.rank();
  if (r <= 1 || !equality_case(g)) {
    throw WrongShape("group is not in the trailing-twos family of rank >= 2");
  }
  int s = (r + 1) / 2;
  // e_i = generator of C_{n_i} (i = 1..s), f_j = order-two generators.
  auto e = [&](int i) { return g.generator(i - 1); };
  auto f = [&](int j) { return g.generator(s + j - 1); };
  GSequence seq;
  seq.group = g;
  seq.elems.push_back(e(1));
  for (int i = 1; i <= s - 1; ++i) {
    seq.elems.push_back(g.add(e(i), f(i)));
    seq.elems.push_back(g.add(f(i), e(i + 1)));
  }
  if (r == 2 * s - 1) {
    seq.elems.push_back(e(s));
  } else {
    seq.elems.push_back(g.add(e(s), f(s)));
    seq.elems.push_back(f(s));
  }
  return seq;
}

DstarIneqResult dstar_inequality(const std::vector<long long>& n,
                                 const std::vector<long long>& m) {
  int r = static_cast<int>(n.size());
  if (static_cast<int>(m.size()) != r || r == 0) {
    throw DivisibilityViolated("tuples must have equal positive length");
  }
  for (int i = 0; i < r; ++i) {
    if (n[static_cast<size_t>(i)] < 1 || m[static_cast<size_t>(i)] < 1 ||
        n[static_cast<size_t>(i)] % m[static_cast<size_t>(i)] != 0) {
      throw DivisibilityViolated("m_i must divide n_i");
    }
    if (i + 1 < r && m[static_cast<size_t>(i)] % n[static_cast<size_t>(i + 1)] != 0) {
      throw DivisibilityViolated("n_{i+1} must divide m_i");
    }
  }
  long long lhs = 0, rhs_sum = 0;
  Int prod = 1;
  for (int i = 0; i < r; ++i) {
    lhs += n[static_cast<size_t>(i)] - 1;
    rhs_sum += m[static_cast<size_t>(i)] - 1;
    prod *= n[static_cast<size_t>(i)] / m[static_cast<size_t>(i)];
  }
  Int rhs = rhs_sum + prod - 1;
  DstarIneqResult res;
  res.holds = Int(lhs) >= rhs;
  res.equality = Int(lhs) == rhs;
  if (res.equality) {
    // Shape: m agrees with n on a prefix of length j and with the shifted
    // tail n_{j+2},...,n_{r+1} (=1) afterwards. j = 0 is the fully shifted
    // tuple.
    for (int j = r; j >= 0; --j) {
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) {
        ok = m[static_cast<size_t>(i)] == n[static_cast<size_t>(i)];
      }
      for (int i = j; i < r && ok; ++i) {
        long long expect = i + 1 < r ? n[static_cast<size_t>(i + 1)] : 1;
        ok = m[static_cast<size_t>(i)] == expect;
      }
      if (ok) {
        res.shape_index = j;
        break;
      }
    }
    if (!res.shape_index) {
      throw InternalError("equality holds but no characterized shape matched");
    }
  }
  return res;
}

StrictnessReport strictness_report(const AbelianGroup& g, const BetaSepOptions& opts,
                                   long long davenport_cap) {
  StrictnessReport rep;
  rep.dstar = g.dstar();
  rep.beta_sep = beta_sep(g, opts).value;
  rep.davenport = davenport(g, davenport_cap).value;
  rep.strict = rep.beta_sep < rep.davenport;
  return rep;
}

}  // namespace sepbound
