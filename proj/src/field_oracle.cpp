#include "sepbound/field_oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace sepbound {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

long long primitive_root(long long q) {
  std::vector<long long> prime_factors;
  long long m = q - 1;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (long long g = 2; g < q; ++g) {
    bool ok = true;
    for (long long p : prime_factors) {
      if (pow_mod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found mod " + std::to_string(q));
}

}  // namespace

long long smallest_prime_1_mod(long long m) { return nth_prime_1_mod(m, 0); }

long long nth_prime_1_mod(long long m, int skip) {
  for (long long p = 2;; ++p) {
    if ((p - 1) % m == 0 && is_prime(p)) {
      if (skip == 0) return p;
      --skip;
    }
  }
}

long long DiagonalAction::point_count() const {
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= q;
  return n;
}

std::vector<long long> DiagonalAction::decode(long long point) const {
  std::vector<long long> coords(static_cast<size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    coords[static_cast<size_t>(i)] = point % q;
    point /= q;
  }
  return coords;
}

long long DiagonalAction::apply(long long group_elem_index, long long point) const {
  const std::vector<long long>& scale = diag[static_cast<size_t>(group_elem_index)];
  long long out = 0;
  // Scale each coordinate in place on the mixed-radix encoding.
  std::vector<long long> coords = decode(point);
  for (int i = 0; i < k; ++i) {
    out = out * q + coords[static_cast<size_t>(i)] * scale[static_cast<size_t>(i)] % q;
  }
  return out;
}

DiagonalAction build_diagonal_action(const AbelianGroup& g, const std::vector<Element>& chars,
                                     std::optional<long long> q_opt, long long point_cap) {
  for (const Element& c : chars) g.require(c);
  long long e = g.exponent();
  long long q = q_opt ? *q_opt : smallest_prime_1_mod(e);
  if (!is_prime(q) || (q - 1) % e != 0) {
    throw BadPrime("q = " + std::to_string(q) + " is not a prime congruent to 1 mod " +
                   std::to_string(e));
  }
  DiagonalAction act;
  act.q = q;
  act.k = static_cast<int>(chars.size());
  act.group = g;
  act.chars = chars;
  long long points = 1;
  for (int i = 0; i < act.k; ++i) {
    points *= q;
    if (points > point_cap) {
      throw StateSpaceTooLarge("q^k exceeds the point cap " + std::to_string(point_cap));
    }
  }
  long long w = primitive_root(q);
  // chi_a(x) = w^(sum_i a_i x_i (q-1)/n_i), the coordinatewise standard pairing.
  act.diag.resize(static_cast<size_t>(g.order()));
  for (long long gi = 0; gi < g.order(); ++gi) {
    Element x = g.element_at(gi);
    std::vector<long long>& row = act.diag[static_cast<size_t>(gi)];
    row.resize(static_cast<size_t>(act.k));
    for (int i = 0; i < act.k; ++i) {
      long long exp = 0;
      for (int j = 0; j < g.rank(); ++j) {
        long long nj = g.factors()[static_cast<size_t>(j)];
        exp = (exp + chars[static_cast<size_t>(i)].coords[static_cast<size_t>(j)] *
                         x.coords[static_cast<size_t>(j)] % (q - 1) * ((q - 1) / nj)) %
              (q - 1);
      }
      row[static_cast<size_t>(i)] = pow_mod(w, exp, q);
    }
  }
  return act;
}

OrbitPartition orbit_partition(const DiagonalAction& act) {
  long long n = act.point_count();
  OrbitPartition part;
  part.rep.assign(static_cast<size_t>(n), -1);
  for (long long p = 0; p < n; ++p) {
    if (part.rep[static_cast<size_t>(p)] >= 0) continue;
    std::vector<long long> orbit;
    long long rep = p;
    for (long long gi = 0; gi < act.group.order(); ++gi) {
      long long img = act.apply(gi, p);
      orbit.push_back(img);
      rep = std::min(rep, img);
    }
    for (long long o : orbit) part.rep[static_cast<size_t>(o)] = rep;
    ++part.orbit_count;
  }
  return part;
}

SeparationResult monomials_separate(const DiagonalAction& act,
                                    const std::vector<ZeroSumVec>& monomials) {
  const AbelianGroup& g = act.group;
  for (const ZeroSumVec& m : monomials) {
    if (static_cast<int>(m.m.size()) != act.k) {
      throw NotInvariantMonomial("monomial length mismatch");
    }
    Element sum = g.zero();
    for (int i = 0; i < act.k; ++i) {
      sum = g.add(sum, g.scale(m.m[static_cast<size_t>(i)], act.chars[static_cast<size_t>(i)]));
    }
    if (sum != g.zero()) throw NotInvariantMonomial("monomial is not G-invariant");
  }

  OrbitPartition orbits = orbit_partition(act);
  long long n = act.point_count();
  // Two points in distinct orbits with identical monomial signatures witness
  // non-separation.
  std::map<std::vector<long long>, long long> signature_to_point;
  for (long long p = 0; p < n; ++p) {
    std::vector<long long> coords = act.decode(p);
    std::vector<long long> sig;
    sig.reserve(monomials.size());
    for (const ZeroSumVec& m : monomials) {
      long long v = 1;
      for (int i = 0; i < act.k; ++i) {
        v = v * pow_mod(coords[static_cast<size_t>(i)], m.m[static_cast<size_t>(i)], act.q) % act.q;
      }
      sig.push_back(v);
    }
    auto [it, inserted] = signature_to_point.try_emplace(sig, p);
    if (!inserted && orbits.rep[static_cast<size_t>(it->second)] != orbits.rep[static_cast<size_t>(p)]) {
      SeparationResult res;
      res.separating = false;
      res.point_a = it->second;
      res.point_b = p;
      res.values = sig;
      return res;
    }
  }
  return SeparationResult{true, -1, -1, {}};
}

CrossValidation cross_validate(const AbelianGroup& g, const std::vector<Element>& chars,
                               const std::vector<ZeroSumVec>& monomials, long long point_cap) {
  CrossValidation cv;
  cv.criterion_verdict = check_separating_monomials(g, chars, monomials, CheckMode::Full).separating;
  for (int attempt = 0; attempt < 3; ++attempt) {
    long long q = nth_prime_1_mod(g.exponent(), attempt);
    cv.primes_tried.push_back(q);
    DiagonalAction act = build_diagonal_action(g, chars, q, point_cap);
    cv.oracle_verdict = monomials_separate(act, monomials).separating;
    if (cv.oracle_verdict == cv.criterion_verdict) break;
    // A too-small field may miss a non-separation witness; retry with the
    // next admissible prime. The converse disagreement is a hard failure.
    if (!cv.oracle_verdict && cv.criterion_verdict) break;
  }
  cv.agree = cv.criterion_verdict == cv.oracle_verdict;
  return cv;
}

}  // namespace sepbound
