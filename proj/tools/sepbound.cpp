// Command-line front end: every computation with machine-readable output,
// batch sweeps over group families, and verification commands for the main
// degree-bound results.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "sepbound/abelian_group.hpp"
#include "sepbound/field_oracle.hpp"
#include "sepbound/integer_lattice.hpp"
#include "sepbound/separating.hpp"
#include "sepbound/zerosum.hpp"

using json = nlohmann::json;
using namespace sepbound;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

std::vector<Element> parse_element_list(const AbelianGroup& g, const std::string& s) {
  std::vector<Element> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) out.push_back(g.reduce(parse_int_list(tok)));
  return out;
}

std::vector<ZeroSumVec> load_monomials(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open monomial file " + path);
  json j = json::parse(in);
  std::vector<ZeroSumVec> out;
  for (const auto& row : j) out.push_back(ZeroSumVec{row.get<std::vector<long long>>()});
  return out;
}

json element_json(const Element& e) { return json(e.coords); }

json witness_atom_json(const std::map<std::vector<long long>, long long>& atom) {
  json j = json::object();
  for (const auto& [coords, mult] : atom) j[json(coords).dump()] = mult;
  return j;
}

long long env_max_order(long long fallback) {
  if (const char* v = std::getenv("SEPBOUND_MAX_ORDER")) return std::stoll(v);
  return fallback;
}

// All invariant-factor chains with order in [2, max_order] and rank <= max_rank.
std::vector<std::vector<long long>> group_family(long long max_order, int max_rank) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> chain;
  auto rec = [&](auto&& self, long long order_left, long long max_factor) -> void {
    if (!chain.empty()) out.push_back(chain);
    if (static_cast<int>(chain.size()) == max_rank) return;
    for (long long n = 2; n <= max_factor; ++n) {
      if (order_left / n < 1) break;
      if (!chain.empty() && chain.back() % n != 0) continue;
      chain.push_back(n);
      self(self, order_left / n, n);
      chain.pop_back();
    }
  };
  rec(rec, max_order, max_order);
  for (auto& f : out) std::sort(f.begin(), f.end(), std::greater<>());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long oa = 1, ob = 1;
    for (long long x : a) oa *= x;
    for (long long x : b) ob *= x;
    if (oa != ob) return oa < ob;
    return a < b;
  });
  return out;
}

struct SweepRow {
  std::vector<long long> factors;
  long long order, rank, dstar, davenport, beta_sep;
  bool equality, strict;
  bool ok;
};

void print_sweep(const std::vector<SweepRow>& rows, const std::string& format) {
  if (format == "json") {
    json out = json::array();
    for (const SweepRow& r : rows) {
      out.push_back({{"group", r.factors},
                     {"order", r.order},
                     {"rank", r.rank},
                     {"dstar", r.dstar},
                     {"davenport", r.davenport},
                     {"betaSep", r.beta_sep},
                     {"equalityCase", r.equality},
                     {"strict", r.strict},
                     {"ok", r.ok}});
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "factors;order;rank;dstar;davenport;betaSep;equalityCase;strict\n";
    for (const SweepRow& r : rows) {
      std::string f;
      for (size_t i = 0; i < r.factors.size(); ++i) {
        if (i) f += ",";
        f += std::to_string(r.factors[i]);
      }
      std::cout << f << ";" << r.order << ";" << r.rank << ";" << r.dstar << ";" << r.davenport
                << ";" << r.beta_sep << ";" << (r.equality ? 1 : 0) << ";" << (r.strict ? 1 : 0)
                << "\n";
    }
  } else {
    for (const SweepRow& r : rows) {
      std::string f;
      for (size_t i = 0; i < r.factors.size(); ++i) {
        if (i) f += "+";
        f += "C" + std::to_string(r.factors[i]);
      }
      std::cout << f << ": dstar=" << r.dstar << " betaSep=" << r.beta_sep
                << " D=" << r.davenport << " equality=" << (r.equality ? "yes" : "no")
                << " strict=" << (r.strict ? "yes" : "no") << " " << (r.ok ? "OK" : "FAIL")
                << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact separating-invariant degree bounds for finite abelian groups"};
  app.require_subcommand(1);

  std::string group_str, chars_str, seq_str, vec_str, mono_file, mode_str = "full";
  std::string format = "json";
  long long max_order = env_max_order(32);
  long long davenport_cap = 32;
  long long bound = -1;
  int max_rank = 4;
  int workers = 1;
  bool aut_reduction = false;
  bool per_subset = false;
  bool normalize = true;

  auto add_group_opt = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_str, "invariant factors, e.g. 6,2")->required();
    cmd->add_flag("!--strict-factors", normalize,
                  "reject factor lists that are not an invariant-factor chain");
  };

  CLI::App* stats = app.add_subcommand("stats", "rank, exponent, order, d*, kappa");
  add_group_opt(stats);

  CLI::App* dav = app.add_subcommand("davenport", "Davenport constant with witness atom");
  add_group_opt(dav);
  dav->add_option("--cap", davenport_cap, "group order cap");

  CLI::App* bsep = app.add_subcommand("betasep", "separating Noether number beta_sep(G)");
  add_group_opt(bsep);
  bsep->add_option("--workers", workers, "worker thread count");
  bsep->add_option("--max-order", max_order, "group order cap");
  bsep->add_option("--max-rank", max_rank, "group rank cap");
  bsep->add_flag("--aut-reduction", aut_reduction, "enumerate subset orbits under Aut(G)");
  bsep->add_flag("--per-subset", per_subset, "include per-subset minimal bounds");

  CLI::App* chk = app.add_subcommand("check-sep", "separating criterion for a monomial set");
  add_group_opt(chk);
  chk->add_option("--chars", chars_str, "characters as coordinate tuples, e.g. 1,0;1,1;0,1")
      ->required();
  chk->add_option("--monomials", mono_file, "JSON file with an array of exponent vectors")
      ->required();
  chk->add_option("--mode", mode_str, "full or helly")->check(CLI::IsMember({"full", "helly"}));

  CLI::App* ext = app.add_subcommand("extremal", "extremal sequence for the equality family");
  add_group_opt(ext);

  CLI::App* dec = app.add_subcommand("decompose", "write a relation as a bounded combination");
  add_group_opt(dec);
  dec->add_option("--seq", seq_str, "element sequence, e.g. 1,0;1,1;0,1")->required();
  dec->add_option("--vector", vec_str, "integer relation vector, e.g. 1,1,1")->required();
  dec->add_option("--bound", bound, "length bound (default d*(G)+1)");

  CLI::App* vmain = app.add_subcommand("verify-main", "sweep beta_sep vs d*+1 over small groups");
  vmain->add_option("--max-order", max_order, "largest group order in the sweep");
  vmain->add_option("--max-rank", max_rank, "largest rank in the sweep");
  vmain->add_option("--workers", workers, "worker thread count");
  vmain->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  CLI::App* vstrict = app.add_subcommand("verify-strict", "sweep beta_sep < D(G) strictness");
  vstrict->add_option("--max-order", max_order, "largest group order in the sweep");
  vstrict->add_option("--max-rank", max_rank, "largest rank in the sweep");
  vstrict->add_option("--workers", workers, "worker thread count");
  vstrict->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  CLI::App* xval = app.add_subcommand("cross-validate", "lattice criterion vs finite-field oracle");
  add_group_opt(xval);
  xval->add_option("--chars", chars_str, "characters as coordinate tuples")->required();
  xval->add_option("--monomials", mono_file, "JSON file with an array of exponent vectors")
      ->required();

  CLI::App* lemmas = app.add_subcommand("subgroup-lemmas", "subgroup/quotient d* inequalities");
  lemmas->add_option("--max-order", max_order, "largest group order in the sweep");
  lemmas->add_option("--max-rank", max_rank, "largest rank in the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto make_group = [&]() { return AbelianGroup::make(parse_int_list(group_str), normalize); };

    if (*stats) {
      AbelianGroup g = make_group();
      GroupStats s = group_stats(g);
      std::cout << json{{"group", g.factors()},
                        {"order", s.order},
                        {"rank", s.rank},
                        {"exponent", s.exponent},
                        {"dstar", s.dstar},
                        {"kappa", s.kappa}}
                       .dump(2)
                << "\n";
    } else if (*dav) {
      AbelianGroup g = make_group();
      DavenportResult r = davenport(g, davenport_cap);
      std::cout << json{{"group", g.factors()},
                        {"davenport", r.value},
                        {"witnessAtom", witness_atom_json(r.witness_atom)}}
                       .dump(2)
                << "\n";
    } else if (*bsep) {
      AbelianGroup g = make_group();
      BetaSepOptions opts;
      opts.max_order = max_order;
      opts.max_rank = max_rank;
      opts.workers = workers;
      opts.aut_reduction = aut_reduction;
      opts.record_per_subset = per_subset;
      BetaSepResult r = beta_sep(g, opts);
      long long dvalue = g.order() <= davenport_cap ? davenport(g, davenport_cap).value : -1;
      json witness = json::array();
      for (const Element& e : r.witness_subset) witness.push_back(element_json(e));
      json out{{"group", g.factors()},     {"dstar", g.dstar()},
               {"betaSep", r.value},       {"davenport", dvalue},
               {"equalityCase", equality_case(g)}, {"witnessSubset", witness}};
      if (per_subset) {
        json per = json::object();
        for (const auto& [subset, d] : r.per_subset_min_bound) per[json(subset).dump()] = d;
        out["perSubsetMinBound"] = per;
      }
      std::cout << out.dump(2) << "\n";
    } else if (*chk) {
      AbelianGroup g = make_group();
      std::vector<Element> chars = parse_element_list(g, chars_str);
      std::vector<ZeroSumVec> monomials = load_monomials(mono_file);
      CheckMode mode = mode_str == "helly" ? CheckMode::Helly : CheckMode::Full;
      SeparatingVerdict v = check_separating_monomials(g, chars, monomials, mode);
      json out{{"group", g.factors()}, {"separating", v.separating}};
      if (!v.separating) {
        out["witnessSubset"] = v.witness_subset;
        json wv = json::array();
        for (const Int& x : v.witness_vector) wv.push_back(x.str());
        out["witnessVector"] = wv;
      }
      std::cout << out.dump(2) << "\n";
    } else if (*ext) {
      AbelianGroup g = make_group();
      GSequence seq = extremal_sequence(g);
      json elems = json::array();
      for (const Element& e : seq.elems) elems.push_back(element_json(e));
      std::cout << json{{"group", g.factors()}, {"sequence", elems}}.dump(2) << "\n";
    } else if (*dec) {
      AbelianGroup g = make_group();
      GSequence seq{g, parse_element_list(g, seq_str)};
      std::vector<long long> u = parse_int_list(vec_str);
      if (bound < 0) bound = g.dstar() + 1;
      std::vector<DecompTerm> terms = decompose(seq, u, bound);
      json out = json::array();
      for (const DecompTerm& t : terms) {
        out.push_back({{"coefficient", t.coeff}, {"vector", t.vec.m}});
      }
      std::cout << json{{"group", g.factors()}, {"bound", bound}, {"terms", out}}.dump(2) << "\n";
    } else if (*vmain || *vstrict) {
      bool strict_mode = static_cast<bool>(*vstrict);
      std::vector<SweepRow> rows;
      bool all_ok = true;
      for (const auto& factors : group_family(max_order, max_rank)) {
        AbelianGroup g = AbelianGroup::make(factors);
        BetaSepOptions opts;
        opts.max_order = max_order;
        opts.max_rank = max_rank;
        opts.workers = workers;
        SweepRow row;
        row.factors = factors;
        row.order = g.order();
        row.rank = g.rank();
        row.dstar = g.dstar();
        row.beta_sep = beta_sep(g, opts).value;
        row.davenport = davenport(g, std::max(davenport_cap, max_order)).value;
        row.equality = equality_case(g);
        row.strict = row.beta_sep < row.davenport;
        if (strict_mode) {
          // Non-cyclic groups outside the equality family must be strict.
          row.ok = row.equality || row.strict;
        } else {
          row.ok = row.beta_sep <= row.dstar + 1 &&
                   (row.beta_sep == row.dstar + 1) == row.equality;
        }
        all_ok = all_ok && row.ok;
        rows.push_back(row);
      }
      print_sweep(rows, format);
      if (!all_ok) {
        std::cerr << "verification failed\n";
        return kExitInternal;
      }
    } else if (*xval) {
      AbelianGroup g = make_group();
      std::vector<Element> chars = parse_element_list(g, chars_str);
      std::vector<ZeroSumVec> monomials = load_monomials(mono_file);
      CrossValidation cv = cross_validate(g, chars, monomials);
      std::cout << json{{"group", g.factors()},
                        {"criterionVerdict", cv.criterion_verdict},
                        {"oracleVerdict", cv.oracle_verdict},
                        {"agree", cv.agree},
                        {"primesTried", cv.primes_tried}}
                       .dump(2)
                << "\n";
      if (!cv.agree) {
        std::cerr << "criterion/oracle disagreement\n";
        return kExitInternal;
      }
    } else if (*lemmas) {
      bool all_ok = true;
      json out = json::array();
      for (const auto& factors : group_family(max_order, max_rank)) {
        AbelianGroup g = AbelianGroup::make(factors);
        bool ok = true;
        for (const Subgroup& h : all_subgroups(g, max_order)) {
          AbelianGroup q = quotient_invariants(g, h);
          AbelianGroup sub = subgroup_invariants(g, h);
          if (q.rank() <= 1 && h.size() < g.order()) {
            long long index = g.order() / h.size();
            if (g.dstar() < sub.dstar() + index - 1) ok = false;
          }
        }
        out.push_back({{"group", factors}, {"ok", ok}});
        all_ok = all_ok && ok;
      }
      std::cout << out.dump(2) << "\n";
      if (!all_ok) {
        std::cerr << "subgroup lemma verification failed\n";
        return kExitInternal;
      }
    }
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
