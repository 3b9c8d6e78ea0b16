// Copyright 2026 The covers Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covers/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <random>

#include "covers/arith.hpp"
#include "covers/dirichlet.hpp"
#include "covers/enumerate.hpp"
#include "covers/formulas.hpp"
#include "covers/lattice.hpp"
#include "covers/parallel.hpp"
#include "covers/words.hpp"

namespace covers {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Formulas: return "formulas";
    case Suite::Lattice: return "lattice";
    case Suite::Words: return "words";
    case Suite::Dirichlet: return "dirichlet";
    case Suite::All: return "all";
  }
  return "all";
}

Suite parse_suite(std::string_view text) {
  std::string t(text);
  for (char& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (Suite s : {Suite::Formulas, Suite::Lattice, Suite::Words, Suite::Dirichlet, Suite::All})
    if (to_string(s) == t) return s;
  throw InvalidArgument("unknown suite '" + std::string(text) +
                        "' (expected formulas, dirichlet, lattice, words or all)");
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::first_failure() const {
  const Check* best = nullptr;
  for (const Check& c : checks)
    if (!c.passed && (best == nullptr || c.counterexample.value_or(0) < best->counterexample.value_or(0)))
      best = &c;
  return best;
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["suite"] = to_string(suite);
  doc["nmax"] = nmax;
  doc["passed"] = passed();
  ordered_json list = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["bound"] = c.bound;
    j["verdict"] = c.passed ? (c.detail.empty() ? "pass" : c.detail) : "fail";
    if (c.counterexample)
      j["counterexample"] = {{"n", *c.counterexample}, {"detail", c.detail}};
    else
      j["counterexample"] = nullptr;
    list.push_back(std::move(j));
  }
  doc["checks"] = std::move(list);
  ordered_json errs = ordered_json::array();
  for (const Erratum& e : errata) {
    ordered_json j;
    j["label"] = e.label;
    j["cell"] = e.cell;
    j["first_mismatch"] = e.first_mismatch;
    j["table_value"] = e.table_value;
    j["formula_value"] = e.formula_value;
    j["printed"] = e.printed;
    j["corrected"] = e.corrected;
    j["corrected_verdict"] = e.corrected_agrees ? "agree" : "fail";
    errs.push_back(std::move(j));
  }
  doc["errata"] = std::move(errs);
  return doc.dump(2) + "\n";
}

namespace {

using Probe = std::function<std::optional<std::string>(i64)>;

constexpr std::array<GroupId, 2> kGroups{GroupId::G3, GroupId::G5};

// Runs probe(n) for n = 1..bound and records the smallest failure. Library
// errors raised by a probe count as failures at that n.
Check scan(const std::string& suite, const std::string& name, i64 bound, unsigned threads,
           const Probe& probe) {
  Check c{suite, name, bound, true, std::nullopt, ""};
  if (bound < 1) return c;
  const auto results = parallel_map(static_cast<std::size_t>(bound), threads,
                                    [&](std::size_t i) -> std::optional<std::string> {
                                      try {
                                        return probe(static_cast<i64>(i) + 1);
                                      } catch (const Error& e) {
                                        return std::string("error: ") + e.what();
                                      }
                                    });
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i]) {
      c.passed = false;
      c.counterexample = static_cast<i64>(i) + 1;
      c.detail = *results[i];
      break;
    }
  }
  return c;
}

std::string mismatch(const std::string& what, i64 got, i64 want) {
  return what + ": got " + std::to_string(got) + ", expected " + std::to_string(want);
}

std::string cell_name(GroupId g, CoveringType t) { return to_string(t) + " in " + to_string(g); }

// Oracle counts against the closed formulas, for one count kind.
std::optional<std::string> oracle_probe(CountKind kind, i64 n) {
  for (GroupId g : kGroups) {
    const TypeCounts got = kind == CountKind::Subgroups ? subgroup_counts(g, n)
                                                        : conjugacy_class_counts(g, n);
    for (CoveringType t : admissible_types(g)) {
      const i64 want = closed_count(g, kind, t, n);
      if (got.at(t) != want) return mismatch(to_string(kind) + " " + cell_name(g, t), got.at(t), want);
    }
  }
  return std::nullopt;
}

void formulas_suite(i64 nmax, unsigned threads, std::vector<Check>& out) {
  const std::string s = "formulas";
  out.push_back(scan(s, "oracle_subgroup_counts_equal_closed_forms", nmax, threads,
                     [](i64 n) { return oracle_probe(CountKind::Subgroups, n); }));
  out.push_back(scan(s, "oracle_class_counts_equal_closed_forms", nmax, threads,
                     [](i64 n) { return oracle_probe(CountKind::Classes, n); }));
  out.push_back(scan(s, "class_count_at_most_subgroup_count", nmax, threads,
                     [](i64 n) -> std::optional<std::string> {
                       for (GroupId g : kGroups)
                         for (CoveringType t : admissible_types(g))
                           if (c_closed(g, t, n) > s_closed(g, t, n))
                             return "c exceeds s for " + cell_name(g, t);
                       return std::nullopt;
                     }));
  out.push_back(scan(s, "burnside_average_equals_orbit_count", std::min<i64>(nmax, 12), threads,
                     [](i64 n) -> std::optional<std::string> {
                       for (GroupId g : kGroups) {
                         const TypeCounts orbits = conjugacy_class_counts(g, n);
                         for (CoveringType t : admissible_types(g)) {
                           const i64 b = burnside_class_count(g, n, t);
                           if (b != orbits.at(t)) return mismatch("Burnside " + cell_name(g, t), b, orbits.at(t));
                         }
                       }
                       return std::nullopt;
                     }));
}

i64 sum_over_lattices(i64 n, const std::function<i64(const SublatticeHNF2&)>& f, bool invariant_only) {
  i64 s = 0;
  for (const SublatticeHNF2& h : invariant_only ? ell_invariant_sublattices(n) : sublattices2(n))
    s = add(s, f(h));
  return s;
}

void lattice_suite(i64 nmax, unsigned threads, std::vector<Check>& out) {
  const std::string s = "lattice";
  out.push_back(scan(s, "sublattices2_count_equals_sigma1", nmax, threads,
                     [](i64 n) -> std::optional<std::string> {
                       const i64 got = static_cast<i64>(sublattices2(n).size());
                       if (got != sigma1(n)) return mismatch("|sublattices2|", got, sigma1(n));
                       return std::nullopt;
                     }));
  out.push_back(scan(s, "sublattices3_count_equals_omega", std::min<i64>(nmax, 60), threads,
                     [](i64 n) -> std::optional<std::string> {
                       const i64 got = static_cast<i64>(sublattices3(n).size());
                       if (got != omega_fn(n)) return mismatch("|sublattices3|", got, omega_fn(n));
                       return std::nullopt;
                     }));
  out.push_back(scan(s, "theta_sector_equals_character_sum", nmax, threads,
                     [](i64 n) -> std::optional<std::string> {
                       if (theta(n) != theta_via_character(n))
                         return mismatch("theta", theta(n), theta_via_character(n));
                       return std::nullopt;
                     }));
  out.push_back(scan(s, "theta_equals_invariant_lattice_count", nmax, threads,
                     [](i64 n) -> std::optional<std::string> {
                       const i64 got = static_cast<i64>(ell_invariant_sublattices(n).size());
                       if (got != theta(n)) return mismatch("invariant lattices", got, theta(n));
                       return std::nullopt;
                     }));
  out.push_back(scan(s, "two_torsion_coset_sum_equals_s_halves", nmax, threads,
                     [](i64 n) -> std::optional<std::string> {
                       const i64 got = sum_over_lattices(n, two_torsion_cosets, false);
                       if (got != s_halves(n)) return mismatch("two-torsion cosets", got, s_halves(n));
                       return std::nullopt;
                     }));
  out.push_back(scan(s, "ell_fixed_coset_sum_equals_t_thirds", nmax, threads,
                     [](i64 n) -> std::optional<std::string> {
                       const i64 got = sum_over_lattices(n, ell_fixed_cosets, true);
                       if (got != t_thirds(n)) return mismatch("ell-fixed cosets", got, t_thirds(n));
                       return std::nullopt;
                     }));
  out.push_back(scan(s, "coset_counts_determinant_equals_scan", std::min<i64>(nmax, 100), threads,
                     [](i64 n) -> std::optional<std::string> {
                       for (const SublatticeHNF2& h : sublattices2(n)) {
                         if (two_torsion_cosets(h) != two_torsion_cosets_by_scan(h))
                           return mismatch("two-torsion cosets", two_torsion_cosets(h),
                                           two_torsion_cosets_by_scan(h));
                         if (is_ell_invariant(h) && ell_fixed_cosets(h) != ell_fixed_cosets_by_scan(h))
                           return mismatch("ell-fixed cosets", ell_fixed_cosets(h), ell_fixed_cosets_by_scan(h));
                       }
                       return std::nullopt;
                     }));
}

constexpr i64 kTrials = 10000;

// Deterministic pseudo-random word with exponents in [-bound, bound].
class WordSource {
 public:
  WordSource(GroupId g, i64 bound, std::uint64_t seed) : g_(g), dist_(-bound, bound), rng_(seed) {}
  Word next() { return Word{g_, dist_(rng_), dist_(rng_), dist_(rng_)}; }

 private:
  GroupId g_;
  std::uniform_int_distribution<i64> dist_;
  std::mt19937_64 rng_;
};

Check trial_check(const std::string& name, i64 bound,
                  const std::function<std::optional<std::string>(const Word&, const Word&, const Word&)>& law) {
  Check c{"words", name, kTrials, true, std::nullopt, ""};
  for (GroupId g : kGroups) {
    WordSource src(g, std::max<i64>(bound, 1), g == GroupId::G3 ? 3 : 5);
    for (i64 trial = 1; trial <= kTrials; ++trial) {
      const Word u = src.next(), v = src.next(), w = src.next();
      std::optional<std::string> bad;
      try {
        bad = law(u, v, w);
      } catch (const Error& e) {
        bad = std::string("error: ") + e.what();
      }
      if (bad && (!c.counterexample || trial < *c.counterexample)) {
        c.passed = false;
        c.counterexample = trial;
        c.detail = to_string(g) + ": " + *bad;
      }
    }
  }
  return c;
}

Check single_check(const std::string& name, const std::function<std::optional<std::string>()>& law) {
  Check c{"words", name, 1, true, std::nullopt, ""};
  std::optional<std::string> bad;
  try {
    bad = law();
  } catch (const Error& e) {
    bad = std::string("error: ") + e.what();
  }
  if (bad) {
    c.passed = false;
    c.counterexample = 1;
    c.detail = *bad;
  }
  return c;
}

void words_suite(i64 nmax, std::vector<Check>& out) {
  out.push_back(single_check("defining_relations", []() -> std::optional<std::string> {
    {
      const GroupId g = GroupId::G3;
      const Word x = gen_x(g), y = gen_y(g), z = gen_z(g), e = identity(g);
      if (commutator(x, y) != e) return "G3: [x,y] != 1";
      if (conj(x, z) != y) return "G3: z x z^-1 != y";
      if (conj(y, z) != inv(x * y)) return "G3: z y z^-1 != (xy)^-1";
    }
    {
      const GroupId g = GroupId::G5;
      const Word x = gen_x(g), y = gen_y(g), z = gen_z(g), e = identity(g);
      if (commutator(x, y) != e) return "G5: [x,y] != 1";
      if (conj(x, z) != x * y) return "G5: z x z^-1 != xy";
      if (conj(y, z) != inv(x)) return "G5: z y z^-1 != x^-1";
    }
    return std::nullopt;
  }));
  out.push_back(single_check("action_matrix_identities", []() -> std::optional<std::string> {
    const Mat2 id{1, 0, 0, 1}, minus{-1, 0, 0, -1};
    const Mat2 m = kTableG5[1];
    if (power(kEll, 3) != id) return "ell^3 != I";
    if (power(m, 2) != kEll) return "m^2 != ell";
    if (power(m, 3) != minus) return "m^3 != -I";
    if (power(m, 6) != id) return "m^6 != I";
    for (i64 c = 0; c < 3; ++c)
      if (kTableG3[static_cast<std::size_t>(c)] != power(kEll, c)) return "G3 table row != ell^c";
    for (i64 c = 0; c < 6; ++c)
      if (kTableG5[static_cast<std::size_t>(c)] != power(m, c)) return "G5 table row != m^c";
    return std::nullopt;
  }));
  out.push_back(trial_check("associativity", nmax,
                            [](const Word& u, const Word& v, const Word& w) -> std::optional<std::string> {
                              if ((u * v) * w != u * (v * w)) return "(uv)w != u(vw) for u = " + to_string(u);
                              return std::nullopt;
                            }));
  out.push_back(trial_check("phi_additive", nmax,
                            [](const Word& u, const Word& v, const Word&) -> std::optional<std::string> {
                              if (phi(u * v) != phi(u) + phi(v)) return "phi(uv) != phi(u) + phi(v)";
                              return std::nullopt;
                            }));
  out.push_back(trial_check("inverse_laws", nmax,
                            [](const Word& u, const Word&, const Word&) -> std::optional<std::string> {
                              const Word e = identity(u.group);
                              if (u * inv(u) != e || inv(u) * u != e) return "u u^-1 != 1 for u = " + to_string(u);
                              if (inv(inv(u)) != u) return "(u^-1)^-1 != u";
                              return std::nullopt;
                            }));
}

std::string selector(const TableCell& cell) {
  std::string s = to_string(cell.kind) + ":" + to_string(cell.type) + ":" + to_string(cell.group);
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

void dirichlet_suite(i64 nmax, unsigned threads, std::vector<Check>& out, std::vector<Erratum>& errata) {
  const std::string s = "dirichlet";
  const std::vector<Adjudication> verdicts = adjudicate_table(nmax);
  for (const Adjudication& a : verdicts) {
    Check c{s, std::string("table_") + a.cell->label, nmax, a.passed(), std::nullopt, a.verdict};
    if (!a.passed()) {
      const Comparison& bad = a.corrected ? *a.corrected : a.printed;
      c.counterexample = bad.first_mismatch;
      c.detail = "series " + bad.series_value.str() + " vs formula " + std::to_string(bad.target_value);
    }
    out.push_back(std::move(c));
    if (a.verdict != "agree") {
      Erratum e;
      e.label = a.cell->label;
      e.cell = selector(*a.cell);
      e.first_mismatch = a.printed.first_mismatch;
      e.table_value = a.printed.series_value.str();
      e.formula_value = a.printed.target_value;
      e.printed = a.cell->table_text;
      e.corrected = a.cell->corrected_text ? a.cell->corrected_text : "";
      e.corrected_agrees = a.corrected && a.corrected->agree;
      errata.push_back(std::move(e));
    }
  }
  const CoeffSeries theta_series = expand(DirichletExpr::atom(Atom::zeta()) * DirichletExpr::atom(Atom::theta()), nmax);
  out.push_back(scan(s, "zeta_times_theta_expands_to_theta", nmax, threads,
                     [&](i64 n) -> std::optional<std::string> {
                       if (theta_series.at(n) != theta(n))
                         return "coefficient " + theta_series.at(n).str() + " vs theta " + std::to_string(theta(n));
                       return std::nullopt;
                     }));
  const CoeffSeries base = expand(DirichletExpr::atom(Atom::zeta(1)) * DirichletExpr::atom(Atom::theta()), nmax);
  for (i64 m : {2, 3, 6, 12, 18}) {
    const CoeffSeries dil =
        expand(DirichletExpr::atom(Atom::dilate(m)) * DirichletExpr::atom(Atom::zeta(1)) *
                   DirichletExpr::atom(Atom::theta()),
               nmax);
    out.push_back(scan(s, "dilation_law_m" + std::to_string(m), nmax, threads,
                       [&](i64 n) -> std::optional<std::string> {
                         const Rational want = n % m == 0 ? base.at(n / m) : Rational(0);
                         if (dil.at(n) != want) return "coefficient " + dil.at(n).str() + " vs " + want.str();
                         return std::nullopt;
                       }));
  }
}

}  // namespace

Report run_verification(Suite suite, i64 nmax, unsigned threads) {
  require_positive(nmax, "nmax");
  Report r;
  r.suite = suite;
  r.nmax = nmax;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Formulas) formulas_suite(nmax, threads, r.checks);
  if (all || suite == Suite::Lattice) lattice_suite(nmax, threads, r.checks);
  if (all || suite == Suite::Words) words_suite(nmax, r.checks);
  if (all || suite == Suite::Dirichlet) dirichlet_suite(nmax, threads, r.checks, r.errata);
  return r;
}

}  // namespace covers
