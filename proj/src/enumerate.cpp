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

#include "covers/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "covers/arith.hpp"

namespace covers {

std::string to_string(CoveringType t) {
  switch (t) {
    case CoveringType::Z3: return "Z3";
    case CoveringType::G2: return "G2";
    case CoveringType::G3: return "G3";
    case CoveringType::G5: return "G5";
  }
  return "?";
}

CoveringType ambient_type(GroupId g) {
  return g == GroupId::G3 ? CoveringType::G3 : CoveringType::G5;
}

bool is_admissible(GroupId g, CoveringType t) {
  if (g == GroupId::G5) return true;
  return t == CoveringType::G3 || t == CoveringType::Z3;
}

std::vector<CoveringType> admissible_types(GroupId g) {
  if (g == GroupId::G3) return {CoveringType::Z3, CoveringType::G3};
  return {CoveringType::Z3, CoveringType::G2, CoveringType::G3, CoveringType::G5};
}

void require_admissible(GroupId g, CoveringType t) {
  if (!is_admissible(g, t))
    throw InvalidArgument("covering type " + to_string(t) + " does not occur in " +
                          to_string(g));
}

std::string to_string(const EssentialTriple& t) {
  std::ostringstream os;
  os << "a=" << t.a << " H=(" << t.h.a << "," << t.h.b << "," << t.h.mu << ") nu=("
     << t.nu.u << "," << t.nu.v << ")";
  return os.str();
}

namespace {

// H must be invariant under the z^a action unless that action is trivial
// on all lattices (psi^a = +-I, i.e. 3 | a).
bool needs_invariant_h(i64 a) { return a % 3 != 0; }

TypeCounts zero_counts(GroupId g) {
  TypeCounts c;
  for (CoveringType t : admissible_types(g)) c[t] = 0;
  return c;
}

const Mat2& psi_power(GroupId g, i64 k) { return z_action(g, k); }

std::size_t lookup(const std::vector<EssentialTriple>& sorted, const EssentialTriple& t) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
  if (it == sorted.end() || *it != t)
    throw InternalError("conjugation produced a triple outside the enumerated set: " +
                        to_string(t));
  return static_cast<std::size_t>(it - sorted.begin());
}

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

// Orbit labelling of `triples` (sorted) under the maps in `actions`.
std::vector<std::size_t> label_orbits(
    const std::vector<EssentialTriple>& triples,
    const std::vector<std::function<EssentialTriple(const EssentialTriple&)>>& actions,
    std::size_t* orbit_count) {
  std::vector<std::size_t> label(triples.size(), kUnassigned);
  std::size_t next = 0;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (label[i] != kUnassigned) continue;
    label[i] = next;
    queue.push_back(i);
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& act : actions) {
        const std::size_t j = lookup(triples, act(triples[cur]));
        if (label[j] == kUnassigned) {
          label[j] = next;
          queue.push_back(j);
        }
      }
    }
    ++next;
  }
  *orbit_count = next;
  return label;
}

std::vector<EssentialTriple> triples_of_type(GroupId g, i64 n, CoveringType t) {
  require_admissible(g, t);
  auto all = essential_triples(g, n);
  std::erase_if(all, [&](const EssentialTriple& e) { return classify(g, e) != t; });
  return all;
}

}  // namespace

void validate(GroupId g, i64 n, const EssentialTriple& t) {
  (void)g;  // the invariance condition reads the same for both groups
  require_positive(n, "n");
  if (t.a < 1 || n % t.a != 0)
    throw InvalidArgument("triple: a=" + std::to_string(t.a) + " does not divide n=" +
                          std::to_string(n));
  validate(t.h);
  if (t.h.index() != n / t.a)
    throw InvalidArgument("triple: [Gamma:H] must equal n/a");
  if (needs_invariant_h(t.a) && !is_ell_invariant(t.h))
    throw InvalidArgument("triple: H must be invariant under the z-action when 3 does not divide a");
  if (reduce_mod(t.h, t.nu) != t.nu)
    throw InvalidArgument("triple: nu is not a canonical coset representative");
}

std::vector<EssentialTriple> essential_triples(GroupId g, i64 n) {
  (void)g;
  require_positive(n, "n");
  std::vector<EssentialTriple> out;
  for (i64 a : divisors(n)) {
    const i64 m = n / a;
    const auto lattices = needs_invariant_h(a) ? ell_invariant_sublattices(m) : sublattices2(m);
    for (const auto& h : lattices)
      for (Vec2 nu : coset_representatives(h)) out.push_back({a, h, nu});
  }
  return out;
}

CoveringType classify(GroupId g, const EssentialTriple& t) {
  if (g == GroupId::G3) return t.a % 3 == 0 ? CoveringType::Z3 : CoveringType::G3;
  switch (std::gcd(t.a, i64{6})) {
    case 6: return CoveringType::Z3;
    case 3: return CoveringType::G2;
    case 2: return CoveringType::G3;
    default: return CoveringType::G5;
  }
}

Generators reconstruct_generators(GroupId g, const EssentialTriple& t) {
  return {from_gamma(g, t.h.first()), from_gamma(g, t.h.second()), from_gamma(g, t.nu, t.a)};
}

EssentialTriple extract_triple(GroupId g, std::span<const Word> gens) {
  // Nielsen-reduce the z-exponents down to a single pivot; everything else
  // ends up in Gamma without changing the generated subgroup.
  std::vector<Word> kernel;
  Word pivot = identity(g);
  bool have_pivot = false;
  for (Word v : gens) {
    if (v.group != g) throw InvalidArgument("extract_triple: word from the wrong group");
    while (v.c != 0) {
      if (!have_pivot) {
        pivot = v;
        have_pivot = true;
        v = identity(g);
        break;
      }
      const i64 q = v.c / pivot.c;
      v = mul(v, pow(pivot, neg(q)));
      if (v.c != 0) std::swap(v, pivot);
    }
    if (v != identity(g)) kernel.push_back(v);
  }
  if (!have_pivot) throw PreconditionError("extract_triple: subgroup lies in Gamma (infinite index)");
  if (pivot.c < 0) pivot = inv(pivot);

  // D meets Gamma in the normal closure of the kernel words, i.e. their
  // orbits under conjugation by the pivot.
  std::vector<Vec2> lattice_gens;
  for (const Word& k : kernel) {
    Word cur = k;
    for (int i = 0; i < z_period(g); ++i) {
      lattice_gens.push_back(cur.gamma());
      cur = conj(cur, pivot);
    }
  }
  if (lattice_gens.empty()) throw PreconditionError("extract_triple: subgroup has infinite index");
  const SublatticeHNF2 h = hnf_of(lattice_gens);
  return {pivot.c, h, reduce_mod(h, pivot.gamma())};
}

EssentialTriple conjugate_triple(GroupId g, const EssentialTriple& t, const Word& gen) {
  if (gen.group != g) throw InvalidArgument("conjugate_triple: generator from the wrong group");
  const i64 weight = std::abs(gen.a) + std::abs(gen.b) + std::abs(gen.c);
  if (weight != 1)
    throw InvalidArgument("conjugate_triple: expected one of x, y, z or an inverse, got " +
                          to_string(gen));
  if (gen.c == 0) {
    const Vec2 s = gen.gamma();
    const Vec2 shift = s - psi_power(g, t.a) * s;
    return {t.a, t.h, reduce_mod(t.h, t.nu + shift)};
  }
  const Mat2& m = psi_power(g, gen.c);
  const SublatticeHNF2 h = transform(m, t.h);
  return {t.a, h, reduce_mod(h, m * t.nu)};
}

EssentialTriple conjugate_triple_by(GroupId g, const EssentialTriple& t, const Word& u) {
  if (u.group != g) throw InvalidArgument("conjugate_triple_by: word from the wrong group");
  const Mat2& m = psi_power(g, u.c);
  const SublatticeHNF2 h = u.c % z_period(g) == 0 ? t.h : transform(m, t.h);
  const Vec2 s = u.gamma();
  const Vec2 shift = s - psi_power(g, t.a) * s;
  return {t.a, h, reduce_mod(h, m * t.nu + shift)};
}

EssentialTriple conjugate_triple_stepwise(GroupId g, const EssentialTriple& t, const Word& u) {
  if (u.group != g) throw InvalidArgument("conjugate_triple_stepwise: word from the wrong group");
  // z^period and (index H) * Gamma act trivially, so exponents may be
  // reduced before stepping.
  EssentialTriple cur = t;
  const i64 zc = floor_mod(u.c, z_period(g));
  for (i64 i = 0; i < zc; ++i) cur = conjugate_triple(g, cur, gen_z(g));
  const i64 idx = cur.h.index();
  for (i64 i = 0, e = floor_mod(u.b, idx); i < e; ++i) cur = conjugate_triple(g, cur, gen_y(g));
  for (i64 i = 0, e = floor_mod(u.a, idx); i < e; ++i) cur = conjugate_triple(g, cur, gen_x(g));
  return cur;
}

EssentialTriple conjugate_triple_slow(GroupId g, const EssentialTriple& t, const Word& u) {
  const Generators gens = reconstruct_generators(g, t);
  const Word conjugated[] = {conj(gens.x, u), conj(gens.y, u), conj(gens.z, u)};
  return extract_triple(g, conjugated);
}

TypeCounts subgroup_counts(GroupId g, i64 n) {
  TypeCounts counts = zero_counts(g);
  for (const auto& t : essential_triples(g, n)) ++counts[classify(g, t)];
  return counts;
}

TypeCounts OrbitDecomposition::counts() const {
  TypeCounts c = zero_counts(group);
  for (const auto& cls : classes) ++c[cls.type];
  return c;
}

OrbitDecomposition conjugacy_classes(GroupId g, i64 n) {
  OrbitDecomposition out{g, n, essential_triples(g, n), {}, {}};
  const Word gens[] = {gen_x(g), inv(gen_x(g)), gen_y(g), inv(gen_y(g)), gen_z(g), inv(gen_z(g))};
  std::vector<std::function<EssentialTriple(const EssentialTriple&)>> actions;
  for (const Word& w : gens)
    actions.push_back([g, w](const EssentialTriple& t) { return conjugate_triple(g, t, w); });
  std::size_t count = 0;
  out.class_of = label_orbits(out.triples, actions, &count);
  out.classes.resize(count, ConjugacyClass{CoveringType::Z3, kUnassigned, 0});
  for (std::size_t i = 0; i < out.triples.size(); ++i) {
    auto& cls = out.classes[out.class_of[i]];
    if (cls.representative == kUnassigned) {
      cls.representative = i;
      cls.type = classify(g, out.triples[i]);
    }
    ++cls.size;
  }
  return out;
}

TypeCounts conjugacy_class_counts(GroupId g, i64 n) { return conjugacy_classes(g, n).counts(); }

i64 fixed_triple_count(GroupId g, i64 n, const Word& u, CoveringType t) {
  i64 count = 0;
  for (const auto& e : triples_of_type(g, n, t))
    if (conjugate_triple_stepwise(g, e, u) == e) ++count;
  return count;
}

namespace {

std::vector<std::size_t> partial_classes(GroupId g, const std::vector<EssentialTriple>& triples,
                                         i64 lambda_step, std::size_t* count) {
  if (lambda_step < 1) throw InvalidArgument("lambda_step must be positive");
  const Word zk = pow(gen_z(g), lambda_step);
  const Word gens[] = {gen_x(g), inv(gen_x(g)), gen_y(g), inv(gen_y(g)), zk, inv(zk)};
  std::vector<std::function<EssentialTriple(const EssentialTriple&)>> actions;
  for (const Word& w : gens)
    actions.push_back([g, w](const EssentialTriple& t) { return conjugate_triple_by(g, t, w); });
  return label_orbits(triples, actions, count);
}

}  // namespace

i64 partial_class_count(GroupId g, i64 n, CoveringType t, i64 lambda_step) {
  const auto triples = triples_of_type(g, n, t);
  std::size_t count = 0;
  partial_classes(g, triples, lambda_step, &count);
  return static_cast<i64>(count);
}

i64 fixed_partial_class_count(GroupId g, i64 n, const Word& u, CoveringType t,
                              i64 lambda_step) {
  const auto triples = triples_of_type(g, n, t);
  std::size_t count = 0;
  const auto label = partial_classes(g, triples, lambda_step, &count);
  // Lambda is normal, so u permutes the partial classes; a class is fixed
  // iff the image of one member lands back in it.
  std::vector<bool> seen(count, false);
  i64 fixed = 0;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (seen[label[i]]) continue;
    seen[label[i]] = true;
    const std::size_t j = lookup(triples, conjugate_triple_by(g, triples[i], u));
    if (label[j] == label[i]) ++fixed;
  }
  return fixed;
}

i64 burnside_class_count(GroupId g, i64 n, CoveringType t) {
  const auto triples = triples_of_type(g, n, t);
  i64 total = 0;
  for (i64 i = 0; i < n; ++i)
    for (i64 j = 0; j < n; ++j)
      for (i64 c = 0; c < 6; ++c) {
        const Word q{g, i, j, c};
        for (const auto& e : triples)
          if (conjugate_triple_by(g, e, q) == e) ++total;
      }
  const i64 order = mul(6, mul(n, n));
  if (total % order != 0)
    throw InternalError("Burnside average is not an integer for " + to_string(g) + " n=" +
                        std::to_string(n));
  return total / order;
}

}  // namespace covers
