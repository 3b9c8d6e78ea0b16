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

#include <doctest.h>

#include <numeric>
#include <set>

#include "covers/enumerate.hpp"
#include "covers/formulas.hpp"
#include "oracles.hpp"

using namespace covers;

namespace {

constexpr GroupId G3 = GroupId::G3;
constexpr GroupId G5 = GroupId::G5;
const SublatticeHNF2 kH3{3, 1, 2};

i64 total(const TypeCounts& c) {
  i64 s = 0;
  for (const auto& [t, v] : c) s += v;
  return s;
}

// sum_{k | m} theta(k) with the brute-force theta; 0 unless d | n.
i64 theta_divsum(i64 n, i64 d) {
  if (n % d != 0) return 0;
  i64 s = 0;
  for (i64 k = 1; k <= n / d; ++k)
    if ((n / d) % k == 0) s += oracle::theta(k);
  return s;
}

i64 sigma2_at(i64 n, i64 d) {
  if (n % d != 0) return 0;
  i64 s = 0;
  for (i64 k = 1; k <= n / d; ++k)
    if ((n / d) % k == 0) s += oracle::sigma(1, k);
  return s;
}

// Every element of the group generated by `gens` up to word length `len`.
std::set<std::tuple<i64, i64, i64>> ball(GroupId g, const Generators& gens, int len) {
  std::vector<Word> letters{gens.x, inv(gens.x), gens.y, inv(gens.y), gens.z, inv(gens.z)};
  std::set<std::tuple<i64, i64, i64>> seen{{0, 0, 0}};
  std::vector<Word> frontier{identity(g)};
  for (int step = 0; step < len; ++step) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const Word& l : letters) {
        const Word v = w * l;
        if (seen.insert({v.a, v.b, v.c}).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("admissible types") {
  CHECK(admissible_types(G3) == std::vector<CoveringType>{CoveringType::Z3, CoveringType::G3});
  CHECK(admissible_types(G5).size() == 4);
  CHECK_FALSE(is_admissible(G3, CoveringType::G2));
  CHECK_THROWS_AS(require_admissible(G3, CoveringType::G5), InvalidArgument);
  CHECK(ambient_type(G5) == CoveringType::G5);
}

TEST_CASE("essential triples at small index") {
  CHECK(essential_triples(G3, 1).size() == 1);
  const auto t3 = essential_triples(G3, 3);
  REQUIRE(t3.size() == 4);
  CHECK(t3[0] == EssentialTriple{1, kH3, {0, 0}});
  CHECK(t3[1] == EssentialTriple{1, kH3, {1, 0}});
  CHECK(t3[2] == EssentialTriple{1, kH3, {2, 0}});
  CHECK(t3[3] == EssentialTriple{3, {1, 1, 0}, {0, 0}});
  std::map<i64, int> by_a;
  for (const auto& t : essential_triples(G5, 6)) ++by_a[t.a];
  CHECK(by_a[1] == 0);
  CHECK(by_a[2] == 3);
  CHECK(by_a[3] == 6);
  CHECK(by_a[6] == 1);
  CHECK_THROWS_AS(essential_triples(G3, 0), InvalidArgument);
}

TEST_CASE("triple validation") {
  CHECK_NOTHROW(validate(G3, 3, EssentialTriple{1, kH3, {2, 0}}));
  CHECK_THROWS_AS(validate(G3, 2, EssentialTriple{1, {2, 1, 0}, {0, 0}}), InvalidArgument);  // not invariant
  CHECK_THROWS_AS(validate(G3, 4, EssentialTriple{1, kH3, {0, 0}}), InvalidArgument);        // wrong index
  CHECK_THROWS_AS(validate(G3, 3, EssentialTriple{1, kH3, {5, 0}}), InvalidArgument);        // unreduced nu
}

TEST_CASE("classification") {
  CHECK(classify(G5, {2, {1, 1, 0}, {0, 0}}) == CoveringType::G3);
  CHECK(classify(G3, {3, {1, 1, 0}, {0, 0}}) == CoveringType::Z3);
  CHECK(classify(G5, {6, {1, 1, 0}, {0, 0}}) == CoveringType::Z3);
  CHECK(classify(G5, {3, {1, 1, 0}, {0, 0}}) == CoveringType::G2);
  CHECK(classify(G5, {7, {1, 1, 0}, {0, 0}}) == CoveringType::G5);
  CHECK(classify(G3, {2, {1, 1, 0}, {0, 0}}) == CoveringType::G3);
}

TEST_CASE("generator reconstruction") {
  const Generators whole = reconstruct_generators(G3, {1, {1, 1, 0}, {0, 0}});
  CHECK(whole.x == gen_x(G3));
  CHECK(whole.y == gen_y(G3));
  CHECK(whole.z == gen_z(G3));
  const Generators z3 = reconstruct_generators(G3, {3, {1, 1, 0}, {0, 0}});
  CHECK(z3.z == pow(gen_z(G3), 3));
  CHECK(commutator(z3.x, z3.z) == identity(G3));
  CHECK(commutator(z3.y, z3.z) == identity(G3));
  const Generators p = reconstruct_generators(G3, {1, kH3, {0, 0}});
  CHECK(p.x == pow(gen_x(G3), 3));
  CHECK(p.y == Word{G3, 2, 1, 0});
  CHECK(commutator(p.x, p.y) == identity(G3));
  // In the rotated basis X = x^2 y, Y = ell(X) = x^-1 y the proper
  // relations hold: Z X Z^-1 = Y and Z Y Z^-1 = (X Y)^-1.
  const Word X{G3, 2, 1, 0};
  const Word Y = conj(X, p.z);
  CHECK(Y == Word{G3, -1, 1, 0});
  CHECK(commutator(X, Y) == identity(G3));
  CHECK(conj(Y, p.z) == inv(X * Y));
  CHECK(extract_triple(G3, std::vector<Word>{X, Y, p.z}) == EssentialTriple{1, kH3, {0, 0}});
}

TEST_CASE("triples survive reconstruction and re-extraction") {
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 24; ++n)
      for (const auto& t : essential_triples(g, n)) {
        const Generators gens = reconstruct_generators(g, t);
        const std::vector<Word> list{gens.x, gens.y, gens.z};
        REQUIRE(extract_triple(g, list) == t);
        // A redundant, scrambled generating set names the same subgroup.
        const std::vector<Word> scrambled{gens.z * gens.x, gens.y * gens.z, inv(gens.z), gens.x * gens.y};
        REQUIRE(extract_triple(g, scrambled) == t);
      }
  CHECK_THROWS_AS(extract_triple(G3, std::vector<Word>{gen_x(G3), gen_y(G3)}), PreconditionError);
  CHECK_THROWS_AS(extract_triple(G3, std::vector<Word>{gen_z(G3)}), PreconditionError);
}

TEST_CASE("membership soundness on short words") {
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 12; ++n)
      for (const auto& t : essential_triples(g, n))
        for (const auto& [a, b, c] : ball(g, reconstruct_generators(g, t), 4)) {
          if (c == 0) REQUIRE(t.h.contains({a, b}));
          REQUIRE(c % t.a == 0);
        }
}

TEST_CASE("H is normal when 3 does not divide a") {
  for (i64 n = 1; n <= 48; ++n)
    for (const auto& t : essential_triples(G3, n)) {
      if (t.a % 3 == 0) continue;
      const Generators gens = reconstruct_generators(G3, t);
      for (const Word& basis : {gens.x, gens.y})
        for (const Word& u : {gen_x(G3), gen_y(G3), gen_z(G3)}) {
          const Word w = conj(basis, u);
          REQUIRE(w.c == 0);
          REQUIRE(t.h.contains(w.gamma()));
        }
    }
}

TEST_CASE("type soundness of reconstructed generators") {
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 18; ++n)
      for (const auto& t : essential_triples(g, n)) {
        const Generators gens = reconstruct_generators(g, t);
        const auto acts_as = [&](i64 k) {  // Z^k fixes X and Y under conjugation
          const Word zk = pow(gens.z, k);
          return conj(gens.x, zk) == gens.x && conj(gens.y, zk) == gens.y;
        };
        switch (classify(g, t)) {
          case CoveringType::Z3:
            CHECK(acts_as(1));
            break;
          case CoveringType::G2:
            CHECK(conj(gens.x, gens.z) == inv(gens.x));
            CHECK(conj(gens.y, gens.z) == inv(gens.y));
            break;
          case CoveringType::G3:
            CHECK_FALSE(acts_as(1));
            CHECK(acts_as(3));
            break;
          case CoveringType::G5:
            CHECK_FALSE(acts_as(1));
            CHECK_FALSE(acts_as(2));
            CHECK_FALSE(acts_as(3));
            CHECK(acts_as(6));
            break;
        }
      }
}

TEST_CASE("conjugation by generators") {
  const EssentialTriple whole{1, {1, 1, 0}, {0, 0}};
  for (const Word& u : {gen_x(G3), gen_y(G3), gen_z(G3), inv(gen_z(G3))})
    CHECK(conjugate_triple(G3, whole, u) == whole);
  const EssentialTriple t{1, kH3, {1, 0}};
  CHECK(conjugate_triple(G3, t, gen_y(G3)) == t);
  CHECK(conjugate_triple(G3, t, gen_z(G3)) == t);
  CHECK_THROWS_AS(conjugate_triple(G3, t, Word{G3, 1, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(conjugate_triple(G3, t, gen_x(G5)), InvalidArgument);
}

TEST_CASE("all conjugation paths agree") {
  const std::vector<Word> probes3{gen_x(G3), gen_y(G3), gen_z(G3), Word{G3, 2, -1, 1}, Word{G3, -3, 4, 2},
                                  Word{G3, 1, 1, -4}};
  const std::vector<Word> probes5{gen_x(G5), gen_y(G5), gen_z(G5), Word{G5, 2, -1, 1}, Word{G5, -3, 4, 3},
                                  Word{G5, 1, 1, -5}, Word{G5, 0, 2, 2}};
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 12; ++n)
      for (const auto& t : essential_triples(g, n))
        for (const Word& u : g == G3 ? probes3 : probes5) {
          const EssentialTriple slow = conjugate_triple_slow(g, t, u);
          REQUIRE(conjugate_triple_by(g, t, u) == slow);
          REQUIRE(conjugate_triple_stepwise(g, t, u) == slow);
          REQUIRE(classify(g, slow) == classify(g, t));
        }
}

TEST_CASE("subgroup and class counts at reference points") {
  CHECK(subgroup_counts(G3, 1) == TypeCounts{{CoveringType::Z3, 0}, {CoveringType::G3, 1}});
  CHECK(subgroup_counts(G3, 3) == TypeCounts{{CoveringType::Z3, 1}, {CoveringType::G3, 3}});
  CHECK(subgroup_counts(G5, 6) == TypeCounts{{CoveringType::Z3, 1},
                                             {CoveringType::G2, 6},
                                             {CoveringType::G3, 3},
                                             {CoveringType::G5, 0}});
  CHECK(conjugacy_class_counts(G5, 1).at(CoveringType::G5) == 1);
  CHECK(conjugacy_class_counts(G3, 9) == TypeCounts{{CoveringType::Z3, 7}, {CoveringType::G3, 3}});
  CHECK(conjugacy_class_counts(G5, 6) == TypeCounts{{CoveringType::Z3, 1},
                                                    {CoveringType::G2, 2},
                                                    {CoveringType::G3, 2},
                                                    {CoveringType::G5, 0}});
}

TEST_CASE("totals agree with the permutation-representation oracle") {
  for (GroupId g : {G3, G5})
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      const auto want = oracle::subgroup_totals(g == G5, n);
      CHECK(total(subgroup_counts(g, n)) == want.subgroups);
      CHECK(total(conjugacy_class_counts(g, n)) == want.classes);
    }
}

TEST_CASE("orbit decomposition is consistent") {
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 16; ++n) {
      const OrbitDecomposition d = conjugacy_classes(g, n);
      REQUIRE(d.class_of.size() == d.triples.size());
      std::size_t sum = 0;
      for (std::size_t k = 0; k < d.classes.size(); ++k) {
        const auto& c = d.classes[k];
        sum += c.size;
        CHECK(d.class_of[c.representative] == k);
        CHECK(classify(g, d.triples[c.representative]) == c.type);
        // Orbit sizes divide the order of the finite quotient acting.
        CHECK((6 * n * n) % static_cast<i64>(c.size) == 0);
      }
      CHECK(sum == d.triples.size());
      // Conjugates stay in their class.
      for (std::size_t i = 0; i < d.triples.size(); ++i)
        for (const Word& u : {gen_x(g), gen_y(g), gen_z(g)}) {
          const auto img = conjugate_triple_by(g, d.triples[i], u);
          const auto it = std::lower_bound(d.triples.begin(), d.triples.end(), img);
          REQUIRE(it != d.triples.end());
          CHECK(d.class_of[static_cast<std::size_t>(it - d.triples.begin())] == d.class_of[i]);
        }
    }
}

TEST_CASE("fixed-point counts") {
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 12; ++n)
      for (CoveringType t : admissible_types(g))
        CHECK(fixed_triple_count(g, n, identity(g), t) == subgroup_counts(g, n).at(t));
  CHECK(fixed_triple_count(G3, 9, gen_z(G3), CoveringType::Z3) == 4);
  CHECK(fixed_triple_count(G5, 12, pow(gen_z(G5), 3), CoveringType::Z3) == 7);
}

TEST_CASE("Burnside fixed-point closed forms") {
  for (i64 n = 1; n <= 36; ++n) {
    CAPTURE(n);
    const i64 bz = theta_divsum(n, 3) + 2 * theta_divsum(n, 9);
    CHECK(fixed_triple_count(G3, n, gen_z(G3), CoveringType::Z3) == bz);
    CHECK(fixed_triple_count(G3, n, pow(gen_z(G3), 2), CoveringType::Z3) == bz);

    const Word z = gen_z(G5);
    CHECK(fixed_triple_count(G5, n, pow(z, 3), CoveringType::Z3) == sigma2_at(n, 6) + 3 * sigma2_at(n, 12));
    const i64 b2 = theta_divsum(n, 6) + 2 * theta_divsum(n, 18);
    CHECK(fixed_triple_count(G5, n, pow(z, 2), CoveringType::Z3) == b2);
    CHECK(fixed_triple_count(G5, n, pow(z, 4), CoveringType::Z3) == b2);
    CHECK(fixed_triple_count(G5, n, z, CoveringType::Z3) == theta_divsum(n, 6));
    CHECK(fixed_triple_count(G5, n, pow(z, 5), CoveringType::Z3) == theta_divsum(n, 6));

    // G2 type, partial classes under <x, y, z^3>.
    CHECK(partial_class_count(G5, n, CoveringType::G2, 3) ==
          sigma2_at(n, 3) + 2 * sigma2_at(n, 6) - 3 * sigma2_at(n, 12));
    const i64 bx = theta_divsum(n, 3) - theta_divsum(n, 6);
    CHECK(fixed_partial_class_count(G5, n, pow(z, 2), CoveringType::G2, 3) == bx);
    CHECK(fixed_partial_class_count(G5, n, pow(z, 4), CoveringType::G2, 3) == bx);
  }
}

TEST_CASE("Burnside average equals orbit count") {
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 8; ++n) {
      const TypeCounts orbits = conjugacy_class_counts(g, n);
      for (CoveringType t : admissible_types(g)) CHECK(burnside_class_count(g, n, t) == orbits.at(t));
    }
}

TEST_CASE("oracle equals closed forms") {
  for (GroupId g : {G3, G5})
    for (i64 n = 1; n <= 30; ++n) {
      CAPTURE(n);
      const TypeCounts s = subgroup_counts(g, n);
      const TypeCounts c = conjugacy_class_counts(g, n);
      for (CoveringType t : admissible_types(g)) {
        CHECK(s.at(t) == s_closed(g, t, n));
        CHECK(c.at(t) == c_closed(g, t, n));
      }
    }
}
