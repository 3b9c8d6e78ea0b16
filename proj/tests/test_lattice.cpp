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

#include <algorithm>
#include <set>

#include "covers/arith.hpp"
#include "covers/lattice.hpp"
#include "oracles.hpp"

using namespace covers;

namespace {

const SublatticeHNF2 kId{1, 1, 0};
const SublatticeHNF2 kH3{3, 1, 2};  // <(3,0),(2,1)>

// The subgroup of (Z/n)^2 generated by the images of h's basis, as a set;
// a lattice of index dividing n^2 contains n Z^2 when its index divides n.
std::set<std::pair<i64, i64>> image_mod(const SublatticeHNF2& h, i64 n) {
  std::set<std::pair<i64, i64>> s;
  for (i64 i = 0; i < n; ++i)
    for (i64 j = 0; j < n; ++j) {
      const Vec2 v = i * h.first() + j * h.second();
      s.insert({floor_mod(v.u, n), floor_mod(v.v, n)});
    }
  return s;
}

}  // namespace

TEST_CASE("ell acts as the order-3 matrix") {
  CHECK(apply_ell({1, 0}) == Vec2{0, 1});
  CHECK(apply_ell({0, 1}) == Vec2{-1, -1});
  for (i64 u = -4; u <= 4; ++u)
    for (i64 v = -4; v <= 4; ++v) CHECK(apply_ell(apply_ell(apply_ell({u, v}))) == Vec2{u, v});
}

TEST_CASE("index-n sublattices of Z^2") {
  CHECK(sublattices2(1) == std::vector<SublatticeHNF2>{kId});
  CHECK(sublattices2(2) ==
        std::vector<SublatticeHNF2>{{1, 2, 0}, {2, 1, 0}, {2, 1, 1}});
  CHECK(sublattices2(6).size() == 12);
  for (i64 n = 1; n <= 60; ++n) {
    const auto all = sublattices2(n);
    CHECK(static_cast<i64>(all.size()) == sigma1(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& h : all) {
      CHECK(h.index() == n);
      CHECK_NOTHROW(validate(h));
    }
  }
}

TEST_CASE("normal forms are distinct lattices") {
  // Distinct normal forms must generate distinct subgroups mod n.
  for (i64 n : {4, 6, 9, 12}) {
    std::set<std::set<std::pair<i64, i64>>> images;
    for (const auto& h : sublattices2(n)) images.insert(image_mod(h, n));
    CHECK(static_cast<i64>(images.size()) == sigma1(n));
  }
}

TEST_CASE("index-n sublattices of Z^3") {
  CHECK(sublattices3(1).size() == 1);
  CHECK(sublattices3(2).size() == 7);
  CHECK(sublattices3(4).size() == 35);
  for (i64 n = 1; n <= 30; ++n) {
    const auto all = sublattices3(n);
    CHECK(static_cast<i64>(all.size()) == oracle::omega(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("ell-invariant sublattices") {
  CHECK(ell_invariant_sublattices(1) == std::vector<SublatticeHNF2>{kId});
  CHECK(ell_invariant_sublattices(2).empty());
  CHECK(ell_invariant_sublattices(3) == std::vector<SublatticeHNF2>{kH3});
  for (i64 n = 1; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(static_cast<i64>(ell_invariant_sublattices(n).size()) == theta(n));
  }
  for (i64 n = 1; n <= 40; ++n) CHECK(theta(n) == oracle::theta(n));
}

TEST_CASE("hnf_of reduces arbitrary generating sets") {
  const std::vector<Vec2> g1{{2, 1}, {-1, 1}};
  CHECK(hnf_of(g1) == kH3);
  const std::vector<Vec2> g2{{2, 0}, {0, 2}, {1, 1}};
  CHECK(hnf_of(g2) == SublatticeHNF2{2, 1, 1});
  const std::vector<Vec2> g3{{6, 4}, {4, 6}, {0, 0}};
  CHECK(hnf_of(g3).index() == 20);
  const std::vector<Vec2> rank1{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(hnf_of(rank1), PreconditionError);
  const std::vector<Vec2> none;
  CHECK_THROWS_AS(hnf_of(none), PreconditionError);
  for (i64 n = 1; n <= 30; ++n)
    for (const auto& h : sublattices2(n)) {
      const std::vector<Vec2> basis{h.first() + 3 * h.second(), h.second(), h.first()};
      CHECK(hnf_of(basis) == h);
    }
}

TEST_CASE("invariance and transform") {
  CHECK(is_ell_invariant(kId));
  CHECK(is_ell_invariant(kH3));
  CHECK_FALSE(is_ell_invariant({2, 1, 0}));
  CHECK(transform(kEll, kH3) == kH3);
  CHECK(transform(kEll, {2, 1, 0}) == SublatticeHNF2{2, 1, 1});  // <(0,2),(-1,-1)>
  for (i64 n = 1; n <= 30; ++n)
    for (const auto& h : sublattices2(n))
      CHECK(is_ell_invariant(h) == (transform(kEll, h) == h));
}

TEST_CASE("coset reduction") {
  CHECK(reduce_mod(kId, {5, -7}) == Vec2{0, 0});
  CHECK(reduce_mod(kH3, {0, 1}) == Vec2{1, 0});
  CHECK(reduce_mod(kH3, {1, 2}) == Vec2{0, 0});
  for (const auto& h : sublattices2(12)) {
    for (i64 u = -6; u <= 6; ++u)
      for (i64 v = -6; v <= 6; ++v) {
        const Vec2 r = reduce_mod(h, {u, v});
        CHECK(h.contains(Vec2{u, v} - r));
        CHECK(r.u >= 0);
        CHECK(r.v >= 0);
        CHECK(r.v < h.b);
        CHECK(r.u < h.a);
      }
    CHECK(static_cast<i64>(coset_representatives(h).size()) == h.index());
  }
}

TEST_CASE("ell descends to the quotient") {
  for (i64 n = 1; n <= 40; ++n)
    for (const auto& h : ell_invariant_sublattices(n))
      for (i64 u = -5; u <= 5; ++u)
        for (i64 v = -5; v <= 5; ++v)
          CHECK(reduce_mod(h, apply_ell(reduce_mod(h, {u, v}))) == reduce_mod(h, apply_ell({u, v})));
}

TEST_CASE("quotient orders") {
  const std::vector<Vec2> any{{5, 7}};
  CHECK(quotient_order(kId, any) == 1);
  const std::vector<Vec2> diag{{1, 1}};
  CHECK(quotient_order({2, 2, 0}, diag) == 2);
  const std::vector<Vec2> fix{{1, -1}, {1, 2}};
  CHECK(quotient_order(kH3, fix) == 3);
}

TEST_CASE("two-torsion and ell-fixed cosets") {
  CHECK(two_torsion_cosets(kId) == 1);
  CHECK(two_torsion_cosets({2, 2, 0}) == 4);
  CHECK(two_torsion_cosets({2, 1, 1}) == 2);
  CHECK(ell_fixed_cosets(kId) == 1);
  CHECK(ell_fixed_cosets(kH3) == 3);
  CHECK(ell_fixed_cosets({2, 2, 0}) == 1);
  CHECK_THROWS_AS(ell_fixed_cosets({2, 1, 0}), PreconditionError);
}

TEST_CASE("determinant route equals scan") {
  for (i64 n = 1; n <= 40; ++n)
    for (const auto& h : sublattices2(n)) {
      CHECK(two_torsion_cosets(h) == two_torsion_cosets_by_scan(h));
      if (is_ell_invariant(h)) CHECK(ell_fixed_cosets(h) == ell_fixed_cosets_by_scan(h));
    }
}

TEST_CASE("summed coset counts give S and T") {
  for (i64 n = 1; n <= 120; ++n) {
    i64 s = 0, t = 0;
    for (const auto& h : sublattices2(n)) s += two_torsion_cosets(h);
    for (const auto& h : ell_invariant_sublattices(n)) t += ell_fixed_cosets(h);
    CHECK(s == s_halves(n));
    CHECK(t == t_thirds(n));
  }
}

TEST_CASE("invalid lattice input") {
  CHECK_THROWS_AS(sublattices2(0), InvalidArgument);
  CHECK_THROWS_AS(sublattices3(-1), InvalidArgument);
  CHECK_THROWS_AS(ell_invariant_sublattices(0), InvalidArgument);
  CHECK_THROWS_AS(validate(SublatticeHNF2{2, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(validate(SublatticeHNF2{0, 1, 0}), InvalidArgument);
}
