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

#include "covers/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "covers/arith.hpp"

namespace covers {

Vec2 operator*(const Mat2& m, Vec2 p) {
  return {add(mul(m.m00, p.u), mul(m.m01, p.v)),
          add(mul(m.m10, p.u), mul(m.m11, p.v))};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {add(mul(m.m00, n.m00), mul(m.m01, n.m10)),
          add(mul(m.m00, n.m01), mul(m.m01, n.m11)),
          add(mul(m.m10, n.m00), mul(m.m11, n.m10)),
          add(mul(m.m10, n.m01), mul(m.m11, n.m11))};
}

Mat2 power(const Mat2& m, i64 k) {
  if (k < 0) throw InvalidArgument("matrix power: negative exponent");
  Mat2 r = Mat2::identity();
  for (i64 i = 0; i < k; ++i) r = r * m;
  return r;
}

Vec2 apply_ell(Vec2 p) { return kEll * p; }

bool SublatticeHNF2::contains(Vec2 p) const {
  if (floor_mod(p.v, b) != 0) return false;
  const i64 k = p.v / b;
  return floor_mod(sub(p.u, mul(k, mu)), a) == 0;
}

void validate(const SublatticeHNF2& h) {
  if (h.a < 1 || h.b < 1 || h.mu < 0 || h.mu >= h.a)
    throw InvalidArgument("sublattice normal form requires a, b >= 1 and 0 <= mu < a; got (" +
                          std::to_string(h.a) + "," + std::to_string(h.b) + "," +
                          std::to_string(h.mu) + ")");
}

SublatticeHNF2 hnf_of(std::span<const Vec2> gens) {
  Vec2 pivot{0, 0};
  i64 g1 = 0;  // generator of the lattice's intersection with the u-axis
  for (Vec2 v : gens) {
    while (v.v != 0) {
      const i64 q = pivot.v / v.v;
      pivot = pivot - q * v;
      std::swap(pivot, v);
    }
    g1 = std::gcd(g1, v.u < 0 ? neg(v.u) : v.u);
    if (g1 > 0) pivot.u = floor_mod(pivot.u, g1);
  }
  if (pivot.v == 0 || g1 == 0) throw PreconditionError("generating set does not have rank 2");
  if (pivot.v < 0) pivot = -pivot;
  return {g1, pivot.v, floor_mod(pivot.u, g1)};
}

SublatticeHNF2 transform(const Mat2& m, const SublatticeHNF2& h) {
  const Vec2 gens[] = {m * h.first(), m * h.second()};
  return hnf_of(gens);
}

std::vector<SublatticeHNF2> sublattices2(i64 n) {
  require_positive(n, "n");
  std::vector<SublatticeHNF2> out;
  for (i64 a : divisors(n))
    for (i64 mu = 0; mu < a; ++mu) out.push_back({a, n / a, mu});
  return out;
}

std::vector<SublatticeHNF3> sublattices3(i64 n) {
  require_positive(n, "n");
  std::vector<SublatticeHNF3> out;
  for (i64 a : divisors(n)) {
    for (i64 b : divisors(n / a)) {
      const i64 c = n / a / b;
      for (i64 mu = 0; mu < a; ++mu)
        for (i64 nu = 0; nu < a; ++nu)
          for (i64 lambda = 0; lambda < b; ++lambda)
            out.push_back({a, b, c, mu, nu, lambda});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_invariant(const Mat2& m, const SublatticeHNF2& h) {
  return h.contains(m * h.first()) && h.contains(m * h.second());
}

bool is_ell_invariant(const SublatticeHNF2& h) { return is_invariant(kEll, h); }

std::vector<SublatticeHNF2> ell_invariant_sublattices(i64 n) {
  auto all = sublattices2(n);
  std::erase_if(all, [](const SublatticeHNF2& h) { return !is_ell_invariant(h); });
  return all;
}

Vec2 reduce_mod(const SublatticeHNF2& h, Vec2 p) {
  const i64 k = floor_div(p.v, h.b);
  p = p - k * h.second();
  p.u = floor_mod(p.u, h.a);
  return p;
}

i64 quotient_order(const SublatticeHNF2& h, std::span<const Vec2> extra) {
  std::vector<Vec2> gens{h.first(), h.second()};
  gens.insert(gens.end(), extra.begin(), extra.end());
  return hnf_of(gens).index();
}

i64 two_torsion_cosets(const SublatticeHNF2& h) {
  const Vec2 extra[] = {{2, 0}, {0, 2}};
  return quotient_order(h, extra);
}

i64 ell_fixed_cosets(const SublatticeHNF2& h) {
  if (!is_ell_invariant(h))
    throw PreconditionError("ell_fixed_cosets: lattice is not ell-invariant");
  // Image of (I - ell): (1,0) -> (1,-1), (0,1) -> (1,2).
  const Vec2 extra[] = {{1, -1}, {1, 2}};
  return quotient_order(h, extra);
}

std::vector<Vec2> coset_representatives(const SublatticeHNF2& h) {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(h.index()));
  for (i64 i = 0; i < h.a; ++i)
    for (i64 j = 0; j < h.b; ++j) out.push_back({i, j});
  return out;
}

i64 count_cosets_where(const SublatticeHNF2& h, const std::function<bool(Vec2)>& pred) {
  i64 count = 0;
  for (i64 i = 0; i < h.a; ++i)
    for (i64 j = 0; j < h.b; ++j)
      if (pred({i, j})) ++count;
  return count;
}

i64 two_torsion_cosets_by_scan(const SublatticeHNF2& h) {
  return count_cosets_where(h, [&](Vec2 r) { return h.contains(2 * r); });
}

i64 ell_fixed_cosets_by_scan(const SublatticeHNF2& h) {
  if (!is_ell_invariant(h))
    throw PreconditionError("ell_fixed_cosets_by_scan: lattice is not ell-invariant");
  return count_cosets_where(h, [&](Vec2 r) { return h.contains(apply_ell(r) - r); });
}

}  // namespace covers
