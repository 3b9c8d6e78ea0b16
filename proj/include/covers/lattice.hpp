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

// Finite-index sublattices of Z^2 and Z^3 in generator normal form.
//
// A sublattice of Z^2 with index n is generated by (a, 0) and (mu, b) with
// a * b = n and 0 <= mu < a; this form is unique. For Z^3 the generators
// are (a,0,0), (mu,b,0), (nu,lambda,c) with 0 <= mu, nu < a, 0 <= lambda < b.
//
// The automorphism ell(u, v) = (-v, u - v) has order 3. It is the action of
// conjugation by z on the translation subgroup of the tricosm group.

#ifndef COVERS_LATTICE_HPP_
#define COVERS_LATTICE_HPP_

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "covers/checked.hpp"

namespace covers {

struct Vec2 {
  i64 u = 0;
  i64 v = 0;

  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 p, Vec2 q) { return {add(p.u, q.u), add(p.v, q.v)}; }
inline Vec2 operator-(Vec2 p, Vec2 q) { return {sub(p.u, q.u), sub(p.v, q.v)}; }
inline Vec2 operator-(Vec2 p) { return {neg(p.u), neg(p.v)}; }
inline Vec2 operator*(i64 k, Vec2 p) { return {mul(k, p.u), mul(k, p.v)}; }

// Integer 2x2 matrix acting on column vectors: (u, v) -> (m00 u + m01 v,
// m10 u + m11 v).
struct Mat2 {
  i64 m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  static Mat2 identity() { return {}; }
};

Vec2 operator*(const Mat2& m, Vec2 p);
Mat2 operator*(const Mat2& m, const Mat2& n);
Mat2 power(const Mat2& m, i64 k);  // k >= 0

// The matrix of ell, columns (0, 1) and (-1, -1).
inline constexpr Mat2 kEll{0, -1, 1, -1};

Vec2 apply_ell(Vec2 p);

struct SublatticeHNF2 {
  i64 a = 1;
  i64 b = 1;
  i64 mu = 0;

  i64 index() const { return a * b; }
  Vec2 first() const { return {a, 0}; }
  Vec2 second() const { return {mu, b}; }
  bool contains(Vec2 p) const;

  friend auto operator<=>(const SublatticeHNF2&, const SublatticeHNF2&) = default;
};

struct SublatticeHNF3 {
  i64 a = 1, b = 1, c = 1;
  i64 mu = 0, nu = 0, lambda = 0;

  i64 index() const { return a * b * c; }
  friend auto operator<=>(const SublatticeHNF3&, const SublatticeHNF3&) = default;
};

// Throws InvalidArgument if the fields violate the normal-form bounds.
void validate(const SublatticeHNF2& h);

// Normal form of the lattice spanned by `gens`, which must have rank 2
// (PreconditionError otherwise). Pure integer Euclidean reduction.
SublatticeHNF2 hnf_of(std::span<const Vec2> gens);

// The image m(H), renormalized. m must be invertible over Z.
SublatticeHNF2 transform(const Mat2& m, const SublatticeHNF2& h);

std::vector<SublatticeHNF2> sublattices2(i64 n);
std::vector<SublatticeHNF3> sublattices3(i64 n);

bool is_ell_invariant(const SublatticeHNF2& h);
bool is_invariant(const Mat2& m, const SublatticeHNF2& h);
std::vector<SublatticeHNF2> ell_invariant_sublattices(i64 n);

// Canonical representative (i, j) of p + H with 0 <= i < a, 0 <= j < b.
Vec2 reduce_mod(const SublatticeHNF2& h, Vec2 p);

// |Z^2 / <H, extra>|, via the normal form of the joint generating set.
i64 quotient_order(const SublatticeHNF2& h, std::span<const Vec2> extra);

// Cosets v of Z^2/H with 2v = 0.
i64 two_torsion_cosets(const SublatticeHNF2& h);
// Cosets v with ell(v) = v. Requires ell(H) = H (PreconditionError).
i64 ell_fixed_cosets(const SublatticeHNF2& h);

// All canonical coset representatives of Z^2/H, ordered by (i, j).
std::vector<Vec2> coset_representatives(const SublatticeHNF2& h);

// Direct scan over coset representatives, independent of the determinant
// route above.
i64 count_cosets_where(const SublatticeHNF2& h,
                       const std::function<bool(Vec2)>& pred);
i64 two_torsion_cosets_by_scan(const SublatticeHNF2& h);
i64 ell_fixed_cosets_by_scan(const SublatticeHNF2& h);

}  // namespace covers

#endif  // COVERS_LATTICE_HPP_
