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

// Canonical-form arithmetic in the fundamental groups of the tricosm (G3)
// and the hexacosm (G5):
//
//   G3 = < x, y, z | [x,y] = 1, z x z^-1 = y,     z y z^-1 = (x y)^-1 >
//   G5 = < x, y, z | [x,y] = 1, z x z^-1 = x y,   z y z^-1 = x^-1 >
//
// Every element is uniquely x^a y^b z^c, and
//   x^a y^b z^c * x^d y^e z^f = x^{(a,b) + M_c (d,e)} z^{c+f},
// where M_c is the action of conjugation by z^c on the exponent vector of
// the translation subgroup Gamma = <x, y>. For G3, M_c = ell^(c mod 3);
// for G5, M_c = m^(c mod 6) with m(p, q) = (p - q, p), and m^2 = ell.

#ifndef COVERS_WORDS_HPP_
#define COVERS_WORDS_HPP_

#include <array>
#include <span>
#include <string>

#include "covers/lattice.hpp"

namespace covers {

enum class GroupId { G3, G5 };

std::string to_string(GroupId g);
// Period of the z-action on Gamma: 3 for G3, 6 for G5.
int z_period(GroupId g);

// Rows of the multiplication table, one matrix per residue of c.
inline constexpr std::array<Mat2, 3> kTableG3{{
    {1, 0, 0, 1},     // c = 0 mod 3: (d, e)
    {0, -1, 1, -1},   // c = 1 mod 3: (-e, d - e)
    {-1, 1, -1, 0},   // c = 2 mod 3: (-d + e, -d)
}};

inline constexpr std::array<Mat2, 6> kTableG5{{
    {1, 0, 0, 1},     // c = 0 mod 6: (d, e)
    {1, -1, 1, 0},    // c = 1 mod 6: (d - e, d)
    {0, -1, 1, -1},   // c = 2 mod 6: (-e, d - e)
    {-1, 0, 0, -1},   // c = 3 mod 6: (-d, -e)
    {-1, 1, -1, 0},   // c = 4 mod 6: (-d + e, -d)
    {0, 1, -1, 1},    // c = 5 mod 6: (e, -d + e)
}};

// The z-action matrix M_c for any integer c.
const Mat2& z_action(GroupId g, i64 c);

struct Word {
  GroupId group = GroupId::G3;
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;

  Vec2 gamma() const { return {a, b}; }
  bool in_gamma() const { return c == 0; }
  friend bool operator==(const Word&, const Word&) = default;
};

inline Word identity(GroupId g) { return {g, 0, 0, 0}; }
inline Word gen_x(GroupId g) { return {g, 1, 0, 0}; }
inline Word gen_y(GroupId g) { return {g, 0, 1, 0}; }
inline Word gen_z(GroupId g) { return {g, 0, 0, 1}; }
inline Word from_gamma(GroupId g, Vec2 p, i64 c = 0) { return {g, p.u, p.v, c}; }

// Group operations. Mixing groups throws InvalidArgument.
Word mul(const Word& w1, const Word& w2);
Word inv(const Word& w);
// g w g^-1
Word conj(const Word& w, const Word& g);
Word pow(const Word& w, i64 k);
Word commutator(const Word& w1, const Word& w2);  // w1 w2 w1^-1 w2^-1
// The projection to Z: x^a y^b z^c -> c.
inline i64 phi(const Word& w) { return w.c; }

Word operator*(const Word& w1, const Word& w2);

// "x^2 y^-1 z^3" style rendering; "1" for the identity.
std::string to_string(const Word& w);

}  // namespace covers

#endif  // COVERS_WORDS_HPP_
