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

// Divisor-sum arithmetic functions used by the counting formulas.
//
// Every function has two entry points: one taking a positive integer n
// (n = 0 is rejected with InvalidArgument) and one taking a Ratio n/d,
// which evaluates to 0 whenever d does not divide n. The second form is
// what the closed formulas use for arguments like omega(n/3).
//
// theta(n) counts pairs (p, q) with p > q >= 0 and p^2 - pq + q^2 = n.
// The half-open sector is a fundamental domain for the six units of the
// Eisenstein lattice; the closed-on-both-sides set {p > 0, q >= 0}
// counts (1,0) and (1,1) separately and would give theta(1) = 2.

#ifndef COVERS_ARITH_HPP_
#define COVERS_ARITH_HPP_

#include <vector>

#include "covers/checked.hpp"

namespace covers {

// The argument num/den of a vanishing-convention evaluation.
struct Ratio {
  i64 num;
  i64 den;
};

inline constexpr Ratio over(i64 num, i64 den) { return Ratio{num, den}; }

// Throws InvalidArgument unless n >= 1.
void require_positive(i64 n, const char* what);

// Sorted positive divisors of n.
std::vector<i64> divisors(i64 n);

// sum_{k|n} k^j for j in {0, 1}.
i64 divisor_sigma(int j, i64 n);
i64 sigma0(i64 n);
i64 sigma1(i64 n);
// sum_{k|n} sigma1(k)
i64 sigma2(i64 n);
// sum_{k|n} k * sigma1(k): the number of index-n sublattices of Z^3.
i64 omega_fn(i64 n);
// The nontrivial character mod 3: 1, -1, 0 for n = 1, 2, 0 (mod 3).
int chi(i64 n);
// Sector count of norm-n Eisenstein integers.
i64 theta(i64 n);
// sum_{k|n} chi(k)
i64 theta_via_character(i64 n);
// sigma1(n) + 3 sigma1(n/2): pairs (H, v) with [Z^2:H] = n and 2v = 0.
i64 s_halves(i64 n);
// theta(n) + 2 theta(n/3): pairs (H, v) with H, v fixed by the order-3
// automorphism (x, y) -> (-y, x - y).
i64 t_thirds(i64 n);

i64 sigma0(Ratio r);
i64 sigma1(Ratio r);
i64 sigma2(Ratio r);
i64 omega_fn(Ratio r);
i64 theta(Ratio r);
i64 s_halves(Ratio r);
i64 t_thirds(Ratio r);

}  // namespace covers

#endif  // COVERS_ARITH_HPP_
