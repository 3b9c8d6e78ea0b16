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

#include "covers/arith.hpp"

#include <algorithm>
#include <string>

namespace covers {

namespace {

i64 isqrt(i64 x) {
  if (x < 0) return -1;
  auto r = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

template <class F>
i64 vanishing(Ratio r, F f) {
  require_positive(r.den, "ratio denominator");
  if (r.num <= 0 || r.num % r.den != 0) return 0;
  return f(r.num / r.den);
}

}  // namespace

void require_positive(i64 n, const char* what) {
  if (n < 1)
    throw InvalidArgument(std::string(what) + " must be a positive integer, got " +
                          std::to_string(n));
}

std::vector<i64> divisors(i64 n) {
  require_positive(n, "n");
  std::vector<i64> small, large;
  for (i64 k = 1; k <= n / k; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

i64 divisor_sigma(int j, i64 n) {
  if (j != 0 && j != 1) throw InvalidArgument("divisor_sigma: j must be 0 or 1");
  require_positive(n, "n");
  i64 s = 0;
  for (i64 k : divisors(n)) s = add(s, j == 0 ? 1 : k);
  return s;
}

i64 sigma0(i64 n) { return divisor_sigma(0, n); }
i64 sigma1(i64 n) { return divisor_sigma(1, n); }

i64 sigma2(i64 n) {
  i64 s = 0;
  for (i64 k : divisors(n)) s = add(s, sigma1(k));
  return s;
}

i64 omega_fn(i64 n) {
  i64 s = 0;
  for (i64 k : divisors(n)) s = add(s, mul(k, sigma1(k)));
  return s;
}

int chi(i64 n) {
  require_positive(n, "n");
  switch (n % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

i64 theta(i64 n) {
  require_positive(n, "n");
  // p^2 - pq + q^2 >= 3p^2/4 on 0 <= q < p, so p <= sqrt(4n/3).
  // For fixed p the equation in q has roots (p +- sqrt(4n - 3p^2)) / 2.
  i64 count = 0;
  for (i64 p = 1; 3 * p * p <= 4 * n; ++p) {
    const i64 disc = 4 * n - 3 * p * p;
    const i64 s = isqrt(disc);
    if (s * s != disc) continue;
    for (i64 twice_q : {p - s, p + s}) {
      if (twice_q % 2 != 0) continue;
      const i64 q = twice_q / 2;
      if (q >= 0 && q < p) ++count;
      if (s == 0) break;
    }
  }
  return count;
}

i64 theta_via_character(i64 n) {
  i64 s = 0;
  for (i64 k : divisors(n)) s += chi(k);
  return s;
}

i64 s_halves(i64 n) {
  require_positive(n, "n");
  return add(sigma1(n), mul(3, sigma1(over(n, 2))));
}

i64 t_thirds(i64 n) {
  require_positive(n, "n");
  return add(theta(n), mul(2, theta(over(n, 3))));
}

i64 sigma0(Ratio r) { return vanishing(r, [](i64 m) { return sigma0(m); }); }
i64 sigma1(Ratio r) { return vanishing(r, [](i64 m) { return sigma1(m); }); }
i64 sigma2(Ratio r) { return vanishing(r, [](i64 m) { return sigma2(m); }); }
i64 omega_fn(Ratio r) { return vanishing(r, [](i64 m) { return omega_fn(m); }); }
i64 theta(Ratio r) { return vanishing(r, [](i64 m) { return theta(m); }); }
i64 s_halves(Ratio r) { return vanishing(r, [](i64 m) { return s_halves(m); }); }
i64 t_thirds(Ratio r) { return vanishing(r, [](i64 m) { return t_thirds(m); }); }

}  // namespace covers
