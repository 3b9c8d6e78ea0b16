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

#include "covers/formulas.hpp"

#include <cctype>
#include <numeric>

namespace covers {

std::string to_string(CountKind k) { return k == CountKind::Subgroups ? "s" : "c"; }

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

GroupId parse_group(std::string_view text) {
  const std::string t = lower(text);
  if (t == "g3") return GroupId::G3;
  if (t == "g5") return GroupId::G5;
  throw InvalidArgument("unknown group '" + std::string(text) + "' (expected g3 or g5)");
}

CoveringType parse_covering_type(std::string_view text) {
  const std::string t = lower(text);
  if (t == "z3") return CoveringType::Z3;
  if (t == "g2") return CoveringType::G2;
  if (t == "g3") return CoveringType::G3;
  if (t == "g5") return CoveringType::G5;
  throw InvalidArgument("unknown covering type '" + std::string(text) +
                        "' (expected z3, g2, g3 or g5)");
}

CountKind parse_count_kind(std::string_view text) {
  const std::string t = lower(text);
  if (t == "s") return CountKind::Subgroups;
  if (t == "c") return CountKind::Classes;
  throw InvalidArgument("unknown count kind '" + std::string(text) + "' (expected s or c)");
}

i64 theta_sum(Ratio m) {
  require_positive(m.den, "ratio denominator");
  if (m.num % m.den != 0) return 0;
  i64 s = 0;
  for (i64 k : divisors(m.num / m.den)) s = add(s, theta(k));
  return s;
}

i64 weighted_theta_sum(Ratio m) {
  require_positive(m.den, "ratio denominator");
  if (m.num % m.den != 0) return 0;
  i64 s = 0;
  for (i64 k : divisors(m.num / m.den)) s = add(s, mul(k, theta(k)));
  return s;
}

namespace {

i64 exact_div(i64 num, i64 den, const char* which) {
  if (num % den != 0)
    throw InternalError(std::string("non-integral class count in ") + which);
  return num / den;
}

}  // namespace

i64 s_closed(GroupId g, CoveringType t, i64 n) {
  require_positive(n, "n");
  require_admissible(g, t);
  if (g == GroupId::G3) {
    if (t == CoveringType::G3) return sub(weighted_theta_sum(over(n, 1)), weighted_theta_sum(over(n, 3)));
    return omega_fn(over(n, 3));
  }
  switch (t) {
    case CoveringType::G5: {
      i64 s = 0;
      for (i64 k : divisors(n))
        if (std::gcd(n / k, i64{6}) == 1) s = add(s, mul(k, theta(k)));
      return s;
    }
    case CoveringType::G3:
      return sub(weighted_theta_sum(over(n, 2)), weighted_theta_sum(over(n, 6)));
    case CoveringType::G2:
      return sub(omega_fn(over(n, 3)), omega_fn(over(n, 6)));
    case CoveringType::Z3:
      return omega_fn(over(n, 6));
  }
  throw InternalError("unreachable covering type");
}

i64 c_closed(GroupId g, CoveringType t, i64 n) {
  require_positive(n, "n");
  require_admissible(g, t);
  if (g == GroupId::G3) {
    if (t == CoveringType::G3)
      return sub(add(theta_sum(over(n, 1)), theta_sum(over(n, 3))), mul(2, theta_sum(over(n, 9))));
    const i64 num = add(add(omega_fn(over(n, 3)), mul(2, theta_sum(over(n, 3)))),
                        mul(4, theta_sum(over(n, 9))));
    return exact_div(num, 3, "c(Z3, G3)");
  }
  switch (t) {
    case CoveringType::G5: {
      i64 s = 0;
      for (i64 k : divisors(n))
        if (std::gcd(n / k, i64{6}) == 1) s = add(s, theta(k));
      return s;
    }
    case CoveringType::G3:
      return sub(theta_sum(over(n, 2)), theta_sum(over(n, 18)));
    case CoveringType::G2: {
      i64 num = add(sigma2(over(n, 3)), mul(2, sigma2(over(n, 6))));
      num = sub(num, mul(3, sigma2(over(n, 12))));
      num = add(num, mul(2, theta_sum(over(n, 3))));
      num = sub(num, mul(2, theta_sum(over(n, 6))));
      return exact_div(num, 3, "c(G2, G5)");
    }
    case CoveringType::Z3: {
      i64 num = add(omega_fn(over(n, 6)), sigma2(over(n, 6)));
      num = add(num, mul(3, sigma2(over(n, 12))));
      num = add(num, mul(4, theta_sum(over(n, 6))));
      num = add(num, mul(4, theta_sum(over(n, 18))));
      return exact_div(num, 6, "c(Z3, G5)");
    }
  }
  throw InternalError("unreachable covering type");
}

i64 closed_count(GroupId g, CountKind kind, CoveringType t, i64 n) {
  return kind == CountKind::Subgroups ? s_closed(g, t, n) : c_closed(g, t, n);
}

}  // namespace covers
