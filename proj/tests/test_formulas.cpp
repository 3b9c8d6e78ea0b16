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

#include "covers/formulas.hpp"

using namespace covers;

namespace {
constexpr GroupId G3 = GroupId::G3;
constexpr GroupId G5 = GroupId::G5;
}  // namespace

TEST_CASE("subgroup closed forms at reference points") {
  CHECK(s_closed(G3, CoveringType::Z3, 2) == 0);
  CHECK(s_closed(G3, CoveringType::G3, 4) == 5);
  CHECK(s_closed(G5, CoveringType::G5, 7) == 15);
  const std::vector<i64> g3{1, 1, 3, 5};
  for (i64 n = 1; n <= 4; ++n) CHECK(s_closed(G3, CoveringType::G3, n) == g3[static_cast<std::size_t>(n - 1)]);
  CHECK(s_closed(G3, CoveringType::Z3, 3) == 1);
  CHECK(s_closed(G3, CoveringType::Z3, 6) == 7);
  CHECK(s_closed(G3, CoveringType::Z3, 12) == 35);
}

TEST_CASE("class closed forms at reference points") {
  CHECK(c_closed(G3, CoveringType::G3, 3) == 3);
  CHECK(c_closed(G3, CoveringType::G3, 9) == 3);
  CHECK(c_closed(G3, CoveringType::Z3, 9) == 7);
  CHECK(c_closed(G5, CoveringType::G2, 12) == 6);
  CHECK(c_closed(G5, CoveringType::Z3, 18) == 5);
  CHECK(c_closed(G5, CoveringType::Z3, 6) == 1);
  CHECK(c_closed(G5, CoveringType::G3, 6) == 2);
  CHECK(c_closed(G5, CoveringType::G2, 6) == 2);
}

TEST_CASE("index one is the ambient group only") {
  for (GroupId g : {G3, G5})
    for (CoveringType t : admissible_types(g)) {
      const i64 want = t == ambient_type(g) ? 1 : 0;
      CHECK(s_closed(g, t, 1) == want);
      CHECK(c_closed(g, t, 1) == want);
    }
}

TEST_CASE("class counts are integral and bounded by subgroup counts") {
  for (i64 n = 1; n <= 1000; ++n) {
    i64 s5 = 0, c5 = 0;
    for (GroupId g : {G3, G5})
      for (CoveringType t : admissible_types(g)) {
        const i64 s = s_closed(g, t, n);
        const i64 c = c_closed(g, t, n);  // throws InternalError if non-integral
        REQUIRE(c >= 0);
        REQUIRE(c <= s);
        if (g == G5) {
          s5 += s;
          c5 += c;
        }
      }
    REQUIRE(s5 >= c5);
  }
}

TEST_CASE("inadmissible and invalid input") {
  CHECK_THROWS_AS(s_closed(G3, CoveringType::G2, 3), InvalidArgument);
  CHECK_THROWS_AS(c_closed(G3, CoveringType::G5, 3), InvalidArgument);
  CHECK_THROWS_AS(s_closed(G5, CoveringType::Z3, 0), InvalidArgument);
  CHECK_THROWS_AS(closed_count(G5, CountKind::Classes, CoveringType::Z3, -2), InvalidArgument);
}

TEST_CASE("name parsing") {
  CHECK(parse_group("G3") == G3);
  CHECK(parse_group("g5") == G5);
  CHECK(parse_covering_type("Z3") == CoveringType::Z3);
  CHECK(parse_covering_type("g2") == CoveringType::G2);
  CHECK(parse_count_kind("S") == CountKind::Subgroups);
  CHECK(parse_count_kind("c") == CountKind::Classes);
  CHECK_THROWS_AS(parse_group("g4"), InvalidArgument);
  CHECK_THROWS_AS(parse_covering_type(""), InvalidArgument);
  CHECK_THROWS_AS(parse_count_kind("x"), InvalidArgument);
  CHECK(to_string(CountKind::Subgroups) == "s");
}

TEST_CASE("theta sums") {
  CHECK(theta_sum(over(7, 1)) == 3);   // theta(1) + theta(7)
  CHECK(theta_sum(over(7, 3)) == 0);
  CHECK(weighted_theta_sum(over(7, 1)) == 15);
  CHECK(weighted_theta_sum(over(4, 1)) == 5);
}
