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
#include <json.hpp>

#include "covers/parallel.hpp"
#include "covers/verify.hpp"

using namespace covers;

TEST_CASE("suite names") {
  CHECK(parse_suite("formulas") == Suite::Formulas);
  CHECK(parse_suite("ALL") == Suite::All);
  CHECK(to_string(Suite::Dirichlet) == "dirichlet");
  CHECK_THROWS_AS(parse_suite("everything"), InvalidArgument);
}

TEST_CASE("parallel_map keeps index order and propagates errors") {
  for (unsigned t : {1u, 2u, 7u}) {
    const auto v = parallel_map(100, t, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  }
  CHECK_THROWS_AS(parallel_map(50, 4,
                               [](std::size_t i) -> int {
                                 if (i >= 10) throw InvalidArgument("bad " + std::to_string(i));
                                 return 0;
                               }),
                  InvalidArgument);
}

TEST_CASE("each suite passes at small bounds") {
  for (Suite s : {Suite::Formulas, Suite::Lattice, Suite::Words, Suite::Dirichlet}) {
    const Report r = run_verification(s, 12, 2);
    CAPTURE(to_string(s));
    CHECK(r.passed());
    CHECK(r.first_failure() == nullptr);
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("report json is versioned and independent of thread count") {
  const Report a = run_verification(Suite::All, 10, 1);
  const Report b = run_verification(Suite::All, 10, 5);
  CHECK(a.to_json() == b.to_json());
  const auto doc = nlohmann::json::parse(a.to_json());
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["suite"] == "all");
  CHECK(doc["nmax"] == 10);
  CHECK(doc["passed"] == true);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("bound"));
    CHECK(c.contains("verdict"));
  }
}

TEST_CASE("dirichlet suite lists the errata separately") {
  const Report r = run_verification(Suite::Dirichlet, 200, 0);
  CHECK(r.passed());
  REQUIRE(r.errata.size() == 4);
  const std::vector<std::pair<std::string, i64>> want{{"formvi", 3}, {"formvii", 2}, {"formviii", 4}, {"formxi", 2}};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(r.errata[i].label == want[i].first);
    CHECK(r.errata[i].first_mismatch == want[i].second);
    CHECK(r.errata[i].corrected_agrees);
  }
  const auto doc = nlohmann::json::parse(r.to_json());
  int erratum_verdicts = 0;
  for (const auto& c : doc["checks"]) erratum_verdicts += c["verdict"] == "erratum";
  CHECK(erratum_verdicts == 4);
}

TEST_CASE("bad bounds are rejected") {
  CHECK_THROWS_AS(run_verification(Suite::Words, 0, 1), InvalidArgument);
}
