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

// Cross-check suites: brute force against closed forms, lattice identities,
// group laws, and the Dirichlet table adjudication. Each check scans a range
// and keeps only the smallest counterexample.

#ifndef COVERS_VERIFY_HPP_
#define COVERS_VERIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covers/checked.hpp"

namespace covers {

enum class Suite { Formulas, Lattice, Words, Dirichlet, All };

std::string to_string(Suite s);
Suite parse_suite(std::string_view text);  // InvalidArgument

struct Check {
  std::string suite;
  std::string name;
  i64 bound = 0;                       // largest n (or trial count) examined
  bool passed = true;
  std::optional<i64> counterexample;   // smallest failing n or trial number
  std::string detail;                  // what differed at the counterexample
};

// A table cell whose printed form disagrees with the closed formula.
struct Erratum {
  std::string label;
  std::string cell;         // selector, e.g. "s:g3:g3"
  i64 first_mismatch = 0;
  std::string table_value;  // printed series coefficient there
  i64 formula_value = 0;
  std::string printed;
  std::string corrected;
  bool corrected_agrees = false;
};

struct Report {
  Suite suite = Suite::All;
  i64 nmax = 0;
  std::vector<Check> checks;
  std::vector<Erratum> errata;

  bool passed() const;
  // Smallest counterexample over the failing checks, if any.
  const Check* first_failure() const;
  // Deterministic JSON document, schema_version 1.
  std::string to_json() const;
};

// threads == 0 means one worker per hardware thread.
Report run_verification(Suite suite, i64 nmax, unsigned threads);

}  // namespace covers

#endif  // COVERS_VERIFY_HPP_
