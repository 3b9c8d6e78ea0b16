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

// Closed forms for the number of index-n subgroups of each isomorphism type
// (s_closed) and the number of their conjugacy classes, i.e. of
// inequivalent n-fold coverings (c_closed). All divisor sums are evaluated
// directly, without going through Dirichlet series.

#ifndef COVERS_FORMULAS_HPP_
#define COVERS_FORMULAS_HPP_

#include <string_view>

#include "covers/arith.hpp"
#include "covers/enumerate.hpp"

namespace covers {

enum class CountKind { Subgroups, Classes };

std::string to_string(CountKind k);

// Case-insensitive names: "g3"/"g5", "z3"/"g2"/"g3"/"g5", "s"/"c".
// InvalidArgument on anything else.
GroupId parse_group(std::string_view text);
CoveringType parse_covering_type(std::string_view text);
CountKind parse_count_kind(std::string_view text);

// sum_{k|m} theta(k), and sum_{k|m} k theta(k); 0 when m is not integral.
i64 theta_sum(Ratio m);
i64 weighted_theta_sum(Ratio m);

i64 s_closed(GroupId g, CoveringType t, i64 n);
i64 c_closed(GroupId g, CoveringType t, i64 n);
i64 closed_count(GroupId g, CountKind kind, CoveringType t, i64 n);

}  // namespace covers

#endif  // COVERS_FORMULAS_HPP_
