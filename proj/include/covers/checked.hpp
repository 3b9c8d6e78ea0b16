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

// Overflow-checked int64 arithmetic. Anything that would wrap throws
// OverflowError instead.

#ifndef COVERS_CHECKED_HPP_
#define COVERS_CHECKED_HPP_

#include <cstdint>

#include "covers/error.hpp"

namespace covers {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("int64 overflow in addition");
  return r;
}

inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

// Floor division and the matching nonnegative remainder (b > 0).
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 floor_mod(i64 a, i64 b) {
  i64 r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

}  // namespace covers

#endif  // COVERS_CHECKED_HPP_
