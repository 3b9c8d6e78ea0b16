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

#include "covers/words.hpp"

#include <sstream>

namespace covers {

std::string to_string(GroupId g) { return g == GroupId::G3 ? "G3" : "G5"; }

int z_period(GroupId g) { return g == GroupId::G3 ? 3 : 6; }

const Mat2& z_action(GroupId g, i64 c) {
  const i64 r = floor_mod(c, z_period(g));
  return g == GroupId::G3 ? kTableG3[static_cast<std::size_t>(r)]
                          : kTableG5[static_cast<std::size_t>(r)];
}

namespace {

void same_group(const Word& w1, const Word& w2) {
  if (w1.group != w2.group)
    throw InvalidArgument("cannot combine words of " + to_string(w1.group) + " and " +
                          to_string(w2.group));
}

}  // namespace

Word mul(const Word& w1, const Word& w2) {
  same_group(w1, w2);
  const Vec2 g = w1.gamma() + z_action(w1.group, w1.c) * w2.gamma();
  return from_gamma(w1.group, g, add(w1.c, w2.c));
}

Word operator*(const Word& w1, const Word& w2) { return mul(w1, w2); }

Word inv(const Word& w) {
  // (a,b) + M_c (a',b') = 0  =>  (a',b') = -M_{-c} (a,b)
  const i64 c = neg(w.c);
  return from_gamma(w.group, -(z_action(w.group, c) * w.gamma()), c);
}

Word conj(const Word& w, const Word& g) {
  same_group(w, g);
  return mul(mul(g, w), inv(g));
}

Word pow(const Word& w, i64 k) {
  Word base = k < 0 ? inv(w) : w;
  i64 e = k < 0 ? neg(k) : k;
  Word r = identity(w.group);
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Word commutator(const Word& w1, const Word& w2) {
  same_group(w1, w2);
  return mul(mul(w1, w2), inv(mul(w2, w1)));
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool any = false;
  auto term = [&](const char* sym, i64 e) {
    if (e == 0) return;
    if (any) os << ' ';
    os << sym;
    if (e != 1) os << '^' << e;
    any = true;
  };
  term("x", w.a);
  term("y", w.b);
  term("z", w.c);
  if (!any) os << '1';
  return os.str();
}

}  // namespace covers
