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

// Formal Dirichlet series, handled through their coefficient sequences.
//
// An expression is a finite sum of rational multiples of products of atoms:
//
//   zeta(s-k)   coefficients n -> n^k
//   theta(s-k)  coefficients n -> chi(n) n^k  (L-series of the character mod 3)
//   m^-s        the single coefficient 1 at n = m
//
// Products are Dirichlet convolutions; m^-(s+k) is m^-k * m^-s.
//
// Text syntax (whitespace ignored):
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' UINT]
//   primary := UINT ['/' UINT]
//            | UINT '^' '-s'  |  UINT '^' '-(s+' UINT ')'  |  UINT '^(-s' ['-' UINT] ')'
//            | 'zeta(s' ['-' UINT] ')'  |  'theta(s' ['-' UINT] ')'
//            | '(' expr ')'
//
// e.g. "(1-3^-s)*(1+2*3^-s)*zeta(s)^2*theta(s)".

#ifndef COVERS_DIRICHLET_HPP_
#define COVERS_DIRICHLET_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covers/formulas.hpp"

namespace covers {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Atom {
  enum class Kind { Zeta, Theta, Dilate };
  Kind kind;
  i64 value;  // shift k for Zeta/Theta, m for Dilate

  static Atom zeta(i64 shift = 0) { return {Kind::Zeta, shift}; }
  static Atom theta(i64 shift = 0) { return {Kind::Theta, shift}; }
  static Atom dilate(i64 m) { return {Kind::Dilate, m}; }

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Term {
  Rational coeff;
  std::vector<Atom> atoms;  // sorted; at most one Dilate

  friend bool operator==(const Term&, const Term&) = default;
};

// Flat sum of terms, kept in a normal form: atoms sorted and dilations
// merged inside each term, like terms combined, zero terms dropped, terms
// sorted by atom list.
class DirichletExpr {
 public:
  DirichletExpr() = default;
  static DirichletExpr constant(const Rational& c);
  static DirichletExpr atom(Atom a);

  const std::vector<Term>& terms() const { return terms_; }

  friend DirichletExpr operator+(const DirichletExpr& l, const DirichletExpr& r);
  friend DirichletExpr operator-(const DirichletExpr& l, const DirichletExpr& r);
  friend DirichletExpr operator*(const DirichletExpr& l, const DirichletExpr& r);
  friend DirichletExpr operator-(const DirichletExpr& e);
  friend bool operator==(const DirichletExpr&, const DirichletExpr&) = default;

 private:
  explicit DirichletExpr(std::vector<Term> terms);
  std::vector<Term> terms_;
};

DirichletExpr power(const DirichletExpr& e, i64 k);  // k >= 0

// Parseable rendering of the normal form.
std::string to_string(const DirichletExpr& e);

DirichletExpr parse_dirichlet(std::string_view text);  // ParseError

// Coefficients 1..N of a formal Dirichlet series.
class CoeffSeries {
 public:
  explicit CoeffSeries(i64 n_max);
  CoeffSeries(i64 n_max, const std::function<Rational(i64)>& f);

  i64 size() const { return static_cast<i64>(coeffs_.size()); }
  const Rational& at(i64 n) const;
  Rational& at(i64 n);

  friend CoeffSeries operator+(const CoeffSeries& l, const CoeffSeries& r);
  friend bool operator==(const CoeffSeries&, const CoeffSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Dirichlet convolution truncated to the shorter length.
CoeffSeries convolve(const CoeffSeries& l, const CoeffSeries& r);

CoeffSeries expand(const DirichletExpr& e, i64 n_max);
CoeffSeries expand(const Atom& a, i64 n_max);

struct Comparison {
  i64 n_max = 0;
  bool agree = true;
  i64 first_mismatch = 0;  // 0 when agree
  Rational series_value;   // at first_mismatch
  i64 target_value = 0;    // at first_mismatch
};

Comparison compare(const DirichletExpr& e, const std::function<i64(i64)>& target, i64 n_max);

// One populated cell of the published generating-function table.
struct TableCell {
  const char* label;  // formi ... formxii
  GroupId group;
  CoveringType type;
  CountKind kind;
  const char* table_text;      // as printed
  const char* corrected_text;  // conjectured fix when the printed form disagrees, else nullptr
};

std::span<const TableCell> table_cells();
const TableCell& table_cell(GroupId g, CoveringType t, CountKind kind);  // NotFound
DirichletExpr table_entry(GroupId g, CoveringType t, CountKind kind);

// "s:z3:g3" -> (G3, Z3, Subgroups). InvalidArgument/NotFound on bad input.
const TableCell& table_cell_by_selector(std::string_view selector);

struct Adjudication {
  const TableCell* cell;
  Comparison printed;                    // printed form vs closed formula
  std::optional<Comparison> corrected;   // only for printed-form mismatches
  // "agree", "erratum" (printed disagrees, correction agrees) or "fail".
  std::string verdict;
  bool passed() const { return verdict != "fail"; }
};

std::vector<Adjudication> adjudicate_table(i64 n_max);

}  // namespace covers

#endif  // COVERS_DIRICHLET_HPP_
