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

#include "covers/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace covers {

// ---------------------------------------------------------------------------
// Expression normal form

namespace {

// Sorts atoms and folds all dilations into one (dropping m = 1).
std::vector<Atom> normalize_atoms(std::vector<Atom> atoms) {
  i64 m = 1;
  std::vector<Atom> out;
  for (const Atom& a : atoms) {
    if (a.kind == Atom::Kind::Dilate)
      m = mul(m, a.value);
    else
      out.push_back(a);
  }
  if (m != 1) out.push_back(Atom::dilate(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DirichletExpr::DirichletExpr(std::vector<Term> terms) {
  std::map<std::vector<Atom>, Rational> merged;
  for (auto& t : terms) merged[normalize_atoms(std::move(t.atoms))] += t.coeff;
  for (auto& [atoms, coeff] : merged)
    if (coeff != 0) terms_.push_back({coeff, atoms});
}

DirichletExpr DirichletExpr::constant(const Rational& c) { return DirichletExpr({{c, {}}}); }

DirichletExpr DirichletExpr::atom(Atom a) {
  if (a.kind == Atom::Kind::Dilate && a.value < 1)
    throw InvalidArgument("dilation factor must be positive");
  if (a.kind != Atom::Kind::Dilate && a.value < 0)
    throw InvalidArgument("zeta/theta shift must be nonnegative");
  return DirichletExpr({{Rational(1), {a}}});
}

DirichletExpr operator+(const DirichletExpr& l, const DirichletExpr& r) {
  std::vector<Term> all = l.terms_;
  all.insert(all.end(), r.terms_.begin(), r.terms_.end());
  return DirichletExpr(std::move(all));
}

DirichletExpr operator-(const DirichletExpr& e) {
  std::vector<Term> all = e.terms_;
  for (auto& t : all) t.coeff = -t.coeff;
  return DirichletExpr(std::move(all));
}

DirichletExpr operator-(const DirichletExpr& l, const DirichletExpr& r) { return l + (-r); }

DirichletExpr operator*(const DirichletExpr& l, const DirichletExpr& r) {
  std::vector<Term> all;
  for (const Term& a : l.terms_)
    for (const Term& b : r.terms_) {
      Term t{a.coeff * b.coeff, a.atoms};
      t.atoms.insert(t.atoms.end(), b.atoms.begin(), b.atoms.end());
      all.push_back(std::move(t));
    }
  return DirichletExpr(std::move(all));
}

DirichletExpr power(const DirichletExpr& e, i64 k) {
  if (k < 0) throw InvalidArgument("negative power of a Dirichlet expression");
  DirichletExpr r = DirichletExpr::constant(1);
  for (i64 i = 0; i < k; ++i) r = r * e;
  return r;
}

namespace {

std::string atom_text(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Zeta:
      return a.value == 0 ? "zeta(s)" : "zeta(s-" + std::to_string(a.value) + ")";
    case Atom::Kind::Theta:
      return a.value == 0 ? "theta(s)" : "theta(s-" + std::to_string(a.value) + ")";
    case Atom::Kind::Dilate:
      return std::to_string(a.value) + "^-s";
  }
  return "?";
}

// Magnitude only; the caller writes the sign.
std::string term_text(const Term& t) {
  std::vector<std::string> parts;
  const Rational mag = abs(t.coeff);
  if (mag != 1 || t.atoms.empty()) parts.push_back(mag.str());
  // Dilation first, then runs of equal atoms as powers.
  std::vector<Atom> ordered = t.atoms;
  std::stable_partition(ordered.begin(), ordered.end(),
                        [](const Atom& a) { return a.kind == Atom::Kind::Dilate; });
  for (std::size_t i = 0; i < ordered.size();) {
    std::size_t j = i;
    while (j < ordered.size() && ordered[j] == ordered[i]) ++j;
    std::string s = atom_text(ordered[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    parts.push_back(s);
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

}  // namespace

std::string to_string(const DirichletExpr& e) {
  if (e.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : e.terms()) {
    const bool negative = t.coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += term_text(t);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr i64 kMaxPower = 64;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DirichletExpr parse() {
    DirichletExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      skip_ws();
      fail(std::string("expected '") + c + "'");
    }
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
  }

  i64 uint() {
    if (!at_digit()) fail("expected an unsigned integer");
    i64 v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, text_[pos_] - '0', &v))
        fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  DirichletExpr expr() {
    DirichletExpr e;
    if (accept('-'))
      e = -term();
    else {
      accept('+');
      e = term();
    }
    for (;;) {
      if (accept('+'))
        e = e + term();
      else if (accept('-'))
        e = e - term();
      else
        return e;
    }
  }

  DirichletExpr term() {
    DirichletExpr e = factor();
    while (accept('*')) e = e * factor();
    return e;
  }

  DirichletExpr factor() {
    DirichletExpr e = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      const i64 k = uint();
      if (k > kMaxPower) {
        pos_ = at;
        fail("exponent larger than " + std::to_string(kMaxPower));
      }
      e = power(e, k);
    }
    return e;
  }

  // "s" optionally followed by "-k"; returns k.
  i64 shifted_s() {
    if (!accept('s')) fail("expected 's'");
    return accept('-') ? uint() : 0;
  }

  DirichletExpr primary() {
    if (accept('(')) {
      DirichletExpr e = expr();
      expect(')');
      return e;
    }
    if (accept_word("zeta")) {
      expect('(');
      const i64 k = shifted_s();
      expect(')');
      return DirichletExpr::atom(Atom::zeta(k));
    }
    if (accept_word("theta")) {
      expect('(');
      const i64 k = shifted_s();
      expect(')');
      return DirichletExpr::atom(Atom::theta(k));
    }
    if (at_digit()) {
      const std::size_t start = pos_;
      const i64 num = uint();
      if (dilation_follows()) return dilation(num, start);
      if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        const i64 den = uint();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        return DirichletExpr::constant(Rational(num, den));
      }
      return DirichletExpr::constant(Rational(num));
    }
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  // After a number: "^-" or "^(" introduce m^-s forms; "^<digit>" is a power.
  bool dilation_follows() {
    const std::size_t save = pos_;
    bool yes = false;
    if (accept('^')) yes = peek('-') || peek('(');
    pos_ = save;
    return yes;
  }

  DirichletExpr dilation(i64 m, std::size_t start) {
    if (m < 1) {
      pos_ = start;
      fail("dilation base must be positive");
    }
    expect('^');
    i64 extra = 0;  // total exponent is -(s + extra)
    if (accept('(')) {
      expect('-');
      extra = shifted_s();
      expect(')');
    } else {
      expect('-');
      if (accept('(')) {
        if (!accept('s')) fail("expected 's'");
        if (accept('+')) extra = uint();
        expect(')');
      } else if (!accept('s')) {
        fail("expected 's'");
      }
    }
    BigInt den = 1;
    for (i64 i = 0; i < extra; ++i) den *= m;
    return DirichletExpr::constant(Rational(BigInt(1), den)) * DirichletExpr::atom(Atom::dilate(m));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DirichletExpr parse_dirichlet(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Coefficient series

CoeffSeries::CoeffSeries(i64 n_max) {
  require_positive(n_max, "series length");
  coeffs_.assign(static_cast<std::size_t>(n_max), Rational(0));
}

CoeffSeries::CoeffSeries(i64 n_max, const std::function<Rational(i64)>& f) : CoeffSeries(n_max) {
  for (i64 n = 1; n <= n_max; ++n) at(n) = f(n);
}

const Rational& CoeffSeries::at(i64 n) const {
  if (n < 1 || n > size()) throw InvalidArgument("series index out of range");
  return coeffs_[static_cast<std::size_t>(n - 1)];
}

Rational& CoeffSeries::at(i64 n) {
  if (n < 1 || n > size()) throw InvalidArgument("series index out of range");
  return coeffs_[static_cast<std::size_t>(n - 1)];
}

CoeffSeries operator+(const CoeffSeries& l, const CoeffSeries& r) {
  CoeffSeries out(std::min(l.size(), r.size()));
  for (i64 n = 1; n <= out.size(); ++n) out.at(n) = l.at(n) + r.at(n);
  return out;
}

CoeffSeries convolve(const CoeffSeries& l, const CoeffSeries& r) {
  const i64 len = std::min(l.size(), r.size());
  CoeffSeries out(len);
  for (i64 i = 1; i <= len; ++i) {
    if (l.at(i) == 0) continue;
    for (i64 j = 1; i * j <= len; ++j) out.at(i * j) += l.at(i) * r.at(j);
  }
  return out;
}

namespace {

using IntSeq = std::vector<BigInt>;  // index 0 unused

BigInt int_pow(i64 base, i64 e) {
  BigInt r = 1;
  for (i64 i = 0; i < e; ++i) r *= base;
  return r;
}

IntSeq atom_seq(const Atom& a, i64 len) {
  IntSeq s(static_cast<std::size_t>(len + 1), 0);
  for (i64 n = 1; n <= len; ++n) {
    auto& c = s[static_cast<std::size_t>(n)];
    switch (a.kind) {
      case Atom::Kind::Zeta: c = int_pow(n, a.value); break;
      case Atom::Kind::Theta: c = chi(n) * int_pow(n, a.value); break;
      case Atom::Kind::Dilate: c = (n == a.value) ? 1 : 0; break;
    }
  }
  return s;
}

IntSeq int_convolve(const IntSeq& l, const IntSeq& r) {
  const i64 len = static_cast<i64>(l.size()) - 1;
  IntSeq out(l.size(), 0);
  for (i64 i = 1; i <= len; ++i) {
    const BigInt& li = l[static_cast<std::size_t>(i)];
    if (li == 0) continue;
    for (i64 j = 1; i * j <= len; ++j) out[static_cast<std::size_t>(i * j)] += li * r[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace

CoeffSeries expand(const Atom& a, i64 n_max) {
  const IntSeq s = atom_seq(a, n_max);
  return CoeffSeries(n_max, [&](i64 n) { return Rational(s[static_cast<std::size_t>(n)]); });
}

CoeffSeries expand(const DirichletExpr& e, i64 n_max) {
  CoeffSeries out(n_max);
  for (const Term& t : e.terms()) {
    i64 m = 1;
    std::vector<Atom> rest;
    for (const Atom& a : t.atoms) {
      if (a.kind == Atom::Kind::Dilate)
        m = a.value;
      else
        rest.push_back(a);
    }
    if (m > n_max) continue;
    const i64 len = n_max / m;
    IntSeq acc(static_cast<std::size_t>(len + 1), 0);
    acc[1] = 1;
    for (const Atom& a : rest) acc = int_convolve(acc, atom_seq(a, len));
    for (i64 i = 1; i <= len; ++i) {
      const BigInt& v = acc[static_cast<std::size_t>(i)];
      if (v != 0) out.at(i * m) += t.coeff * Rational(v);
    }
  }
  return out;
}

Comparison compare(const DirichletExpr& e, const std::function<i64(i64)>& target, i64 n_max) {
  const CoeffSeries s = expand(e, n_max);
  Comparison c;
  c.n_max = n_max;
  for (i64 n = 1; n <= n_max; ++n) {
    const i64 want = target(n);
    if (s.at(n) != Rational(want)) {
      c.agree = false;
      c.first_mismatch = n;
      c.series_value = s.at(n);
      c.target_value = want;
      return c;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// The published table

namespace {

using enum CoveringType;
using enum CountKind;

constexpr std::array<TableCell, 12> kCells{{
    {"formi", GroupId::G3, Z3, Subgroups, "3^-s*zeta(s)*zeta(s-1)*zeta(s-2)", nullptr},
    {"formii", GroupId::G5, Z3, Subgroups, "6^-s*zeta(s)*zeta(s-1)*zeta(s-2)", nullptr},
    {"formiii", GroupId::G3, Z3, Classes,
     "3^-(s+1)*zeta(s)*(zeta(s-1)*zeta(s-2)+2*(1+2*3^-s)*zeta(s)*theta(s))", nullptr},
    {"formiv", GroupId::G5, Z3, Classes,
     "6^-(s+1)*zeta(s)*(zeta(s-1)*zeta(s-2)+(1+3*2^-s)*zeta(s)*zeta(s-1)"
     "+4*(1+3^-s)*zeta(s)*theta(s))",
     nullptr},
    {"formv", GroupId::G5, G2, Subgroups, "3^-s*(1-2^-s)*zeta(s)*zeta(s-1)*zeta(s-2)", nullptr},
    {"formvi", GroupId::G5, G2, Classes,
     "3^-s*(1-2^-s)*zeta(s)^2*((1+3*2^-s)*zeta(s-1)+2*theta(s))",
     "3^-(s+1)*(1-2^-s)*zeta(s)^2*((1+3*2^-s)*zeta(s-1)+2*theta(s))"},
    {"formvii", GroupId::G3, G3, Subgroups, "(1-3^-s)*zeta(s-1)^2*theta(s-1)",
     "(1-3^-s)*zeta(s)*zeta(s-1)*theta(s-1)"},
    {"formviii", GroupId::G5, G3, Subgroups, "2^-s*(1-3^-s)*zeta(s-1)^2*theta(s-1)",
     "2^-s*(1-3^-s)*zeta(s)*zeta(s-1)*theta(s-1)"},
    {"formix", GroupId::G3, G3, Classes, "(1-3^-s)*(1+2*3^-s)*zeta(s)^2*theta(s)", nullptr},
    {"formx", GroupId::G5, G3, Classes, "2^-s*(1-3^-s)*(1+3^-s)*zeta(s)^2*theta(s)", nullptr},
    {"formxi", GroupId::G5, G5, Subgroups, "(1-2^-s)*(1-3^-s)*zeta(s-1)^2*theta(s-1)",
     "(1-2^-s)*(1-3^-s)*zeta(s)*zeta(s-1)*theta(s-1)"},
    {"formxii", GroupId::G5, G5, Classes, "(1-2^-s)*(1-3^-s)*zeta(s)^2*theta(s)", nullptr},
}};

}  // namespace

std::span<const TableCell> table_cells() { return kCells; }

const TableCell& table_cell(GroupId g, CoveringType t, CountKind kind) {
  for (const auto& c : kCells)
    if (c.group == g && c.type == t && c.kind == kind) return c;
  throw NotFound("no generating function is tabulated for " + to_string(kind) + "(" +
                 to_string(t) + ", " + to_string(g) + ")");
}

DirichletExpr table_entry(GroupId g, CoveringType t, CountKind kind) {
  return parse_dirichlet(table_cell(g, t, kind).table_text);
}

const TableCell& table_cell_by_selector(std::string_view selector) {
  const auto first = selector.find(':');
  const auto second = first == std::string_view::npos ? first : selector.find(':', first + 1);
  if (second == std::string_view::npos)
    throw InvalidArgument("entry selector must look like kind:type:group, e.g. s:z3:g3");
  const CountKind kind = parse_count_kind(selector.substr(0, first));
  const CoveringType type = parse_covering_type(selector.substr(first + 1, second - first - 1));
  const GroupId group = parse_group(selector.substr(second + 1));
  return table_cell(group, type, kind);
}

std::vector<Adjudication> adjudicate_table(i64 n_max) {
  std::vector<Adjudication> out;
  for (const auto& cell : kCells) {
    auto target = [&cell](i64 n) { return closed_count(cell.group, cell.kind, cell.type, n); };
    Adjudication adj{&cell, compare(parse_dirichlet(cell.table_text), target, n_max), std::nullopt, ""};
    if (adj.printed.agree) {
      adj.verdict = "agree";
    } else if (cell.corrected_text != nullptr) {
      adj.corrected = compare(parse_dirichlet(cell.corrected_text), target, n_max);
      adj.verdict = adj.corrected->agree ? "erratum" : "fail";
    } else {
      adj.verdict = "fail";
    }
    out.push_back(std::move(adj));
  }
  return out;
}

}  // namespace covers
