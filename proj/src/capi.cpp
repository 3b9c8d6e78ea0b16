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

#include "covers/covers.h"

#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "covers/dirichlet.hpp"
#include "covers/enumerate.hpp"
#include "covers/formulas.hpp"
#include "covers/verify.hpp"

using namespace covers;

struct covers_oracle {
  OrbitDecomposition orbits;
};

struct covers_series {
  DirichletExpr expr;
  std::string text;
  const TableCell* cell = nullptr;
};

struct covers_coeffs {
  CoeffSeries series;
  mutable std::vector<std::string> texts;  // filled lazily, one slot per n
};

struct covers_report {
  Report report;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

covers_status set_error(covers_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

// Runs fn, translating library exceptions into status codes.
template <typename Fn>
covers_status guarded(Fn fn) {
  g_last_error.clear();
  try {
    fn();
    return COVERS_OK;
  } catch (const ParseError& e) {
    return set_error(COVERS_PARSE, e.what());
  } catch (const InvalidArgument& e) {
    return set_error(COVERS_INVALID_ARGUMENT, e.what());
  } catch (const OverflowError& e) {
    return set_error(COVERS_OVERFLOW, e.what());
  } catch (const PreconditionError& e) {
    return set_error(COVERS_PRECONDITION, e.what());
  } catch (const NotFound& e) {
    return set_error(COVERS_NOT_FOUND, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(COVERS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(COVERS_INTERNAL, e.what());
  }
}

void require_out(const void* p, const char* what) {
  if (p == nullptr) fail_invalid(std::string(what) + " must not be NULL");
}

GroupId to_group(covers_group g) {
  switch (g) {
    case COVERS_G3: return GroupId::G3;
    case COVERS_G5: return GroupId::G5;
  }
  fail_invalid("unknown group code " + std::to_string(static_cast<int>(g)));
}

CoveringType to_type(covers_type t) {
  switch (t) {
    case COVERS_TYPE_Z3: return CoveringType::Z3;
    case COVERS_TYPE_G2: return CoveringType::G2;
    case COVERS_TYPE_G3: return CoveringType::G3;
    case COVERS_TYPE_G5: return CoveringType::G5;
  }
  fail_invalid("unknown covering type code " + std::to_string(static_cast<int>(t)));
}

CountKind to_kind(covers_kind k) {
  switch (k) {
    case COVERS_SUBGROUPS: return CountKind::Subgroups;
    case COVERS_CLASSES: return CountKind::Classes;
  }
  fail_invalid("unknown count kind code " + std::to_string(static_cast<int>(k)));
}

covers_type from_type(CoveringType t) {
  switch (t) {
    case CoveringType::Z3: return COVERS_TYPE_Z3;
    case CoveringType::G2: return COVERS_TYPE_G2;
    case CoveringType::G3: return COVERS_TYPE_G3;
    case CoveringType::G5: return COVERS_TYPE_G5;
  }
  return COVERS_TYPE_Z3;
}

void fill(const Comparison& c, covers_comparison* out) {
  out->agree = c.agree ? 1 : 0;
  out->nmax = c.n_max;
  out->first_mismatch = c.first_mismatch;
  out->target_value = c.target_value;
}

}  // namespace

extern "C" {

const char* covers_last_error(void) { return g_last_error.c_str(); }

const char* covers_status_name(covers_status status) {
  switch (status) {
    case COVERS_OK: return "ok";
    case COVERS_INVALID_ARGUMENT: return "invalid argument";
    case COVERS_OVERFLOW: return "overflow";
    case COVERS_PRECONDITION: return "precondition violated";
    case COVERS_PARSE: return "parse error";
    case COVERS_NOT_FOUND: return "not found";
    case COVERS_INTERNAL: return "internal error";
  }
  return "unknown status";
}

covers_status covers_parse_group(const char* text, covers_group* out) {
  return guarded([&] {
    require_out(text, "text");
    require_out(out, "out");
    *out = parse_group(text) == GroupId::G3 ? COVERS_G3 : COVERS_G5;
  });
}

covers_status covers_parse_type(const char* text, covers_type* out) {
  return guarded([&] {
    require_out(text, "text");
    require_out(out, "out");
    *out = from_type(parse_covering_type(text));
  });
}

covers_status covers_parse_kind(const char* text, covers_kind* out) {
  return guarded([&] {
    require_out(text, "text");
    require_out(out, "out");
    *out = parse_count_kind(text) == CountKind::Subgroups ? COVERS_SUBGROUPS : COVERS_CLASSES;
  });
}

const char* covers_type_name(covers_type type) {
  switch (type) {
    case COVERS_TYPE_Z3: return "Z3";
    case COVERS_TYPE_G2: return "G2";
    case COVERS_TYPE_G3: return "G3";
    case COVERS_TYPE_G5: return "G5";
  }
  return "?";
}

covers_status covers_count_closed(covers_group group, covers_kind kind, covers_type type, int64_t n,
                                  int64_t* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = closed_count(to_group(group), to_kind(kind), to_type(type), n);
  });
}

covers_status covers_oracle_new(covers_group group, int64_t n, covers_oracle** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = nullptr;
    *out = new covers_oracle{conjugacy_classes(to_group(group), n)};
  });
}

void covers_oracle_free(covers_oracle* oracle) { delete oracle; }

size_t covers_oracle_triple_count(const covers_oracle* oracle) {
  return oracle == nullptr ? 0 : oracle->orbits.triples.size();
}

covers_status covers_oracle_triple(const covers_oracle* oracle, size_t i, covers_triple_info* out) {
  return guarded([&] {
    require_out(oracle, "oracle");
    require_out(out, "out");
    const OrbitDecomposition& o = oracle->orbits;
    if (i >= o.triples.size()) throw NotFound("triple index " + std::to_string(i) + " out of range");
    const EssentialTriple& t = o.triples[i];
    *out = covers_triple_info{t.a, t.h.a, t.h.b, t.h.mu, t.nu.u, t.nu.v,
                              from_type(classify(o.group, t)), o.class_of[i]};
  });
}

size_t covers_oracle_class_count(const covers_oracle* oracle) {
  return oracle == nullptr ? 0 : oracle->orbits.classes.size();
}

covers_status covers_oracle_class(const covers_oracle* oracle, size_t k, covers_class_info* out) {
  return guarded([&] {
    require_out(oracle, "oracle");
    require_out(out, "out");
    const auto& classes = oracle->orbits.classes;
    if (k >= classes.size()) throw NotFound("class index " + std::to_string(k) + " out of range");
    *out = covers_class_info{from_type(classes[k].type), classes[k].size, classes[k].representative};
  });
}

covers_status covers_oracle_counts(const covers_oracle* oracle, covers_type type, int64_t* subgroups,
                                   int64_t* classes) {
  return guarded([&] {
    require_out(oracle, "oracle");
    const CoveringType t = to_type(type);
    const OrbitDecomposition& o = oracle->orbits;
    if (subgroups != nullptr) {
      *subgroups = 0;
      for (const EssentialTriple& tr : o.triples)
        if (classify(o.group, tr) == t) ++*subgroups;
    }
    if (classes != nullptr) {
      *classes = 0;
      for (const ConjugacyClass& c : o.classes)
        if (c.type == t) ++*classes;
    }
  });
}

covers_status covers_series_parse(const char* text, covers_series** out, size_t* error_pos) {
  return guarded([&] {
    require_out(text, "text");
    require_out(out, "out");
    *out = nullptr;
    try {
      DirichletExpr e = parse_dirichlet(text);
      std::string rendered = to_string(e);
      *out = new covers_series{std::move(e), std::move(rendered), nullptr};
    } catch (const ParseError& err) {
      if (error_pos != nullptr) *error_pos = err.position();
      throw;
    }
  });
}

covers_status covers_series_entry(const char* selector, covers_series** out) {
  return guarded([&] {
    require_out(selector, "selector");
    require_out(out, "out");
    *out = nullptr;
    const TableCell& cell = table_cell_by_selector(selector);
    DirichletExpr e = table_entry(cell.group, cell.type, cell.kind);
    std::string rendered = to_string(e);
    *out = new covers_series{std::move(e), std::move(rendered), &cell};
  });
}

void covers_series_free(covers_series* series) { delete series; }

const char* covers_series_text(const covers_series* series) {
  return series == nullptr ? "" : series->text.c_str();
}

int covers_series_has_target(const covers_series* series) {
  return series != nullptr && series->cell != nullptr ? 1 : 0;
}

covers_status covers_series_expand(const covers_series* series, int64_t nmax, covers_coeffs** out) {
  return guarded([&] {
    require_out(series, "series");
    require_out(out, "out");
    *out = nullptr;
    require_positive(nmax, "nmax");
    *out = new covers_coeffs{expand(series->expr, nmax), {}};
  });
}

void covers_coeffs_free(covers_coeffs* coeffs) { delete coeffs; }

int64_t covers_coeffs_size(const covers_coeffs* coeffs) {
  return coeffs == nullptr ? 0 : coeffs->series.size();
}

const char* covers_coeffs_text(const covers_coeffs* coeffs, int64_t n) {
  if (coeffs == nullptr || n < 1 || n > coeffs->series.size()) return nullptr;
  auto& texts = coeffs->texts;
  if (texts.empty()) texts.resize(static_cast<std::size_t>(coeffs->series.size()));
  std::string& slot = texts[static_cast<std::size_t>(n - 1)];
  if (slot.empty()) slot = coeffs->series.at(n).str();
  return slot.c_str();
}

covers_status covers_coeffs_int(const covers_coeffs* coeffs, int64_t n, int64_t* out) {
  return guarded([&] {
    require_out(coeffs, "coeffs");
    require_out(out, "out");
    if (n < 1 || n > coeffs->series.size()) throw NotFound("coefficient index out of range");
    const Rational& r = coeffs->series.at(n);
    if (denominator(r) != 1) throw OverflowError("coefficient " + r.str() + " is not an integer");
    const BigInt num = numerator(r);
    if (num > BigInt(INT64_MAX) || num < BigInt(INT64_MIN))
      throw OverflowError("coefficient " + num.str() + " exceeds 64 bits");
    *out = static_cast<int64_t>(num);
  });
}

covers_status covers_series_compare(const covers_series* series, covers_group group, covers_kind kind,
                                    covers_type type, int64_t nmax, covers_comparison* out) {
  return guarded([&] {
    require_out(series, "series");
    require_out(out, "out");
    require_positive(nmax, "nmax");
    const GroupId g = to_group(group);
    const CountKind k = to_kind(kind);
    const CoveringType t = to_type(type);
    require_admissible(g, t);
    fill(compare(series->expr, [&](i64 n) { return closed_count(g, k, t, n); }, nmax), out);
  });
}

covers_status covers_series_compare_target(const covers_series* series, int64_t nmax,
                                           covers_comparison* out) {
  return guarded([&] {
    require_out(series, "series");
    require_out(out, "out");
    if (series->cell == nullptr)
      throw PreconditionError("series was not loaded from a table entry; no target to compare with");
    require_positive(nmax, "nmax");
    const TableCell& c = *series->cell;
    fill(compare(series->expr, [&](i64 n) { return closed_count(c.group, c.kind, c.type, n); }, nmax),
         out);
  });
}

covers_status covers_verify(const char* suite, int64_t nmax, unsigned threads, covers_report** out) {
  return guarded([&] {
    require_out(suite, "suite");
    require_out(out, "out");
    *out = nullptr;
    Report r = run_verification(parse_suite(suite), nmax, threads);
    std::string json = r.to_json();
    *out = new covers_report{std::move(r), std::move(json)};
  });
}

void covers_report_free(covers_report* report) { delete report; }

int covers_report_passed(const covers_report* report) {
  return report != nullptr && report->report.passed() ? 1 : 0;
}

const char* covers_report_json(const covers_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

int64_t covers_report_first_failure(const covers_report* report, const char** check) {
  if (check != nullptr) *check = nullptr;
  if (report == nullptr) return 0;
  const Check* c = report->report.first_failure();
  if (c == nullptr) return 0;
  if (check != nullptr) *check = c->name.c_str();
  return c->counterexample.value_or(0);
}

}  // extern "C"
