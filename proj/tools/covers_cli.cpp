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

// covers: sequence tables, verification suites, oracle inspection and
// Dirichlet series comparisons. Uses the library only through covers.h.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error,
// 3 a series comparison found a mismatch, 4 library error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "covers/covers.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitLibrary = 4;

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
  std::string message;
};

void check(covers_status st) {
  if (st != COVERS_OK) {
    const bool usage = st == COVERS_INVALID_ARGUMENT || st == COVERS_NOT_FOUND || st == COVERS_PARSE;
    throw Exit{usage ? kExitUsage : kExitLibrary,
               std::string(covers_status_name(st)) + ": " + covers_last_error()};
  }
}

unsigned worker_count() {
  const char* env = std::getenv("COVERS_THREADS");
  if (env == nullptr || *env == '\0') {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6 ||
      std::stoul(text) == 0)
    throw Exit{kExitUsage, "COVERS_THREADS must be a positive integer, got '" + text + "'"};
  return static_cast<unsigned>(std::stoul(text));
}

enum class Format { Csv, Json, Bfile };

// One output row; value is an exact integer or rational in text form.
struct Row {
  std::int64_t n;
  std::string value;
};

bool is_integer_text(const std::string& v) { return v.find('/') == std::string::npos; }

void emit(const std::vector<Row>& rows, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Csv:
      out << "n,value\n";
      for (const Row& r : rows) out << r.n << ',' << r.value << '\n';
      break;
    case Format::Bfile:
      for (const Row& r : rows) out << r.n << ' ' << r.value << '\n';
      break;
    case Format::Json: {
      out << "[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::ordered_json j;
        j["n"] = rows[i].n;
        if (is_integer_text(rows[i].value))
          j["value"] = nlohmann::ordered_json::parse(rows[i].value);
        else
          j["value"] = rows[i].value;
        out << (i == 0 ? "\n  " : ",\n  ") << j.dump();
      }
      out << (rows.empty() ? "]\n" : "\n]\n");
      break;
    }
  }
}

// Evaluates f(1..nmax) on a worker pool and returns rows in index order.
std::vector<Row> fan_out(std::int64_t nmax, unsigned threads,
                         const std::function<covers_status(std::int64_t, std::int64_t*)>& f) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(nmax));
  std::vector<covers_status> status(values.size(), COVERS_OK);
  std::vector<std::string> errors(values.size());
  std::atomic<std::int64_t> next{1};
  auto work = [&] {
    for (std::int64_t n; (n = next.fetch_add(1)) <= nmax;) {
      const auto i = static_cast<std::size_t>(n - 1);
      status[i] = f(n, &values[i]);
      if (status[i] != COVERS_OK) errors[i] = covers_last_error();
    }
  };
  threads = static_cast<unsigned>(std::clamp<std::int64_t>(threads, 1, nmax));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  std::vector<Row> rows;
  rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (status[i] != COVERS_OK)
      throw Exit{kExitLibrary, std::string(covers_status_name(status[i])) + " at n=" +
                                   std::to_string(i + 1) + ": " + errors[i]};
    rows.push_back({static_cast<std::int64_t>(i) + 1, std::to_string(values[i])});
  }
  return rows;
}

struct Selection {
  std::string group, kind, sub;
};

struct Target {
  covers_group group;
  covers_kind kind;
  covers_type type;
};

Target resolve(const Selection& s) {
  Target t{};
  check(covers_parse_group(s.group.c_str(), &t.group));
  check(covers_parse_kind(s.kind.c_str(), &t.kind));
  check(covers_parse_type(s.sub.c_str(), &t.type));
  return t;
}

int cmd_table(const Selection& sel, std::int64_t nmax, Format fmt) {
  const Target t = resolve(sel);
  std::int64_t probe = 0;
  check(covers_count_closed(t.group, t.kind, t.type, 1, &probe));  // admissibility
  const auto rows = fan_out(nmax, worker_count(), [&](std::int64_t n, std::int64_t* out) {
    return covers_count_closed(t.group, t.kind, t.type, n, out);
  });
  emit(rows, fmt, std::cout);
  return 0;
}

int cmd_verify(std::int64_t nmax, const std::string& suite) {
  covers_report* raw = nullptr;
  check(covers_verify(suite.c_str(), nmax, worker_count(), &raw));
  std::unique_ptr<covers_report, decltype(&covers_report_free)> report(raw, covers_report_free);
  std::cout << covers_report_json(report.get());
  if (covers_report_passed(report.get())) return 0;
  const char* name = nullptr;
  const std::int64_t n = covers_report_first_failure(report.get(), &name);
  std::cerr << "verification failed: smallest counterexample n=" << n << " in check "
            << (name ? name : "?") << '\n';
  return kExitFailed;
}

std::string triple_text(const covers_triple_info& t) {
  std::ostringstream os;
  os << "a=" << t.a << " H=(" << t.h_a << ',' << t.h_b << ',' << t.h_mu << ") nu=(" << t.nu_u << ','
     << t.nu_v << ") type=" << covers_type_name(t.type) << " class=" << t.class_id;
  return os.str();
}

int cmd_oracle(const std::string& group_name, std::int64_t n, bool list_triples, bool classes) {
  covers_group group{};
  check(covers_parse_group(group_name.c_str(), &group));
  covers_oracle* raw = nullptr;
  check(covers_oracle_new(group, n, &raw));
  std::unique_ptr<covers_oracle, decltype(&covers_oracle_free)> oracle(raw, covers_oracle_free);
  const std::size_t nt = covers_oracle_triple_count(oracle.get());
  const std::size_t nc = covers_oracle_class_count(oracle.get());
  std::cout << "# group " << (group == COVERS_G3 ? "G3" : "G5") << ", n=" << n << ": " << nt
            << (nt == 1 ? " triple" : " triples") << " (subgroups) in " << nc
            << (nc == 1 ? " class" : " classes") << '\n';
  std::cout << "type,subgroups,classes\n";
  for (covers_type t : {COVERS_TYPE_Z3, COVERS_TYPE_G2, COVERS_TYPE_G3, COVERS_TYPE_G5}) {
    if (group == COVERS_G3 && t == COVERS_TYPE_G2) continue;
    if (group == COVERS_G3 && t == COVERS_TYPE_G5) continue;
    std::int64_t s = 0, c = 0;
    check(covers_oracle_counts(oracle.get(), t, &s, &c));
    std::cout << covers_type_name(t) << ',' << s << ',' << c << '\n';
  }
  if (list_triples) {
    std::cout << "# triples\n";
    for (std::size_t i = 0; i < nt; ++i) {
      covers_triple_info info{};
      check(covers_oracle_triple(oracle.get(), i, &info));
      std::cout << triple_text(info) << '\n';
    }
  }
  if (classes) {
    std::cout << "# classes\n";
    for (std::size_t k = 0; k < nc; ++k) {
      covers_class_info info{};
      check(covers_oracle_class(oracle.get(), k, &info));
      covers_triple_info rep{};
      check(covers_oracle_triple(oracle.get(), info.representative, &rep));
      std::cout << "class " << k << ": type=" << covers_type_name(info.type) << " size=" << info.size
                << " representative: " << triple_text(rep) << '\n';
    }
  }
  return 0;
}

struct SeriesArgs {
  std::string expr, entry;
  std::int64_t nmax = 10;
  bool compare = false;
  Selection target;
  Format fmt = Format::Csv;
};

int cmd_series(const SeriesArgs& a) {
  covers_series* raw = nullptr;
  if (!a.entry.empty()) {
    check(covers_series_entry(a.entry.c_str(), &raw));
  } else {
    std::size_t pos = 0;
    const covers_status st = covers_series_parse(a.expr.c_str(), &raw, &pos);
    if (st == COVERS_PARSE) {
      std::ostringstream os;
      os << "parse error: " << covers_last_error() << "\n  " << a.expr << "\n  "
         << std::string(pos, ' ') << '^';
      throw Exit{kExitUsage, os.str()};
    }
    check(st);
  }
  std::unique_ptr<covers_series, decltype(&covers_series_free)> series(raw, covers_series_free);

  covers_coeffs* craw = nullptr;
  check(covers_series_expand(series.get(), a.nmax, &craw));
  std::unique_ptr<covers_coeffs, decltype(&covers_coeffs_free)> coeffs(craw, covers_coeffs_free);
  std::vector<Row> rows;
  for (std::int64_t n = 1; n <= a.nmax; ++n) rows.push_back({n, covers_coeffs_text(coeffs.get(), n)});

  int code = 0;
  std::string verdict;
  if (a.compare) {
    covers_comparison cmp{};
    if (covers_series_has_target(series.get())) {
      check(covers_series_compare_target(series.get(), a.nmax, &cmp));
    } else {
      if (a.target.group.empty() || a.target.kind.empty() || a.target.sub.empty())
        throw Exit{kExitUsage, "--compare-formulas with --expr needs --group, --kind and --sub"};
      const Target t = resolve(a.target);
      check(covers_series_compare(series.get(), t.group, t.kind, t.type, a.nmax, &cmp));
    }
    std::ostringstream os;
    if (cmp.agree) {
      os << "# agree through n=" << cmp.nmax;
    } else {
      os << "# mismatch at n=" << cmp.first_mismatch << ": series "
         << covers_coeffs_text(coeffs.get(), cmp.first_mismatch) << ", formula " << cmp.target_value;
      code = kExitMismatch;
    }
    verdict = os.str();
  }
  // Comment lines go to stdout next to CSV; JSON and b-file bodies stay
  // clean documents, so there they go to stderr.
  std::ostream& notes = a.fmt == Format::Csv ? std::cout : std::cerr;
  notes << "# " << covers_series_text(series.get()) << '\n';
  emit(rows, a.fmt, std::cout);
  std::cout.flush();
  if (!verdict.empty()) notes << verdict << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite coverings of two flat 3-manifolds: counts, oracle and generating functions"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{
      {"csv", Format::Csv}, {"json", Format::Json}, {"bfile", Format::Bfile}};

  Selection table_sel;
  std::int64_t table_nmax = 0;
  Format table_fmt = Format::Csv;
  auto* table = app.add_subcommand("table", "Print s(n) or c(n) for n = 1..nmax from the closed formulas");
  table->add_option("--group", table_sel.group, "Ambient group: g3 or g5")->required();
  table->add_option("--kind", table_sel.kind, "s (subgroups) or c (conjugacy classes)")->required();
  table->add_option("--sub", table_sel.sub, "Subgroup type: z3, g2, g3 or g5")->required();
  table->add_option("--nmax", table_nmax, "Largest n")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", table_fmt, "csv, json or bfile")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::int64_t verify_nmax = 0;
  std::string verify_suite = "all";
  auto* verify = app.add_subcommand("verify", "Run cross-check suites and print a JSON report");
  verify->add_option("--nmax", verify_nmax, "Bound for the checks")->required()->check(CLI::PositiveNumber);
  verify->add_option("--suite", verify_suite, "formulas, dirichlet, lattice, words or all")
      ->check(CLI::IsMember({"formulas", "dirichlet", "lattice", "words", "all"}, CLI::ignore_case));

  std::string oracle_group;
  std::int64_t oracle_n = 0;
  bool list_triples = false, list_classes = false;
  auto* oracle = app.add_subcommand("oracle", "Enumerate index-n subgroups by brute force");
  oracle->add_option("--group", oracle_group, "g3 or g5")->required();
  oracle->add_option("--n", oracle_n, "Index")->required()->check(CLI::PositiveNumber);
  oracle->add_flag("--list-triples", list_triples, "List every essential triple");
  oracle->add_flag("--classes", list_classes, "List conjugacy classes");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Expand a Dirichlet generating function");
  auto* expr_opt = series->add_option("--expr", sa.expr, "Expression, e.g. \"zeta(s)*theta(s)\"");
  auto* entry_opt = series->add_option("--entry", sa.entry, "Table entry kind:type:group, e.g. s:z3:g3");
  expr_opt->excludes(entry_opt);
  series->add_option("--nmax", sa.nmax, "Number of coefficients")->check(CLI::PositiveNumber);
  series->add_flag("--compare-formulas", sa.compare, "Compare with the closed formula");
  series->add_option("--group", sa.target.group, "Comparison target group (with --expr)");
  series->add_option("--kind", sa.target.kind, "Comparison target kind (with --expr)");
  series->add_option("--sub", sa.target.sub, "Comparison target type (with --expr)");
  series->add_option("--format", sa.fmt, "csv, json or bfile")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_sel, table_nmax, table_fmt);
    if (*verify) return cmd_verify(verify_nmax, verify_suite);
    if (*oracle) return cmd_oracle(oracle_group, oracle_n, list_triples, list_classes);
    if (*series) {
      if (sa.expr.empty() && sa.entry.empty()) throw Exit{kExitUsage, "series needs --expr or --entry"};
      return cmd_series(sa);
    }
  } catch (const Exit& e) {
    std::cerr << "covers: " << e.message << '\n';
    return e.code;
  }
  return kExitUsage;
}
