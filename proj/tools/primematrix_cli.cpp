// Copyright 2026 The primematrix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through primematrix.h.
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "primematrix/primematrix.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  LibraryError(pm_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  pm_status status;
};

void check(pm_status status) {
  if (status != PM_OK) {
    throw LibraryError(status, std::string(pm_status_name(status)) + ": " + pm_last_error());
  }
}

struct MatrixDeleter {
  void operator()(pm_matrix* m) const { pm_matrix_destroy(m); }
};
struct CursorDeleter {
  void operator()(pm_twin_cursor* c) const { pm_twin_cursor_destroy(c); }
};
struct ReportDeleter {
  void operator()(pm_gap_report* r) const { pm_gap_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { pm_free(s); }
};

using MatrixPtr = std::unique_ptr<pm_matrix, MatrixDeleter>;
using CursorPtr = std::unique_ptr<pm_twin_cursor, CursorDeleter>;
using ReportPtr = std::unique_ptr<pm_gap_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

MatrixPtr make_matrix(unsigned k) {
  pm_matrix* m = nullptr;
  check(pm_matrix_create(k, &m));
  return MatrixPtr(m);
}

enum class Format { text, csv, json, pgm };

struct RunConfig {
  unsigned k = 0;
  std::size_t count = 0;
  std::uint64_t columns = 0;
  std::uint64_t bound = 0;
  std::string format;  // empty: the subcommand's default
  std::string out;
  std::string rows;
  unsigned jobs = 0;
  bool oracle = false;
  bool list = false;
  bool pairs = false;
  unsigned from = 0;
  std::uint64_t pair = 0;
};

Format parse_format(const std::string& name, bool render) {
  Format f;
  if (name == "text") {
    f = Format::text;
  } else if (name == "csv") {
    f = Format::csv;
  } else if (name == "json") {
    f = Format::json;
  } else if (name == "pgm") {
    f = Format::pgm;
  } else {
    throw UsageError("unknown format '" + name + "'");
  }
  if (render != (f == Format::pgm)) {
    throw UsageError(render ? "render only writes pgm" : "format pgm is only valid for render");
  }
  return f;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// "A:B", "A..B" or a single row "A".
std::pair<std::uint64_t, std::uint64_t> parse_rows(const std::string& spec, std::uint64_t default_last) {
  if (spec.empty()) return {1, default_last};
  try {
    std::size_t sep = spec.find(':');
    std::size_t width = 1;
    if (sep == std::string::npos) {
      sep = spec.find("..");
      width = 2;
    }
    if (sep == std::string::npos) {
      const std::uint64_t row = std::stoull(spec);
      return {row, row};
    }
    return {std::stoull(spec.substr(0, sep)), std::stoull(spec.substr(sep + width))};
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse row range '" + spec + "'");
  }
}

// Stdout unless --out names a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// ---- subcommands ---------------------------------------------------------

int cmd_primes(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format, false);
  Sink sink(cfg.out);
  std::ostream& out = sink.stream();
  struct State {
    std::ostream* out;
    Format format;
    std::size_t index;
  } state{&out, format, 0};
  if (format == Format::csv) out << "index,prime\n";
  if (format == Format::json) out << "[";
  check(pm_generate_primes(
      cfg.count, cfg.oracle ? 1 : 0,
      [](std::uint64_t p, void* user) {
        auto* s = static_cast<State*>(user);
        ++s->index;
        switch (s->format) {
          case Format::csv: *s->out << s->index << ',' << p << '\n'; break;
          case Format::json: *s->out << (s->index > 1 ? "," : "") << p; break;
          default: *s->out << p << '\n'; break;
        }
        return 0;
      },
      &state));
  if (format == Format::json) out << "]\n";
  return kExitOk;
}

int cmd_rows(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format, false);
  MatrixPtr matrix = make_matrix(cfg.k);
  const auto [first, last] = parse_rows(cfg.rows, pm_matrix_rows(matrix.get()));
  if (first < 1 || last < first || last > pm_matrix_rows(matrix.get())) throw UsageError("row range out of bounds");
  Sink sink(cfg.out);
  std::ostream& out = sink.stream();
  if (format == Format::csv) out << "row,residue,status,leading_prime\n";
  if (format == Format::json) out << "[";
  for (std::uint64_t i = first; i <= last; ++i) {
    pm_row_class c;
    check(pm_matrix_classify_row(matrix.get(), i, &c));
    const char* status = c.uncolored ? "uncolored" : "colored";
    switch (format) {
      case Format::csv:
        out << c.row << ',' << c.residue << ',' << status << ',';
        if (c.leading_prime) out << c.leading_prime;
        out << '\n';
        break;
      case Format::json:
        out << (i > first ? ",\n " : "") << "{\"row\":" << c.row << ",\"residue\":" << c.residue << ",\"status\":\""
            << status << "\",\"leading_prime\":";
        if (c.leading_prime) {
          out << c.leading_prime;
        } else {
          out << "null";
        }
        out << '}';
        break;
      default:
        out << c.row << '\t' << c.residue << '\t' << status;
        if (c.leading_prime) out << "\tleading prime " << c.leading_prime;
        out << '\n';
    }
  }
  if (format == Format::json) out << "]\n";
  return kExitOk;
}

int cmd_twins(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format, false);
  MatrixPtr matrix = make_matrix(cfg.k);
  std::uint64_t formula = 0;
  check(pm_matrix_twin_pair_count(matrix.get(), &formula));
  pm_twin_cursor* raw = nullptr;
  check(pm_twin_cursor_create(matrix.get(), 1, 0, &raw));
  CursorPtr cursor(raw);

  Sink sink(cfg.out);
  std::ostream& out = sink.stream();
  if (format == Format::csv) out << "lower_row,upper_row,lower_residue,upper_residue\n";
  if (format == Format::json) out << "{\"k\":" << cfg.k << ",\"pairs\":[";
  std::uint64_t count = 0;
  for (;;) {
    pm_twin_pair pair;
    int has = 0;
    check(pm_twin_cursor_next(cursor.get(), &pair, &has));
    if (!has) break;
    ++count;
    switch (format) {
      case Format::csv:
        out << pair.lower_row << ',' << pair.upper_row << ',' << pair.lower_residue << ',' << pair.upper_residue
            << '\n';
        break;
      case Format::json:
        out << (count > 1 ? ",\n " : "") << "{\"lower_row\":" << pair.lower_row
            << ",\"upper_row\":" << pair.upper_row << ",\"lower_residue\":" << pair.lower_residue
            << ",\"upper_residue\":" << pair.upper_residue << '}';
        break;
      default:
        out << "rows " << pair.lower_row << ',' << pair.upper_row << "\tresidues " << pair.lower_residue << ','
            << pair.upper_residue << '\n';
    }
  }
  switch (format) {
    case Format::json: out << "],\"count\":" << count << ",\"formula\":" << formula << "}\n"; break;
    case Format::csv: std::cerr << "count " << count << " (formula " << formula << ")\n"; break;
    default: out << "count " << count << " (formula " << formula << ")\n";
  }
  if (count != formula) {
    std::cerr << "twin pair count " << count << " disagrees with formula " << formula << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_lift(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format, false);
  if (cfg.k < 3) throw UsageError("lift needs --k >= 3");
  MatrixPtr child = make_matrix(cfg.k);
  MatrixPtr parent = make_matrix(cfg.k - 1);
  std::vector<std::uint64_t> parents;
  if (cfg.pair != 0) {
    parents.push_back(cfg.pair);
  } else {
    pm_twin_cursor* raw = nullptr;
    check(pm_twin_cursor_create(parent.get(), 1, 0, &raw));
    CursorPtr cursor(raw);
    pm_twin_pair pair;
    int has = 0;
    while (check(pm_twin_cursor_next(cursor.get(), &pair, &has)), has) parents.push_back(pair.lower_residue);
  }

  std::uint64_t p = 0;
  check(pm_matrix_basis_prime(child.get(), cfg.k - 1, &p));
  std::vector<pm_lift_child> children(p);
  Sink sink(cfg.out);
  std::ostream& out = sink.stream();
  if (format == Format::csv) out << "parent_lo,parent_hi,offset,child_lo,child_hi,fate\n";
  if (format == Format::json) out << "[";
  bool first_record = true;
  for (std::uint64_t r : parents) {
    std::size_t n = 0;
    check(pm_lift_pair(child.get(), r, children.data(), children.size(), &n));
    std::uint64_t low = 0, high = 0;
    check(pm_killed_offsets(child.get(), r, &low, &high));
    if (format == Format::text) {
      out << "parent (" << r << ',' << r + 2 << ") killed offsets low=" << low << " high=" << high << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
      const pm_lift_child& c = children[i];
      const char* fate = c.fate == PM_CHILD_SURVIVOR     ? "survivor"
                         : c.fate == PM_CHILD_KILLED_LOW ? "killed_low"
                                                         : "killed_high";
      switch (format) {
        case Format::csv:
          out << r << ',' << r + 2 << ',' << c.offset << ',' << c.pair.lower_residue << ',' << c.pair.upper_residue
              << ',' << fate << '\n';
          break;
        case Format::json:
          out << (first_record ? "" : ",\n ") << "{\"parent_lo\":" << r << ",\"parent_hi\":" << r + 2
              << ",\"offset\":" << c.offset << ",\"child_lo\":" << c.pair.lower_residue
              << ",\"child_hi\":" << c.pair.upper_residue << ",\"fate\":\"" << fate << "\"}";
          break;
        default:
          out << "  m=" << c.offset << "\t(" << c.pair.lower_residue << ',' << c.pair.upper_residue << ")\t" << fate
              << '\n';
      }
      first_record = false;
    }
  }
  if (format == Format::json) out << "]\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  parse_format(cfg.format, false);
  int all_passed = 0;
  check(pm_verify(
      cfg.k,
      [](const pm_check* c, void*) {
        std::cout << (c->passed ? "PASS  " : "FAIL  ") << c->name << "  (" << c->detail << ")\n" << std::flush;
      },
      nullptr, &all_passed));
  std::cout << (all_passed ? "all checks passed\n" : "verification FAILED\n");
  return all_passed ? kExitOk : kExitFailure;
}

int cmd_stats(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format, false);
  const unsigned jobs = resolve_jobs(cfg.jobs);
  Sink sink(cfg.out);
  std::ostream& out = sink.stream();

  if (cfg.columns != 0) {
    MatrixPtr matrix = make_matrix(cfg.k);
    double mean = 0.0, deviation = 0.0;
    check(pm_equidistribution(matrix.get(), cfg.columns, nullptr, 0, jobs, &mean, &deviation));
    char line[160];
    switch (format) {
      case Format::csv:
        std::snprintf(line, sizeof line, "k,M,pi_mean,max_relative_deviation\n%u,%llu,%.12g,%.12g\n", cfg.k,
                      static_cast<unsigned long long>(cfg.columns), mean, deviation);
        break;
      case Format::json:
        std::snprintf(line, sizeof line, "{\"k\":%u,\"M\":%llu,\"pi_mean\":%.12g,\"max_relative_deviation\":%.12g}\n",
                      cfg.k, static_cast<unsigned long long>(cfg.columns), mean, deviation);
        break;
      default:
        std::snprintf(line, sizeof line, "k=%u M=%llu pi_mean=%.12g max_relative_deviation=%.12g\n", cfg.k,
                      static_cast<unsigned long long>(cfg.columns), mean, deviation);
    }
    out << line;
    return kExitOk;
  }

  if (cfg.bound == 0) throw UsageError("stats needs --bound (or --columns for an equidistribution report)");
  const unsigned from = cfg.from != 0 ? cfg.from : 2;
  if (from > cfg.k) throw UsageError("--from must not exceed --k");
  pm_gap_report* raw = nullptr;
  check(pm_gap_report_create(cfg.bound, from, cfg.k, jobs, &raw));
  ReportPtr report(raw);
  const pm_format f = format == Format::csv ? PM_FORMAT_CSV : format == Format::json ? PM_FORMAT_JSON : PM_FORMAT_TEXT;
  char* text = nullptr;
  check(pm_gap_report_serialize(report.get(), f, cfg.pairs ? 1 : 0, &text));
  StringPtr owned(text);
  out << owned.get();
  return kExitOk;
}

int cmd_census(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format, false);
  struct State {
    std::vector<std::uint64_t> twins;
    bool keep;
  } state{{}, cfg.list || format != Format::text};
  auto collect = [](std::uint64_t p, void* user) {
    auto* s = static_cast<State*>(user);
    if (s->keep) s->twins.push_back(p);
    return 0;
  };
  std::uint64_t count = 0;
  std::string method;
  if (cfg.oracle) {
    check(pm_twin_census(cfg.bound, collect, &state, &count));
    method = "sieve";
  } else {
    MatrixPtr matrix = make_matrix(cfg.k);
    check(pm_twin_census_via_rows(matrix.get(), cfg.bound, resolve_jobs(cfg.jobs), collect, &state, &count));
    method = "rows";
  }

  Sink sink(cfg.out);
  std::ostream& out = sink.stream();
  switch (format) {
    case Format::csv:
      out << "p,p_plus_2\n";
      for (std::uint64_t p : state.twins) out << p << ',' << p + 2 << '\n';
      std::cerr << "count " << count << '\n';
      break;
    case Format::json:
      out << "{\"bound\":" << cfg.bound << ",\"method\":\"" << method << "\",\"count\":" << count << ",\"pairs\":[";
      for (std::size_t i = 0; i < state.twins.size(); ++i) {
        out << (i ? "," : "") << '[' << state.twins[i] << ',' << state.twins[i] + 2 << ']';
      }
      out << "]}\n";
      break;
    default:
      for (std::uint64_t p : state.twins) out << p << ' ' << p + 2 << '\n';
      out << "twin pairs up to " << cfg.bound << " (" << method << "): " << count << '\n';
  }
  return kExitOk;
}

int cmd_render(const RunConfig& cfg) {
  parse_format(cfg.format, true);
  if (cfg.columns == 0) throw UsageError("render needs --columns >= 1");
  MatrixPtr matrix = make_matrix(cfg.k);
  const auto [first, last] = parse_rows(cfg.rows, pm_matrix_rows(matrix.get()));
  if (!cfg.out.empty()) {
    check(pm_render_fragment_to_file(matrix.get(), first, last, cfg.columns, cfg.out.c_str()));
    return kExitOk;
  }
  char* pgm = nullptr;
  std::size_t length = 0;
  check(pm_render_fragment(matrix.get(), first, last, cfg.columns, &pgm, &length));
  StringPtr owned(pgm);
  std::cout.write(owned.get(), static_cast<std::streamsize>(length));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime matrices: primorial rows, twin row pairs and their statistics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pm_version());

  RunConfig cfg;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, csv, json (pgm for render)");
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };
  const auto level = CLI::Range(1u, 15u);
  const auto enum_level = CLI::Range(2u, 9u);

  auto* primes = app.add_subcommand("primes", "First primes produced by the matrix generator");
  primes->add_option("--count", cfg.count, "How many primes")->required()->check(CLI::PositiveNumber);
  primes->add_flag("--oracle", cfg.oracle, "Use the classical sieve instead");
  add_format(primes);

  auto* rows = app.add_subcommand("rows", "Classify the rows of A_k");
  rows->add_option("--k", cfg.k, "Matrix level")->required()->check(enum_level);
  rows->add_option("--rows", cfg.rows, "Row range A:B (default: all rows)");
  add_format(rows);

  auto* twins = app.add_subcommand("twins", "List the twin row pairs of A_k");
  twins->add_option("--k", cfg.k, "Matrix level")->required()->check(enum_level);
  add_format(twins);

  auto* lift = app.add_subcommand("lift", "Lift the twin pairs of A_{k-1} into A_k");
  lift->add_option("--k", cfg.k, "Child matrix level")->required()->check(CLI::Range(3u, 9u));
  lift->add_option("--pair", cfg.pair, "Lift only the parent with this lower residue");
  add_format(lift);

  auto* verify = app.add_subcommand("verify", "Check counting and lifting laws up to k");
  verify->add_option("--k", cfg.k, "Highest level")->required()->check(CLI::Range(3u, 8u));

  auto* stats = app.add_subcommand("stats", "Column-gap statistics of twin row pairs");
  stats->add_option("--k", cfg.k, "Highest level")->required()->check(enum_level);
  stats->add_option("--from", cfg.from, "Lowest level (default 2)")->check(enum_level);
  stats->add_option("--bound", cfg.bound, "Value bound N shared by all levels")->check(CLI::PositiveNumber);
  stats->add_option("--columns", cfg.columns, "Equidistribution report over this many columns instead")
      ->check(CLI::PositiveNumber);
  stats->add_flag("--pairs", cfg.pairs, "One record per twin pair instead of per level");
  stats->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)");
  add_format(stats);

  auto* census = app.add_subcommand("census", "Count twin primes up to a bound");
  census->add_option("--bound", cfg.bound, "Upper bound for p + 2")->required()->check(CLI::Range(5ULL, 1ULL << 40));
  census->add_option("--k", cfg.k, "Matrix level scanned when not using the oracle")->check(enum_level);
  census->add_flag("--oracle", cfg.oracle, "Count with the classical sieve");
  census->add_flag("--list", cfg.list, "Print every pair");
  census->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)");
  add_format(census);

  auto* render = app.add_subcommand("render", "Render a fragment of A_k as a plain graymap");
  render->add_option("--k", cfg.k, "Matrix level")->required()->check(level);
  render->add_option("--rows", cfg.rows, "Row range A:B (default: all rows)");
  render->add_option("--columns", cfg.columns, "Number of columns")->required();
  add_format(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (census->parsed() && cfg.k == 0) cfg.k = 4;
  if (cfg.format.empty()) cfg.format = render->parsed() ? "pgm" : stats->parsed() ? "csv" : "text";

  try {
    if (primes->parsed()) return cmd_primes(cfg);
    if (rows->parsed()) return cmd_rows(cfg);
    if (twins->parsed()) return cmd_twins(cfg);
    if (lift->parsed()) return cmd_lift(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (stats->parsed()) return cmd_stats(cfg);
    if (census->parsed()) return cmd_census(cfg);
    if (render->parsed()) return cmd_render(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.status == PM_ERROR_RANGE || e.status == PM_ERROR_ARGUMENT || e.status == PM_ERROR_DOMAIN;
    return usage ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
