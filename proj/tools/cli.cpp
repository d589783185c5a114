#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grent/balanced.hpp"
#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/entropy.hpp"
#include "grent/error.hpp"
#include "grent/roots.hpp"
#include "grent/verify.hpp"

namespace grent::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Csv, Json };

struct RunConfig {
  std::string format;  // empty: the command's default
  double tol = 1e-9;
  std::size_t budget = Budget{}.max_elements;
  std::string log_base = "e";
  std::string out_path;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Table;
  }
  Budget budget_limits() const {
    Budget b;
    b.max_elements = budget;
    return b;
  }
  RootOptions root_options() const {
    RootOptions o;
    o.tolerance = tol;
    return o;
  }
  LogBase base() const { return log_base == "2" ? LogBase::Two : LogBase::Natural; }
};

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Shortest text that reads back to the same double.
std::string full(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

unsigned parse_unsigned(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw Error(std::string("expected a non-negative integer for ") + what + ", got \"" + s + "\"");
  }
  if (pos != s.size() || v > 1'000'000'000ul) {
    throw Error(std::string("expected a non-negative integer for ") + what + ", got \"" + s + "\"");
  }
  return static_cast<unsigned>(v);
}

// Resolves "<family> <n>", "sb4" or --file into a permutation-set spec.
struct Target {
  std::optional<GroupSpec> spec;
  std::size_t consumed = 0;
};

Target resolve_target(const std::vector<std::string>& tokens, const std::string& file, bool generated,
                      const RunConfig& cfg) {
  Target t;
  if (!file.empty()) {
    auto perms = load_permutation_file(file);
    t.spec = generated ? GroupSpec::generated(std::move(perms)) : GroupSpec::explicit_set(std::move(perms));
    return t;
  }
  if (tokens.empty()) throw Error("missing group family (symmetric|alternating|cyclic|dihedral|sb4) or --file");
  if (tokens[0] == "sb4") {
    t.spec = GroupSpec::explicit_set(sb4_elements());
    t.consumed = 1;
    return t;
  }
  Family f = parse_family(tokens[0]);
  if (tokens.size() < 2) throw Error("missing size after family " + tokens[0]);
  t.spec = GroupSpec::named(f, parse_unsigned(tokens[1], "group size"));
  t.consumed = 2;
  (void)cfg;
  return t;
}

// ---------------------------------------------------------------- series

int cmd_series(const std::vector<std::string>& args, const RunConfig& cfg, std::ostream& out) {
  if (args.size() != 2) throw Error("usage: series <family> <n_max>");
  Family f = parse_family(args[0]);
  unsigned n_max = parse_unsigned(args[1], "n_max");
  if (n_max > 100'000) throw BudgetExceeded("series n_max above 100000");
  if (f == Family::Dihedral && n_max > 2'000) throw BudgetExceeded("dihedral series n_max above 2000");
  const bool cyclic = f == Family::Cyclic;
  unsigned first = f == Family::Dihedral ? 3 : 1;
  json rows = json::array();
  if (cfg.fmt() == Format::Csv) {
    out << "n,series_value_exact,series_value_float" << (cyclic ? ",is_prime" : "") << '\n';
  } else if (cfg.fmt() == Format::Table) {
    out << "n\tvalue\texact" << (cyclic ? "\tprime" : "") << '\n';
  }
  for (unsigned n = first; n <= n_max; ++n) {
    Rational v = f == Family::Symmetric ? harmonic(n) : family_mean_cycles(f, n);
    switch (cfg.fmt()) {
      case Format::Csv:
        out << n << ',' << v.get_str() << ',' << full(to_double(v));
        if (cyclic) out << ',' << (is_prime(n) ? 1 : 0);
        out << '\n';
        break;
      case Format::Table:
        out << n << '\t' << fixed(to_double(v), 4) << '\t' << v.get_str();
        if (cyclic) out << '\t' << (is_prime(n) ? "prime" : "");
        out << '\n';
        break;
      case Format::Json: {
        json row = {{"n", n}, {"exact", v.get_str()}, {"value", to_double(v)}};
        if (cyclic) row["is_prime"] = is_prime(n);
        rows.push_back(row);
        break;
      }
    }
  }
  if (cfg.fmt() == Format::Json) out << json{{"family", to_string(f)}, {"series", rows}}.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------- table-a1

std::string column_label(const std::vector<Point>& support) {
  if (support.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(support[i]);
  }
  return s;
}

int cmd_table_a1(const std::vector<std::string>& args, const RunConfig& cfg, std::ostream& out) {
  if (args.size() > 1) throw Error("usage: table-a1 [n_max <= 9]");
  unsigned n_max = args.empty() ? 8 : parse_unsigned(args[0], "n_max");
  if (n_max == 0 || n_max > 9) throw BudgetExceeded("table-a1 supports 1 <= n_max <= 9");
  auto columns = table_a1_columns(n_max);
  auto rows = table_a1_rows(n_max, cfg.budget_limits());
  if (cfg.fmt() == Format::Json) {
    json j = json::array();
    for (const auto& r : rows) {
      json counts = json::object();
      for (std::size_t i = 0; i < r.counts.size(); ++i) counts[column_label(columns[i])] = r.counts[i].get_str();
      j.push_back({{"group", r.label},
                   {"counts", counts},
                   {"sum", r.sum.get_str()},
                   {"mean_exact", r.mean.get_str()},
                   {"mean", to_double(r.mean)}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  const char sep = cfg.fmt() == Format::Csv ? ',' : '\t';
  out << "group";
  for (const auto& c : columns) out << sep << column_label(c);
  out << sep << "sum" << sep << "harmonics\n";
  for (const auto& r : rows) {
    out << r.label;
    for (std::size_t i = 0; i < columns.size(); ++i) out << sep << (i < r.counts.size() ? r.counts[i].get_str() : "");
    out << sep << r.sum.get_str() << sep << fixed(to_double(r.mean), 4) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- poly

int cmd_poly(const std::vector<std::string>& args, const std::string& file, bool generated, std::string which,
             const RunConfig& cfg, std::ostream& out) {
  Target t = resolve_target(args, file, generated, cfg);
  if (t.consumed < args.size()) {
    if (t.consumed + 1 != args.size()) throw Error("too many arguments to poly");
    which = args[t.consumed];
  }
  if (which != "cycle" && which != "transposition") throw Error("poly kind must be cycle or transposition");
  const GroupSpec& spec = *t.spec;
  IntPolynomial p = which == "cycle" ? cycle_polynomial(spec, cfg.budget_limits())
                                     : transposition_polynomial(spec, cfg.budget_limits());
  const std::size_t width = spec.degree() + 1;
  switch (cfg.fmt()) {
    case Format::Table:
      out << p.to_string() << '\n';
      break;
    case Format::Csv:
      for (std::size_t k = 0; k < width; ++k) out << (k ? "," : "") << "x^" << k;
      out << '\n' << p.to_csv_row(width) << '\n';
      break;
    case Format::Json: {
      json coeffs = json::array();
      for (std::size_t k = 0; k < width; ++k) coeffs.push_back(p.coefficient(k).get_str());
      out << json{{"spec", spec.name()}, {"kind", which}, {"polynomial", p.to_string()}, {"coefficients", coeffs}}.dump(2)
          << '\n';
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- roots

int cmd_roots(const std::vector<std::string>& args, const std::string& file, bool generated, const RunConfig& cfg,
              std::ostream& out) {
  Target t = resolve_target(args, file, generated, cfg);
  if (t.consumed != args.size()) throw Error("too many arguments to roots");
  RootReport report = root_report(*t.spec, cfg.root_options(), cfg.budget_limits());
  if (cfg.fmt() == Format::Json || cfg.format.empty()) {
    out << to_json(report) << '\n';
  } else {
    const char sep = cfg.fmt() == Format::Csv ? ',' : '\t';
    out << "polynomial" << sep << "re" << sep << "im" << sep << "residual\n";
    auto emit = [&](const char* which, const std::vector<ComplexRoot>& roots) {
      for (const auto& r : roots) out << which << sep << full(r.re) << sep << full(r.im) << sep << full(r.residual) << '\n';
    };
    emit("P", report.roots);
    emit("Q", report.q_roots);
    if (cfg.fmt() == Format::Table) {
      out << "\nmean cycles " << report.mean_cycles.get_str() << ", mean transpositions "
          << report.mean_transpositions.get_str() << '\n';
      for (const auto& c : report.identity_checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << " value=" << full(c.value) << " residual=" << full(c.residual)
            << '\n';
      }
    }
  }
  return report.passed() ? 0 : 1;
}

// ---------------------------------------------------------------- entropy

int cmd_entropy(const std::vector<std::string>& args, std::optional<unsigned> search, const std::string& functional,
                const RunConfig& cfg, std::ostream& out) {
  if (args.size() != 2) throw Error("usage: entropy <family> <partition> [--search m]");
  Family f = parse_family(args[0]);
  PartitionSpec p = PartitionSpec::parse(args[1]);
  EntropyReport report = integer_entropy(f, p, cfg.base());
  Rational jt = transposition_entropy(f, p);
  std::optional<MaxEntropyResult> result;
  if (search) {
    Functional fn = functional == "I" ? Functional::Shannon : Functional::Integer;
    if (functional != "I" && functional != "J") throw Error("--functional must be J or I");
    Budget b = cfg.budget_limits();
    result = max_entropy_partition(f, p.total(), *search, fn, b);
  }
  switch (cfg.fmt()) {
    case Format::Json: {
      json j = json::parse(report.to_json());
      j["J_transposition_form"] = jt.get_str();
      if (result) {
        json ranking = json::array();
        for (const auto& r : result->ranking) {
          json row = {{"partition", r.partition.parts()}, {"value", r.value}};
          if (r.exact) row["exact"] = r.exact->get_str();
          ranking.push_back(row);
        }
        std::size_t rank = p.size() == *search ? result->rank_of(p) : 0;
        j["search"] = {{"N", result->total},
                       {"m", result->parts},
                       {"functional", functional},
                       {"argmax", result->best().partition.parts()},
                       {"argmax_value", result->best().value},
                       {"query_rank", rank},
                       {"query_is_argmax", rank == 1},
                       {"ranking", ranking}};
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (!result) {
        out << report.to_csv();
      } else {
        out << "rank,partition,value,exact\n";
        for (std::size_t i = 0; i < result->ranking.size(); ++i) {
          const auto& r = result->ranking[i];
          std::string parts;
          for (unsigned v : r.partition.parts()) parts += (parts.empty() ? "" : " ") + std::to_string(v);
          out << i + 1 << ',' << parts << ',' << full(r.value) << ',' << (r.exact ? r.exact->get_str() : "") << '\n';
        }
      }
      break;
    case Format::Table: {
      out << to_string(f) << ' ' << p.to_string() << "  N=" << p.total() << "  m=" << p.size() << '\n';
      out << "J = " << report.J.get_str() << " = " << fixed(to_double(report.J), 6) << '\n';
      out << "I = " << fixed(report.shannon, 6) << (cfg.base() == LogBase::Two ? " bits" : " nats") << '\n';
      if (result) {
        out << "search over " << result->ranking.size() << " partitions of " << result->total << " into "
            << result->parts << " parts (" << functional << "):\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(10, result->ranking.size()); ++i) {
          const auto& r = result->ranking[i];
          out << "  " << std::setw(3) << i + 1 << "  " << r.partition.to_string() << "  " << fixed(r.value, 6) << '\n';
        }
        out << "argmax " << result->best().partition.to_string();
        if (p.size() == *search) {
          std::size_t rank = result->rank_of(p);
          out << "; " << p.to_string() << (rank == 1 ? " is the maximizer" : " ranks " + std::to_string(rank));
        }
        out << '\n';
      }
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- converge

int cmd_converge(const std::vector<std::string>& args, const std::string& scales_text, const RunConfig& cfg,
                 std::ostream& out) {
  if (args.size() != 1) throw Error("usage: converge <shape> [--scales 1,10,100,1000]");
  PartitionSpec shape = PartitionSpec::parse(args[0]);
  std::vector<unsigned> scales = PartitionSpec::parse(scales_text).parts();
  for (unsigned s : scales) {
    if (static_cast<unsigned long long>(s) * shape.total() > 10'000'000ull) throw BudgetExceeded("scaled N above 1e7");
  }
  auto rows = convergence_profile(shape, scales, cfg.base());
  if (cfg.fmt() == Format::Json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"scale", r.scale}, {"N", r.total}, {"J", r.J_value}, {"I", r.shannon}, {"abs_diff", r.abs_diff}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << convergence_csv(rows);
  }
  return 0;
}

// ---------------------------------------------------------------- balanced

int cmd_balanced(const std::vector<std::string>& args, const std::string& file, bool any_class,
                 std::size_t max_solutions, const RunConfig& cfg, std::ostream& out) {
  if (!args.empty() && args[0] == "check") {
    if (file.empty()) throw Error("usage: balanced check --file <perms>");
    auto perms = GroupSpec::explicit_set(load_permutation_file(file));
    auto report = balance_report(materialize(perms, cfg.budget_limits()), cfg.root_options());
    if (cfg.fmt() == Format::Table) {
      out << "size " << report.size << ", degree " << report.degree << "\n<C> = " << report.expected_cycles.get_str()
          << ", <T> = " << report.expected_transpositions.get_str() << '\n'
          << (report.is_balanced ? "balanced" : "not balanced") << ", " << (report.is_group ? "a group" : "not a group")
          << ", root identity residual " << full(report.root_identity_residual) << '\n';
    } else {
      out << report.to_json() << '\n';
    }
    return 0;
  }
  if (args.size() != 1) throw Error("usage: balanced <n> [--any-class] | balanced check --file <perms>");
  unsigned n = parse_unsigned(args[0], "n");
  auto result = make_balanced_from_symmetric(n, any_class ? DeletionScope::AnyClass : DeletionScope::Transpositions,
                                             max_solutions, cfg.budget_limits(), cfg.root_options());
  if (cfg.fmt() == Format::Table) {
    if (!result.minimal_deletions) {
      out << "no balanced set: " << result.diagnostics << '\n';
    } else {
      out << "n = " << n << ": deleting " << *result.minimal_deletions << " element(s) balances S_" << n << "; "
          << result.solution_count.get_str() << " deletion set(s)\n";
      if (!result.solutions.empty()) {
        const auto& s = result.solutions.front();
        out << "P(x) = " << s.cycle_poly.to_string() << "\nQ(x) = " << s.transposition_poly.to_string() << '\n'
            << "<C> = " << s.report.expected_cycles.get_str() << ", <T> = " << s.report.expected_transpositions.get_str()
            << ", is_group = " << (s.report.is_group ? "true" : "false") << '\n';
        out << "deleted:";
        for (const auto& d : s.deleted) out << ' ' << d.to_cycle_string();
        out << '\n';
      }
    }
  } else {
    out << result.to_json() << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::vector<std::string>& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (args.empty() || args.size() > 2) throw Error("usage: verify <bounds|rootsums|reciprocity|all> [n_max]");
  VerifyOptions o;
  o.n_max = args.size() == 2 ? parse_unsigned(args[1], "n_max") : 8;
  if (o.n_max > 12) throw BudgetExceeded("verify supports n_max <= 12");
  o.roots = cfg.root_options();
  o.budget = cfg.budget_limits();
  VerifyResult r = run_verify(parse_verify_suite(args[0]), o);
  if (cfg.fmt() == Format::Json) {
    out << r.to_json() << '\n';
  } else {
    out << r.to_table();
    if (!r.passed()) err << r.to_json() << '\n';
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

std::vector<std::vector<Point>> table_a1_columns(unsigned n_max) {
  std::vector<std::vector<Point>> cols;
  for (unsigned support = 0; support <= n_max; ++support) {
    if (support == 1) continue;
    std::vector<std::vector<Point>> group;
    if (support == 0) {
      group.push_back({});
    } else {
      PartitionGenerator gen(support);
      while (gen.next()) {
        const auto& parts = gen.current();
        if (parts.back() >= 2) group.push_back(parts);
      }
    }
    std::stable_sort(group.begin(), group.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    cols.insert(cols.end(), group.begin(), group.end());
  }
  return cols;
}

std::vector<TableA1Row> table_a1_rows(unsigned n_max, const Budget& budget) {
  std::vector<TableA1Row> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    auto columns = table_a1_columns(n);
    for (Family f : {Family::Symmetric, Family::Alternating}) {
      ClassTable table = class_table(GroupSpec::named(f, n), budget);
      TableA1Row row;
      row.label = std::to_string(n) + (f == Family::Symmetric ? "S" : "A");
      row.n = n;
      Integer cycles = 0;
      for (const auto& c : columns) {
        std::vector<Point> lengths = c;
        Point support = 0;
        for (Point l : c) support += l;
        lengths.insert(lengths.end(), n - support, 1);
        CycleType type(lengths);
        Integer count = table.count(type);
        cycles += count * static_cast<unsigned long>(type.parts());
        row.counts.push_back(count);
      }
      row.sum = table.total();
      row.mean = Rational(cycles, row.sum);
      row.mean.canonicalize();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"grent: integer entropy, cycle and transposition polynomials of permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format (default table; roots defaults to json)")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--tol", cfg.tol, "Root acceptance tolerance (relative residual)");
  app.add_option("--budget", cfg.budget, "Explicit enumeration budget (elements)");
  app.add_option("--log-base", cfg.log_base, "Shannon log base: e or 2")->check(CLI::IsMember({"e", "2"}));
  app.add_option("--out", cfg.out_path, "Write output to FILE");

  std::vector<std::string> pos;
  std::string file;
  bool generated = false;
  std::string which = "cycle";
  std::optional<unsigned> search;
  std::string functional = "J";
  std::string scales = "1,10,100,1000";
  bool any_class = false;
  std::size_t max_solutions = 64;

  auto* series = app.add_subcommand("series", "Expected cycle series of a family for n = 1..n_max");
  series->add_option("args", pos, "<family> <n_max>");
  auto* table = app.add_subcommand("table-a1", "Cycle-type tally of S_n and A_n");
  table->add_option("args", pos, "[n_max]");
  auto* poly = app.add_subcommand("poly", "Cycle or transposition polynomial");
  poly->add_option("args", pos, "<family> <n> [cycle|transposition] | sb4 [kind]");
  poly->add_option("--which", which, "cycle or transposition");
  poly->add_option("--file", file, "Permutation set file (cycle notation, one per line)");
  poly->add_flag("--generated", generated, "Treat --file as generators and close under composition");
  auto* roots = app.add_subcommand("roots", "Polynomial roots and root identity checks");
  roots->add_option("args", pos, "<family> <n> | sb4");
  roots->add_option("--file", file, "Permutation set file");
  roots->add_flag("--generated", generated, "Treat --file as generators");
  auto* entropy = app.add_subcommand("entropy", "Integer entropy of a partition, optionally with a partition search");
  entropy->add_option("args", pos, "<family> <partition>");
  entropy->add_option("--search", search, "Search all partitions of N into m parts");
  entropy->add_option("--functional", functional, "J (integer entropy) or I (Shannon)");
  auto* converge = app.add_subcommand("converge", "Integer vs Shannon entropy under proportional scaling");
  converge->add_option("args", pos, "<shape>");
  converge->add_option("--scales", scales, "Comma-separated scale factors");
  auto* balanced = app.add_subcommand("balanced", "Balanced subsets of S_n by deletion");
  balanced->add_option("args", pos, "<n> | check");
  balanced->add_option("--file", file, "Permutation set file for 'check'");
  balanced->add_flag("--any-class", any_class, "Allow deleting elements of any cycle count");
  balanced->add_option("--max-solutions", max_solutions, "Concrete solutions to emit");
  auto* verify = app.add_subcommand("verify", "Identity battery");
  verify->add_option("args", pos, "<bounds|rootsums|reciprocity|closed-forms|discrepancies|all> [n_max]");

  std::ostringstream buffer;
  int code = 0;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*series) code = cmd_series(pos, cfg, buffer);
    else if (*table) code = cmd_table_a1(pos, cfg, buffer);
    else if (*poly) code = cmd_poly(pos, file, generated, which, cfg, buffer);
    else if (*roots) code = cmd_roots(pos, file, generated, cfg, buffer);
    else if (*entropy) code = cmd_entropy(pos, search, functional, cfg, buffer);
    else if (*converge) code = cmd_converge(pos, scales, cfg, buffer);
    else if (*balanced) code = cmd_balanced(pos, file, any_class, max_solutions, cfg, buffer);
    else if (*verify) code = cmd_verify(pos, cfg, buffer, err);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", e.what()}, {"kind", "usage"}}.dump() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << json{{"error", e.what()}, {"kind", "budget"}}.dump() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}, {"kind", "error"}}.dump() << '\n';
    return 2;
  }
  if (!cfg.out_path.empty()) {
    std::ofstream file_out(cfg.out_path);
    if (!file_out) {
      err << json{{"error", "cannot write " + cfg.out_path}, {"kind", "io"}}.dump() << '\n';
      return 2;
    }
    file_out << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace grent::cli
