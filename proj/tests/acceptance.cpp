// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1 for ctest).

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli.hpp"
#include "grent/balanced.hpp"
#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/entropy.hpp"
#include "grent/roots.hpp"
#include "grent/verify.hpp"
#include "oracle.hpp"

using namespace grent;

namespace {

int failures = 0;

void report(const std::string& id, bool pass, const std::string& title, const std::string& detail) {
  std::printf("[%s] %-4s %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string fixed4(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", to_double(q));
  return buf;
}

// Golden rows, transcribed from the published S_n / A_n tally (n = 1..8).
struct GoldenRow {
  const char* label;
  std::vector<long> counts;
  long sum;
  const char* mean;
};

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = {
      {"1S", {1}, 1, "1.0000"},
      {"1A", {1}, 1, "1.0000"},
      {"2S", {1, 1}, 2, "1.5000"},
      {"2A", {1, 0}, 1, "2.0000"},
      {"3S", {1, 3, 2}, 6, "1.8333"},
      {"3A", {1, 0, 2}, 3, "1.6667"},
      {"4S", {1, 6, 8, 3, 6}, 24, "2.0833"},
      {"4A", {1, 0, 8, 3, 0}, 12, "2.1667"},
      {"5S", {1, 10, 20, 15, 30, 20, 24}, 120, "2.2833"},
      {"5A", {1, 0, 20, 15, 0, 0, 24}, 60, "2.2333"},
      // Printed with ten entries; the (3,2) column is missing (see below).
      {"6S", {1, 15, 40, 45, 90, 144, 15, 90, 40, 120}, 720, "2.4500"},
      {"6A", {1, 0, 40, 45, 0, 0, 144, 0, 90, 40, 0}, 360, "2.4833"},
      {"7S", {1, 21, 70, 105, 210, 420, 504, 105, 630, 280, 840, 210, 504, 420, 720}, 5040, "2.5929"},
      {"7A", {1, 0, 70, 105, 0, 0, 504, 0, 630, 280, 0, 210, 0, 0, 720}, 2520, "2.5690"},
      {"8S", {1, 28, 112, 210, 420, 1120, 1344, 420, 2520, 1120, 3360, 1680, 4032, 3360, 5760, 105, 1260, 1120, 3360, 2688, 1260, 5040},
       40320, "2.7179"},
      {"8A", {1, 0, 112, 210, 0, 0, 1344, 0, 2520, 1120, 0, 1680, 0, 0, 5760, 105, 0, 0, 3360, 2688, 1260, 0},
       20160, "2.7357"},
  };
  return rows;
}

void criterion_1() {
  auto computed = cli::table_a1_rows(8);
  const auto& golden = golden_rows();
  std::string mismatches;
  std::string notes;
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const auto& g = golden[i];
    const auto& c = computed[i];
    std::vector<long> counts;
    for (const auto& v : c.counts) counts.push_back(v.get_si());
    bool counts_ok = counts == g.counts;
    if (!counts_ok && counts.size() == g.counts.size() + 1) {
      // A printed row with one entry dropped: accept only if removing a single
      // computed entry reproduces it and the printed total still includes it.
      for (std::size_t skip = 0; skip < counts.size() && !counts_ok; ++skip) {
        std::vector<long> reduced = counts;
        reduced.erase(reduced.begin() + static_cast<long>(skip));
        if (reduced == g.counts) {
          long printed_sum = 0;
          for (long v : g.counts) printed_sum += v;
          if (printed_sum + counts[skip] == g.sum) {
            counts_ok = true;
            auto cols = cli::table_a1_columns(c.n);
            std::string col;
            for (auto l : cols[skip]) col += (col.empty() ? "" : ",") + std::to_string(l);
            notes += std::string(" ") + g.label + " printed row omits the (" + col + ") = " + std::to_string(counts[skip]) +
                     " entry (printed entries sum to " + std::to_string(printed_sum) + ", printed total " +
                     std::to_string(g.sum) + ");";
          }
        }
      }
    }
    bool ok = counts_ok && c.sum == g.sum && fixed4(c.mean) == g.mean;
    if (!ok) mismatches += std::string(" ") + g.label;
  }
  report("1", mismatches.empty(), "S_n / A_n cycle-type tally",
         mismatches.empty() ? "16 rows, counts/sums exact, means to 4 decimals (8S " + fixed4(computed[14].mean) + ", 8A " +
                                  fixed4(computed[15].mean) + ");" + notes
                            : "mismatched rows:" + mismatches);
}

void criterion_2() {
  std::string bad;
  for (unsigned n = 3; n <= 9; ++n) {
    if (alternating_series(n) != oracle::mean_cycles(oracle::alternating(n))) bad += " " + std::to_string(n);
  }
  report("2", bad.empty(), "alternating series vs brute-force A_n",
         bad.empty() ? "exact rational equality for n = 3..9 (A_9: 181440 elements)" : "differs at n =" + bad);
}

void criterion_3() {
  bool ok = cyclic_series(5) == Rational(9, 5) && expected_cycles(GroupSpec::cyclic(5)) == Rational(9, 5);
  unsigned primes = 0;
  for (unsigned p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    ++primes;
    Rational c = expected_cycles(GroupSpec::cyclic(p));
    ok = ok && c == Rational(2 * p - 1, p) && abs(c - 2) == Rational(1, p) && cyclic_series(p) == c;
  }
  report("3", ok, "cyclic fixtures", "<C>_{C_5} = 9/5; <C>_{C_p} = (2p-1)/p and |<C> - 2| = 1/p exactly for all " +
                                         std::to_string(primes) + " primes p <= 101");
}

struct RootMaxima {
  double cycles = 0, transpositions = 0, q_transpositions = 0, q_cycles = 0, imag = 0, reciprocity = 0;
  unsigned specs = 0;
  void add(const RootReport& r) {
    cycles = std::max(cycles, r.check("root_sum_cycles")->residual);
    transpositions = std::max(transpositions, r.check("root_sum_transpositions")->residual);
    q_transpositions = std::max(q_transpositions, r.check("q_root_sum_transpositions")->residual);
    q_cycles = std::max(q_cycles, r.check("q_root_sum_cycles")->residual);
    imag = std::max(imag, r.check("imaginary_cancellation")->residual);
    reciprocity = std::max(reciprocity, r.check("reciprocity")->residual);
    ++specs;
  }
};

std::vector<GroupSpec> battery_specs() {
  std::vector<GroupSpec> specs;
  for (unsigned n = 1; n <= 12; ++n) {
    for (auto f : {Family::Symmetric, Family::Alternating, Family::Cyclic, Family::Dihedral}) {
      if (f == Family::Dihedral && n < 3) continue;
      specs.push_back(GroupSpec::named(f, n));
    }
  }
  for (auto& s : random_generated_specs(6, 20, 20240601)) specs.push_back(s);
  return specs;
}

RootMaxima& root_maxima() {
  static RootMaxima m = [] {
    RootMaxima out;
    for (const auto& spec : battery_specs()) out.add(root_report(spec));
    return out;
  }();
  return m;
}

void criterion_4() {
  const auto& m = root_maxima();
  bool ok = m.cycles < 1e-8 && m.transpositions < 1e-8 && m.q_transpositions < 1e-8 && m.q_cycles < 1e-8 && m.imag < 1e-9;
  report("4", ok, "root identity battery",
         std::to_string(m.specs) + " specs (families n <= 12, 20 random subgroups of S_6); max residuals: sum 1/(1-r) " +
             num(m.cycles) + ", sum -r/(1-r) " + num(m.transpositions) + ", sum 1/(1-q) " + num(m.q_transpositions) +
             ", sum -q/(1-q) " + num(m.q_cycles) + " (< 1e-8); imaginary cancellation " + num(m.imag) + " (< 1e-9)");
}

void criterion_5() {
  std::size_t violations = 0;
  unsigned tested = 0;
  bool stirling_equal = true;
  for (unsigned n = 1; n <= 9; ++n) {
    auto s = verify_coefficient_bounds(GroupSpec::symmetric(n));
    stirling_equal = stirling_equal && s.equals_stirling;
    // Equality also checked against an independent Stirling recurrence in long arithmetic.
    std::vector<std::vector<long>> st(n + 1, std::vector<long>(n + 1, 0));
    st[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned k = 1; k <= i; ++k) st[i][k] = st[i - 1][k - 1] + static_cast<long>(i - 1) * st[i - 1][k];
    }
    auto p = cycle_polynomial(GroupSpec::symmetric(n));
    for (unsigned k = 0; k <= n; ++k) stirling_equal = stirling_equal && p.coefficient(k) == st[n][k];

    std::vector<GroupSpec> proper{GroupSpec::alternating(n), GroupSpec::cyclic(n)};
    if (n >= 3) proper.push_back(GroupSpec::dihedral(n));
    if (n >= 4) {
      for (auto& g : random_generated_specs(n, 10, 1000 + n)) proper.push_back(g);
    }
    for (const auto& spec : proper) {
      if (class_table(spec).total() == factorial(n)) continue;  // not proper
      violations += verify_coefficient_bounds(spec).violations;
      ++tested;
    }
  }
  report("5", violations == 0 && stirling_equal, "coefficient bounds",
         std::to_string(violations) + " violations over " + std::to_string(tested) +
             " proper subgroups with n <= 9; g_{n,k} = [n k] for S_n: " + (stirling_equal ? "exact" : "NOT exact"));
}

void criterion_6() {
  bool reversal = true;
  unsigned tested = 0;
  auto check = [&](const std::vector<Permutation>& elements, unsigned n) {
    auto g = cycle_polynomial_of(elements);
    auto f = transposition_polynomial_of(elements);
    for (unsigned k = 0; k <= n; ++k) reversal = reversal && f.coefficient(k) == g.coefficient(n - k);
    ++tested;
  };
  for (const auto& spec : battery_specs()) {
    if (spec.degree() <= 9) check(materialize(spec), spec.degree());
  }
  check(sb4_elements(), 4);
  const auto& m = root_maxima();
  report("6", reversal && m.reciprocity < 1e-8, "reciprocity",
         std::string("f_k = g_{n-k} ") + (reversal ? "exact" : "FAILED") + " on " + std::to_string(tested) +
             " sets; max |1/r - q| (relative) " + num(m.reciprocity) + " over " + std::to_string(m.specs) + " specs (< 1e-8)");
}

void criterion_7() {
  auto search = make_balanced_from_symmetric(4);
  bool ok = search.minimal_deletions && *search.minimal_deletions == 2 && !search.solutions.empty();
  std::string detail;
  if (ok) {
    const auto& s = search.solutions.front();
    ok = s.cycle_poly == IntPolynomial{0, 6, 11, 4, 1} && s.transposition_poly == IntPolynomial{1, 4, 11, 6} &&
         s.report.expected_cycles == 2 && s.report.expected_transpositions == 2 && !s.report.is_group &&
         s.report.is_balanced;
    detail = "P = " + s.cycle_poly.to_string() + ", Q = " + s.transposition_poly.to_string() +
             ", <C> = " + s.report.expected_cycles.get_str() + ", <T> = " + s.report.expected_transpositions.get_str() +
             ", is_group = " + (s.report.is_group ? "true" : "false");
  }
  // General, uniform and fractional balanced forms where they overlap.
  bool closed = true;
  unsigned cases = 0;
  for (unsigned total = 1; total <= 60; ++total) {
    for (unsigned m = 1; m <= total; ++m) {
      if (total % m) continue;
      Rational b4 = balanced_entropy(PartitionSpec(std::vector<unsigned>(m, total / m)));
      closed = closed && b4 == balanced_entropy_uniform(total, m) && b4 == balanced_entropy_fraction(total, m, 1);
      ++cases;
      for (unsigned occ = 1; occ < m; ++occ) {
        if (total % occ) continue;
        Rational f(occ, m);
        f.canonicalize();
        closed = closed && balanced_entropy_fraction(total, m, f) ==
                               balanced_entropy(PartitionSpec(std::vector<unsigned>(occ, total / occ)));
        ++cases;
      }
    }
  }
  report("7", ok && closed, "balanced fixture",
         detail + "; general/uniform/fractional balanced entropy forms agree exactly on " + std::to_string(cases) + " overlapping cases");
}

void criterion_8() {
  struct Case {
    Family family;
    unsigned total, parts;
    std::string expected;  // unordered; compared via rank
  };
  const std::vector<Case> cases = {
      {Family::Symmetric, 25, 5, "5,5,5,5,5"},  {Family::Alternating, 25, 5, "5,5,5,5,5"},
      {Family::Symmetric, 24, 4, "6,6,6,6"},    {Family::Alternating, 24, 4, "6,6,6,6"},
      {Family::Symmetric, 28, 4, "7,7,7,7"},    {Family::Alternating, 28, 4, "7,7,7,7"},
      {Family::Symmetric, 16, 4, "4,4,4,4"},    {Family::Alternating, 16, 4, "3,3,5,5"},
  };
  bool all = true;
  char sub = 'a';
  for (const auto& c : cases) {
    auto result = max_entropy_partition(c.family, c.total, c.parts);
    auto expected = PartitionSpec::parse(c.expected);
    std::size_t rank = result.rank_of(expected);
    bool ok = rank == 1;
    all = all && ok;
    const auto& best = result.best();
    std::string detail = "N=" + std::to_string(c.total) + " m=" + std::to_string(c.parts) + " J_" +
                         (c.family == Family::Symmetric ? "S" : "A") + ": expected " + expected.to_string() +
                         ", argmax " + best.partition.to_string() + " (J = " + best.exact->get_str() + ")";
    if (!ok) {
      detail += "; expected partition ranks " + std::to_string(rank) + " of " + std::to_string(result.ranking.size()) +
                " with J = " + result.ranking[rank - 1].exact->get_str();
    }
    std::printf("       8%c %s %s\n", sub++, ok ? "ok  " : "MISS", detail.c_str());
  }
  report("8", all, "partition maximization",
         all ? "all eight maximizers reproduced"
             : "exhaustive exact search disagrees with the published maximizer (see MISS lines)");
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  for (const auto& shape : {PartitionSpec({1, 1}), PartitionSpec({1, 3}), PartitionSpec({2, 3, 5})}) {
    auto rows = convergence_profile(shape, {1, 10, 100, 1000});
    for (std::size_t i = 1; i < rows.size(); ++i) ok = ok && rows[i].abs_diff < rows[i - 1].abs_diff;
    ok = ok && rows.back().abs_diff < 1e-3;
    detail += shape.to_string() + " |J-I| ";
    for (std::size_t i = 0; i < rows.size(); ++i) detail += (i ? " > " : "") + num(rows[i].abs_diff);
    detail += "; ";
  }
  report("9", ok, "convergence to Shannon entropy", detail + "all strictly decreasing, < 1e-3 at s = 1000");
}

void criterion_10() {
  bool ok = true;
  unsigned specs = 0;
  for (unsigned n = 1; n <= 8; ++n) {
    for (auto f : {Family::Symmetric, Family::Alternating, Family::Cyclic, Family::Dihedral}) {
      if (f == Family::Dihedral && n < 3) continue;
      std::vector<oracle::Images> set;
      switch (f) {
        case Family::Symmetric: set = oracle::all_permutations(n); break;
        case Family::Alternating: set = oracle::alternating(n); break;
        case Family::Cyclic: set = oracle::cyclic(n); break;
        case Family::Dihedral: set = oracle::dihedral(n); break;
      }
      auto spec = GroupSpec::named(f, n);
      auto tally = oracle::cycle_tally(set, n);
      auto p = cycle_polynomial(spec);
      for (unsigned k = 0; k <= n; ++k) ok = ok && p.coefficient(k) == tally[k];
      // Direct expectation over the elements vs the logarithmic derivative of P at 1.
      ok = ok && oracle::mean_cycles(set) == log_derivative_at_one(p);
      ok = ok && oracle::mean_cycles(set) == expected_cycles(spec);
      ++specs;
    }
  }
  // Integer entropy by both routes.
  unsigned partitions_checked = 0;
  for (auto f : {Family::Symmetric, Family::Alternating, Family::Cyclic}) {
    FamilyMeans means(f);
    for (unsigned total = 2; total <= 8; ++total) {
      for (const auto& type : partitions(total)) {
        PartitionSpec part(std::vector<unsigned>(type.lengths().begin(), type.lengths().end()));
        Rational via_log = log_derivative_at_one(cycle_polynomial(GroupSpec::named(f, total)));
        Rational weighted = 0;
        for (unsigned v : part.parts()) weighted += log_derivative_at_one(cycle_polynomial(GroupSpec::named(f, v))) * v;
        weighted /= total;
        ok = ok && integer_entropy_value(means, part) == via_log - weighted;
        ++partitions_checked;
      }
    }
  }
  report("10", ok, "cross-oracle equivalence",
         std::to_string(specs) + " family specs n <= 8: closed form = brute-force tally, direct mean = P'(1)/P(1) exactly; J by both routes on " +
             std::to_string(partitions_checked) + " partitions");
}

void criterion_11() {
  VerifyOptions o;
  auto r = run_verify(VerifySuite::Discrepancies, o);
  unsigned dihedral_ok = 0;
  bool enumerated = true;
  for (unsigned n = 3; n <= 50; ++n) {
    auto cmp = compare_dihedral(n);
    bool ok = cmp.enumerated_order == 2 * n && cmp.printed_order == 2 * n + 1 &&
              cycle_polynomial(GroupSpec::dihedral(n)).evaluate(Integer(1)) == 2 * n;
    if (n <= 20) {
      auto tally = oracle::cycle_tally(oracle::dihedral(n), n);
      auto p = cycle_polynomial(GroupSpec::dihedral(n));
      for (unsigned k = 0; k <= n; ++k) enumerated = enumerated && p.coefficient(k) == tally[k];
    }
    if (ok) ++dihedral_ok;
  }
  unsigned dihedral_flags = 0;
  bool s4_flag = false;
  for (const auto& d : r.discrepancies) {
    if (d.subject.rfind("dihedral(", 0) == 0) ++dihedral_flags;
    if (d.subject == "mean transposition count of S_4" && d.computed.rfind("23/12", 0) == 0 && d.printed == "1.67") s4_flag = true;
  }
  Rational t4 = oracle::mean_transpositions(oracle::all_permutations(4));
  bool ok = dihedral_ok == 48 && enumerated && dihedral_flags == 48 && s4_flag && t4 == Rational(23, 12) &&
            expected_transpositions(GroupSpec::symmetric(4)) == t4;
  report("11", ok, "documented discrepancies",
         "D_n P(1) = 2n for " + std::to_string(dihedral_ok) + "/48 sizes (printed 2n+1), " + std::to_string(dihedral_flags) +
             " flagged reports; brute-force <T>_{S_4} = " + t4.get_str() + (s4_flag ? " flagged against printed 1.67" : " NOT flagged"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                       criterion_5, criterion_6, criterion_7, criterion_8,
                                                       criterion_9, criterion_10, criterion_11};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      report("?", false, "criterion threw", e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
