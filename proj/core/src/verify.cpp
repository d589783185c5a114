#include "grent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/entropy.hpp"
#include "grent/error.hpp"

namespace grent {

VerifySuite parse_verify_suite(const std::string& name) {
  if (name == "bounds") return VerifySuite::Bounds;
  if (name == "rootsums") return VerifySuite::RootSums;
  if (name == "reciprocity") return VerifySuite::Reciprocity;
  if (name == "closed-forms") return VerifySuite::ClosedForms;
  if (name == "discrepancies") return VerifySuite::Discrepancies;
  if (name == "all") return VerifySuite::All;
  throw Error("unknown verify suite: " + name + " (bounds|rootsums|reciprocity|closed-forms|discrepancies|all)");
}

std::string to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::Bounds: return "bounds";
    case VerifySuite::RootSums: return "rootsums";
    case VerifySuite::Reciprocity: return "reciprocity";
    case VerifySuite::ClosedForms: return "closed-forms";
    case VerifySuite::Discrepancies: return "discrepancies";
    case VerifySuite::All: return "all";
  }
  return "unknown";
}

bool VerifyResult::passed() const { return failures() == 0; }

std::size_t VerifyResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

double VerifyResult::max_residual(const std::string& check_name) const {
  double worst = 0.0;
  for (const auto& c : checks) {
    if (c.name == check_name) worst = std::max(worst, c.residual);
  }
  return worst;
}

std::string VerifyResult::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["checks"] = checks.size();
  j["failures"] = nlohmann::json::array();
  for (const auto& c : checks) {
    if (c.passed) continue;
    j["failures"].push_back(
        {{"suite", c.suite}, {"subject", c.subject}, {"check", c.name}, {"residual", c.residual}, {"detail", c.detail}});
  }
  nlohmann::json suites = nlohmann::json::object();
  for (const auto& c : checks) {
    auto& s = suites[c.suite];
    if (s.is_null()) s = {{"checks", 0}, {"failures", 0}};
    s["checks"] = s["checks"].get<int>() + 1;
    if (!c.passed) s["failures"] = s["failures"].get<int>() + 1;
  }
  j["suites"] = suites;
  j["discrepancies"] = nlohmann::json::array();
  for (const auto& d : discrepancies) {
    j["discrepancies"].push_back(
        {{"subject", d.subject}, {"computed", d.computed}, {"printed", d.printed}, {"note", d.note}, {"flagged", true}});
  }
  return j.dump(2);
}

std::string VerifyResult::to_table() const {
  std::ostringstream out;
  out.precision(3);
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.suite << ' ' << c.subject << ' ' << c.name;
    if (c.residual != 0.0) out << " residual=" << std::scientific << c.residual << std::defaultfloat;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  for (const auto& d : discrepancies) {
    out << "FLAG " << d.subject << ": computed " << d.computed << ", printed " << d.printed;
    if (!d.note.empty()) out << " (" << d.note << ')';
    out << '\n';
  }
  out << (passed() ? "all checks passed" : std::to_string(failures()) + " check(s) failed") << " (" << checks.size()
      << " checks, " << discrepancies.size() << " flagged discrepancies)\n";
  return out.str();
}

std::vector<GroupSpec> family_specs(unsigned n_max) {
  std::vector<GroupSpec> specs;
  for (Family f : {Family::Symmetric, Family::Alternating, Family::Cyclic, Family::Dihedral}) {
    for (unsigned n = (f == Family::Dihedral ? 3u : 1u); n <= n_max; ++n) specs.push_back(GroupSpec::named(f, n));
  }
  return specs;
}

std::vector<GroupSpec> random_generated_specs(unsigned degree, unsigned count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto random_perm = [&] {
    std::vector<Point> images(degree);
    for (Point i = 0; i < degree; ++i) images[i] = i;
    for (Point i = degree; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
    return Permutation(std::move(images));
  };
  std::vector<GroupSpec> specs;
  for (unsigned i = 0; i < count; ++i) {
    std::vector<Permutation> gens{random_perm()};
    if (rng() % 2 == 0) gens.push_back(random_perm());
    specs.push_back(GroupSpec::generated(std::move(gens)));
  }
  return specs;
}

namespace {

std::string label(const GroupSpec& spec, std::size_t order) {
  if (spec.as_named()) return spec.name();
  return "generated(S_" + std::to_string(spec.degree()) + ", order " + std::to_string(order) + ")";
}

void bounds_suite(const std::vector<GroupSpec>& specs, const VerifyOptions& o, VerifyResult& out) {
  for (const auto& spec : specs) {
    auto p = cycle_polynomial(spec, o.budget);
    auto q = transposition_polynomial(spec, o.budget);
    auto report = verify_coefficient_bounds(p, q, spec.degree());
    std::string subject = label(spec, p.evaluate(Integer(1)).get_ui());
    out.checks.push_back({"bounds", subject, "coefficient_bounds", report.ok(), 0.0,
                          report.ok() ? "" : std::to_string(report.violations) + " violations"});
    const auto* named = spec.as_named();
    if (named && named->family == Family::Symmetric) {
      out.checks.push_back({"bounds", subject, "stirling_equality", report.equals_stirling, 0.0, ""});
    }
    Integer order = p.evaluate(Integer(1));
    bool bound_ok = log_derivative_at_one(p) <= mean_cycle_upper_bound(spec.degree(), order);
    out.checks.push_back({"bounds", subject, "mean_cycle_bound", bound_ok, 0.0, ""});
  }
}

void root_suite(const std::vector<GroupSpec>& specs, const VerifyOptions& o, VerifyResult& out, bool sums,
                bool reciprocity) {
  for (const auto& spec : specs) {
    RootReport report = root_report(spec, o.roots, o.budget);
    std::string subject = label(spec, report.cycle_poly.evaluate(Integer(1)).get_ui());
    for (const auto& c : report.identity_checks) {
      bool is_recip = c.name == "reciprocity";
      if ((is_recip && !reciprocity) || (!is_recip && !sums)) continue;
      out.checks.push_back({is_recip ? "reciprocity" : "rootsums", subject, c.name, c.passed(), c.residual, ""});
    }
    if (reciprocity) {
      bool exact = report.transposition_poly == reciprocal(report.cycle_poly, spec.degree());
      out.checks.push_back({"reciprocity", subject, "coefficient_reversal", exact, 0.0, ""});
    }
  }
}

void closed_form_suite(unsigned n_max, const VerifyOptions& o, VerifyResult& out) {
  for (const auto& spec : family_specs(std::min(n_max, 8u))) {
    auto elements = materialize(spec, o.budget);
    bool p_ok = cycle_polynomial(spec, o.budget) == cycle_polynomial_of(elements);
    bool q_ok = transposition_polynomial(spec, o.budget) == transposition_polynomial_of(elements);
    bool table_ok = class_table(spec, o.budget).entries.size() == tally_class_table(elements).entries.size();
    if (table_ok) {
      auto a = class_table(spec, o.budget);
      auto b = tally_class_table(elements);
      for (std::size_t i = 0; i < a.entries.size(); ++i) {
        table_ok = table_ok && a.entries[i].type == b.entries[i].type && a.entries[i].count == b.entries[i].count;
      }
    }
    const auto* named = spec.as_named();
    bool mean_ok = family_mean_cycles(named->family, named->n) == log_derivative_at_one(cycle_polynomial_of(elements));
    out.checks.push_back({"closed-forms", spec.name(), "cycle_polynomial", p_ok, 0.0, ""});
    out.checks.push_back({"closed-forms", spec.name(), "transposition_polynomial", q_ok, 0.0, ""});
    out.checks.push_back({"closed-forms", spec.name(), "class_table", table_ok, 0.0, ""});
    out.checks.push_back({"closed-forms", spec.name(), "mean_cycles_routes", mean_ok, 0.0, ""});
  }
}

void discrepancy_suite(const VerifyOptions& o, VerifyResult& out) {
  for (unsigned n = 3; n <= 50; ++n) {
    auto cmp = compare_dihedral(n);
    bool ok = cmp.enumerated_order == Integer(2 * n);
    out.checks.push_back({"discrepancies", "dihedral(" + std::to_string(n) + ")", "order_2n", ok, 0.0, ""});
    if (cmp.printed != cmp.enumerated) {
      std::string terms;
      for (const auto& t : cmp.differing_terms) {
        if (!terms.empty()) terms += "; ";
        terms += "x^" + std::to_string(t.k) + ": " + t.enumerated.get_str() + " vs " + t.printed.get_str();
      }
      out.discrepancies.push_back({"dihedral(" + std::to_string(n) + ") cycle polynomial",
                                   cmp.enumerated.to_string() + " (P(1) = " + cmp.enumerated_order.get_str() + ")",
                                   cmp.printed.to_string() + " (P(1) = " + cmp.printed_order.get_str() + ")",
                                   "per-term enumerated vs printed: " + terms});
    }
  }
  Rational t4 = expected_transpositions(GroupSpec::symmetric(4), o.budget);
  out.checks.push_back({"discrepancies", "symmetric(4)", "mean_transpositions_23_12", t4 == Rational(23, 12), 0.0, ""});
  out.discrepancies.push_back({"mean transposition count of S_4", t4.get_str() + " = " + std::to_string(to_double(t4)),
                               "1.67", "Cayley: 4 - 25/12 = 23/12"});
  for (unsigned n = 2; n <= std::max(o.n_max, 2u); ++n) {
    auto q = symmetric_transposition_polynomial(n);
    Rational neg_sum(q.coefficient(n - 2), q.coefficient(n - 1));
    neg_sum.canonicalize();
    bool ok = neg_sum == harmonic(n - 1);
    out.checks.push_back({"discrepancies", "symmetric(" + std::to_string(n) + ")", "q_root_sum_is_minus_H_{n-1}", ok,
                          0.0, ""});
    if (n == std::max(o.n_max, 2u)) {
      out.discrepancies.push_back({"root sum of Q_{S_" + std::to_string(n) + "}", "-" + neg_sum.get_str(),
                                   "-H_" + std::to_string(n) + " = -" + harmonic(n).get_str(),
                                   "roots are -1, -1/2, ..., -1/(n-1), so the sum is -H_{n-1}"});
    }
  }
  auto search = max_entropy_partition(Family::Alternating, 24, 4, Functional::Integer, o.budget);
  if (search.best().partition != PartitionSpec({6, 6, 6, 6})) {
    out.discrepancies.push_back({"argmax of J_A over 4-part partitions of 24",
                                 search.best().partition.to_string() + " with J = " + search.best().exact->get_str(),
                                 "(6,6,6,6) (uniform)",
                                 "uniform ranks " + std::to_string(search.rank_of(PartitionSpec({6, 6, 6, 6}))) +
                                     " of " + std::to_string(search.ranking.size())});
  }
}

}  // namespace

VerifyResult run_verify(VerifySuite suite, const VerifyOptions& o) {
  VerifyResult out;
  auto specs = family_specs(o.n_max);
  if (o.n_max >= 6) {
    auto extra = random_generated_specs(6, o.random_subgroups, o.seed);
    specs.insert(specs.end(), extra.begin(), extra.end());
  }
  const bool all = suite == VerifySuite::All;
  if (all || suite == VerifySuite::Bounds) bounds_suite(specs, o, out);
  if (all || suite == VerifySuite::RootSums || suite == VerifySuite::Reciprocity) {
    root_suite(specs, o, out, all || suite == VerifySuite::RootSums, all || suite == VerifySuite::Reciprocity);
  }
  if (all || suite == VerifySuite::ClosedForms) closed_form_suite(o.n_max, o, out);
  if (all || suite == VerifySuite::Discrepancies) discrepancy_suite(o, out);
  return out;
}

}  // namespace grent
