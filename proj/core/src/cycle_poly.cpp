#include "grent/cycle_poly.hpp"

#include "grent/combinatorics.hpp"
#include "grent/error.hpp"

namespace grent {

IntPolynomial alternating_cycle_polynomial(unsigned n) {
  if (n == 0) throw Error("alternating_cycle_polynomial requires n >= 1");
  IntPolynomial falling{1}, rising{1};
  for (unsigned k = 0; k < n; ++k) {
    falling = falling * IntPolynomial{-static_cast<long>(k), 1};
    rising = rising * IntPolynomial{static_cast<long>(k), 1};
  }
  // Odd-degree terms cancel, even ones double; divide_exact asserts evenness.
  return (falling + rising).divide_exact(2);
}

IntPolynomial cyclic_cycle_polynomial(unsigned n) {
  if (n == 0) throw Error("cyclic_cycle_polynomial requires n >= 1");
  std::vector<Integer> c(n + 1, 0);
  for (std::uint64_t d : divisors(n)) c[n / d] += static_cast<unsigned long>(totient(d));
  return IntPolynomial(std::move(c));
}

IntPolynomial symmetric_transposition_polynomial(unsigned n) {
  if (n == 0) throw Error("symmetric_transposition_polynomial requires n >= 1");
  IntPolynomial q{1};
  for (unsigned k = 2; k <= n; ++k) q = q * IntPolynomial{1, static_cast<long>(k - 1)};
  return q;
}

IntPolynomial cycle_polynomial_of(const std::vector<Permutation>& elements) {
  if (elements.empty()) throw Error("cycle polynomial of an empty set");
  unsigned n = elements.front().degree();
  std::vector<Integer> c(n + 1, 0);
  for (const auto& p : elements) c[p.cycle_count()] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial transposition_polynomial_of(const std::vector<Permutation>& elements) {
  if (elements.empty()) throw Error("transposition polynomial of an empty set");
  unsigned n = elements.front().degree();
  std::vector<Integer> c(n + 1, 0);
  for (const auto& p : elements) c[p.transposition_count()] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial cycle_polynomial(const GroupSpec& spec, const Budget& budget) {
  if (const auto* named = spec.as_named()) {
    switch (named->family) {
      case Family::Symmetric: return rising_factorial_poly(named->n);
      case Family::Alternating: return alternating_cycle_polynomial(named->n);
      case Family::Cyclic: return cyclic_cycle_polynomial(named->n);
      case Family::Dihedral: break;
    }
  }
  return cycle_polynomial_of(materialize(spec, budget));
}

IntPolynomial transposition_polynomial(const GroupSpec& spec, const Budget& budget) {
  if (const auto* named = spec.as_named()) {
    switch (named->family) {
      case Family::Symmetric: return symmetric_transposition_polynomial(named->n);
      case Family::Alternating:
      case Family::Cyclic: return class_table(spec, budget).transposition_polynomial();
      case Family::Dihedral: break;
    }
  }
  return transposition_polynomial_of(materialize(spec, budget));
}

Rational expected_cycles(const GroupSpec& spec, const Budget& budget) {
  return log_derivative_at_one(cycle_polynomial(spec, budget));
}

Rational expected_transpositions(const GroupSpec& spec, const Budget& budget) {
  Rational via_cayley = Rational(spec.degree()) - expected_cycles(spec, budget);
  via_cayley.canonicalize();
  Rational via_q = log_derivative_at_one(transposition_polynomial(spec, budget));
  if (via_q != via_cayley) {
    throw Error("expected transpositions disagree for " + spec.name() + ": n - <C> = " + via_cayley.get_str() +
                ", Q'(1)/Q(1) = " + via_q.get_str());
  }
  return via_q;
}

BoundsReport verify_coefficient_bounds(const IntPolynomial& cycle_poly, const IntPolynomial& transposition_poly,
                                       unsigned degree) {
  BoundsReport report;
  report.degree = degree;
  report.equals_stirling = true;
  const auto& row = stirling_row(degree).values;
  for (unsigned k = 0; k <= degree; ++k) {
    CoefficientMargin g{k, cycle_poly.coefficient(k), row[k]};
    CoefficientMargin f{k, transposition_poly.coefficient(k), row[degree - k]};
    if (g.value < 0 || g.value > g.bound) ++report.violations;
    if (f.value < 0 || f.value > f.bound) ++report.violations;
    if (g.value != g.bound) report.equals_stirling = false;
    report.cycle.push_back(std::move(g));
    report.transposition.push_back(std::move(f));
  }
  if (cycle_poly.degree() > static_cast<long>(degree) || transposition_poly.degree() > static_cast<long>(degree)) {
    ++report.violations;
    report.equals_stirling = false;
  }
  return report;
}

BoundsReport verify_coefficient_bounds(const GroupSpec& spec, const Budget& budget) {
  return verify_coefficient_bounds(cycle_polynomial(spec, budget), transposition_polynomial(spec, budget),
                                   spec.degree());
}

double cycle_function(const IntPolynomial& p, double x) {
  double value = p.evaluate(x);
  if (value == 0.0) {
    throw Error("cycle function undefined at x = " + std::to_string(x) + ": the polynomial vanishes there");
  }
  return p.derivative().evaluate(x) / value;
}

double cycle_function(const GroupSpec& spec, double x, const Budget& budget) {
  return cycle_function(cycle_polynomial(spec, budget), x);
}

Rational mean_cycle_upper_bound(unsigned n, const Integer& order) {
  Rational bound = harmonic(n) * Rational(factorial(n), order);
  bound.canonicalize();
  return bound;
}

IntPolynomial dihedral_printed_polynomial(unsigned n) {
  if (n < 3) throw Error("dihedral polynomial requires n >= 3");
  IntPolynomial p = IntPolynomial::monomial(1, n);
  if (n % 2 == 1) {
    p += IntPolynomial::monomial(n, (n - 1) / 2);
  } else {
    p += IntPolynomial::monomial(n / 2, n / 2);
    p += IntPolynomial::monomial(n / 2, (n - 2) / 2);
  }
  return p + cyclic_cycle_polynomial(n);
}

DihedralComparison compare_dihedral(unsigned n) {
  DihedralComparison cmp;
  cmp.n = n;
  cmp.enumerated = cycle_polynomial(GroupSpec::dihedral(n));
  cmp.printed = dihedral_printed_polynomial(n);
  cmp.enumerated_order = cmp.enumerated.evaluate(Integer(1));
  cmp.printed_order = cmp.printed.evaluate(Integer(1));
  for (unsigned k = 0; k <= n; ++k) {
    Integer a = cmp.enumerated.coefficient(k);
    Integer b = cmp.printed.coefficient(k);
    if (a != b) cmp.differing_terms.push_back({k, a, b});
  }
  return cmp;
}

}  // namespace grent

namespace grent {

Rational family_mean_cycles(Family family, unsigned n) {
  switch (family) {
    case Family::Symmetric: return harmonic(n);
    case Family::Alternating: return alternating_series(n);
    case Family::Cyclic: return cyclic_series(n);
    case Family::Dihedral: {
      ClassTable table = class_table(GroupSpec::dihedral(n));
      Integer cycles = 0;
      for (const auto& e : table.entries) cycles += e.count * static_cast<unsigned long>(e.type.parts());
      Rational mean(cycles, table.total());
      mean.canonicalize();
      return mean;
    }
  }
  throw Error("unreachable family");
}

}  // namespace grent
