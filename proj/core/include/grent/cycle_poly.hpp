#pragma once

#include <string>
#include <vector>

#include "grent/group.hpp"
#include "grent/polynomial.hpp"

namespace grent {

/// Generating polynomial of cycle counts, sum over elements of x^{c(pi)}.
/// Closed forms: Symmetric -> rising factorial; Alternating ->
/// (prod (x-k) + prod (x+k)) / 2; Cyclic -> sum_{d|n} phi(d) x^{n/d}.
/// Dihedral and explicit/generated sets are tallied from their elements.
IntPolynomial cycle_polynomial(const GroupSpec& spec, const Budget& budget = {});

/// Generating polynomial of transposition counts, sum of x^{n - c(pi)}.
/// Symmetric uses prod_{k=2}^n ((k-1)x + 1); Alternating and Cyclic use the
/// class tables; everything else is tallied. Never derived from
/// cycle_polynomial, so the reciprocity between the two is a real check.
IntPolynomial transposition_polynomial(const GroupSpec& spec, const Budget& budget = {});

/// Tallies over an explicit element list.
IntPolynomial cycle_polynomial_of(const std::vector<Permutation>& elements);
IntPolynomial transposition_polynomial_of(const std::vector<Permutation>& elements);

/// Closed forms, exposed separately for cross-checks.
IntPolynomial alternating_cycle_polynomial(unsigned n);
IntPolynomial cyclic_cycle_polynomial(unsigned n);
IntPolynomial symmetric_transposition_polynomial(unsigned n);

/// Mean cycle count P'(1)/P(1), exact.
Rational expected_cycles(const GroupSpec& spec, const Budget& budget = {});

/// Mean transposition count. Computes n - <C> and Q'(1)/Q(1) and throws
/// grent::Error if they disagree.
Rational expected_transpositions(const GroupSpec& spec, const Budget& budget = {});

/// Per-k comparison of g_{n,k} against [n k] and f_{n,k} against [n n-k].
struct CoefficientMargin {
  unsigned k = 0;
  Integer value;
  Integer bound;
  Integer margin() const { return bound - value; }
};

struct BoundsReport {
  unsigned degree = 0;
  std::vector<CoefficientMargin> cycle;          // g_{n,k} <= [n k]
  std::vector<CoefficientMargin> transposition;  // f_{n,k} <= [n n-k]
  std::size_t violations = 0;
  /// g_{n,k} == [n k] for every k, i.e. the set has the full symmetric profile.
  bool equals_stirling = false;
  bool ok() const { return violations == 0; }
};

BoundsReport verify_coefficient_bounds(const IntPolynomial& cycle_poly, const IntPolynomial& transposition_poly,
                                       unsigned degree);
BoundsReport verify_coefficient_bounds(const GroupSpec& spec, const Budget& budget = {});

/// Floating value of P'(x)/P(x). Throws grent::Error when P(x) vanishes.
double cycle_function(const IntPolynomial& p, double x);
double cycle_function(const GroupSpec& spec, double x, const Budget& budget = {});

/// Upper bound H_n * n! / |G| on the mean cycle count.
Rational mean_cycle_upper_bound(unsigned n, const Integer& order);

/// The dihedral cycle polynomial exactly as the closed form printed in the
/// literature (identity term plus reflection terms plus the full divisor sum),
/// next to the enumerated polynomial.
struct DihedralComparison {
  unsigned n = 0;
  IntPolynomial enumerated;
  IntPolynomial printed;
  Integer enumerated_order;  // P(1) from enumeration, 2n
  Integer printed_order;     // P(1) from the printed form, 2n + 1
  struct Term {
    unsigned k;
    Integer enumerated;
    Integer printed;
  };
  std::vector<Term> differing_terms;
};

IntPolynomial dihedral_printed_polynomial(unsigned n);
DihedralComparison compare_dihedral(unsigned n);

}  // namespace grent

namespace grent {

/// Mean cycle count of a named family at size n from its series or class
/// table (H_n, the alternating series, sum phi(d)/d, dihedral class tally),
/// without touching the cycle polynomial.
Rational family_mean_cycles(Family family, unsigned n);

}  // namespace grent
