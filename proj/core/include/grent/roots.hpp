#pragma once

#include <complex>
#include <string>
#include <vector>

#include "grent/group.hpp"
#include "grent/polynomial.hpp"

namespace grent {

struct ComplexRoot {
  double re = 0.0;
  double im = 0.0;
  /// Relative backward error |P(r)| / sum_i |a_i| |r|^i.
  double residual = 0.0;
  std::complex<double> value() const { return {re, im}; }
};

enum class RootMethod { Auto, Aberth, Companion };

struct RootOptions {
  double tolerance = 1e-9;       // accepted root residual
  double identity_tolerance = 1e-8;
  unsigned max_iterations = 2000;
  RootMethod method = RootMethod::Auto;
};

/// All complex roots with multiplicity. Zero roots are split off exactly
/// from the low-order zero coefficients; the rest come from Aberth-Ehrlich
/// iteration on the scaled, deflated polynomial, falling back to companion
/// matrix eigenvalues when Aberth does not converge. Roots are ordered by real
/// part descending, then imaginary part ascending. Supported up to degree ~300.
/// Throws grent::Error on non-convergence.
std::vector<ComplexRoot> find_roots(const IntPolynomial& p, const RootOptions& options = {});

struct RootSum {
  double value = 0.0;  // real part of the sum
  double imag = 0.0;   // imaginary part, expected to vanish
};

/// sum 1/(1 - r_k) over the cycle-polynomial roots: the mean cycle count.
RootSum root_sum_cycles(const std::vector<ComplexRoot>& roots);
/// sum -r_k/(1 - r_k) over the cycle-polynomial roots: the mean transposition count.
RootSum root_sum_transpositions(const std::vector<ComplexRoot>& roots);
/// sum 1/(1 - q_k) over the transposition-polynomial roots: the mean transposition count.
RootSum root_sum_transpositions_q(const std::vector<ComplexRoot>& q_roots);
/// sum -q_k/(1 - q_k) over the transposition-polynomial roots, plus one for
/// each zero root of P (q = infinity): the mean cycle count.
RootSum root_sum_cycles_q(const std::vector<ComplexRoot>& q_roots, unsigned degree);
/// sum I/((1-R)^2 + I^2); vanishes when the mean cycle count is real.
double imaginary_cancellation(const std::vector<ComplexRoot>& roots);
/// Largest relative distance between {1/r : r != 0} and the Q roots after
/// nearest-neighbour matching. Returns +inf when the counts differ.
double reciprocity_residual(const std::vector<ComplexRoot>& p_roots, const std::vector<ComplexRoot>& q_roots);

struct IdentityCheck {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual < tolerance; }
};

struct RootReport {
  std::string spec;
  unsigned degree = 0;
  IntPolynomial cycle_poly;
  IntPolynomial transposition_poly;
  Rational mean_cycles;
  Rational mean_transpositions;
  std::vector<ComplexRoot> roots;    // of the cycle polynomial
  std::vector<ComplexRoot> q_roots;  // of the transposition polynomial
  std::vector<IdentityCheck> identity_checks;
  bool passed() const;
  const IdentityCheck* check(const std::string& name) const;
};

/// Roots of P and Q plus the named identity checks: root_sum_cycles,
/// root_sum_transpositions, q_root_sum_transpositions, q_root_sum_cycles,
/// imaginary_cancellation, reciprocity, root_residual.
RootReport root_report(const IntPolynomial& cycle_poly, const IntPolynomial& transposition_poly, unsigned degree,
                       const std::string& spec_name, const RootOptions& options = {});
RootReport root_report(const GroupSpec& spec, const RootOptions& options = {}, const Budget& budget = {});

/// JSON with roots as [re, im] pairs, per-root residuals and the identity checks.
std::string to_json(const RootReport& report);

/// w_n(k) = k / (1 - r_k) with the roots in find_roots order. Complex in
/// general; sum_k w_n(k)/k equals the mean cycle count.
std::vector<std::complex<double>> weights_w(const GroupSpec& spec, const RootOptions& options = {},
                                            const Budget& budget = {});

/// y_n(k) = g_{n,k} n! / (|G| [n k]) for k = 1..n, so that
/// (1/n!) sum_k y_n(k) [n k] k equals the mean cycle count exactly.
std::vector<Rational> weights_y(const GroupSpec& spec, const Budget& budget = {});

/// <C>_{n_i} - <C>_N for a family, exact; the group analog of log(n_i/N).
Rational surprisal_difference(Family family, unsigned part, unsigned total);
/// Same difference from cycle-polynomial roots. For Symmetric this is the
/// nested form -sum_{k=part+1}^{total} 1/(1 - r_k) over the roots of P_{S_total};
/// other families take the difference of the two full root sums.
double surprisal_difference_roots(Family family, unsigned part, unsigned total, const RootOptions& options = {});

}  // namespace grent
