#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grent/group.hpp"
#include "grent/polynomial.hpp"
#include "grent/roots.hpp"

namespace grent {

/// A permutation set is balanced when its mean cycle count and mean
/// transposition count are both n/2.
struct BalanceReport {
  unsigned degree = 0;
  std::size_t size = 0;
  Rational expected_cycles;
  Rational expected_transpositions;
  bool is_balanced = false;
  bool is_group = false;
  /// max(|sum 1/(1-r) - <C>|, |sum -r/(1-r) - <T>|) over the cycle-polynomial roots.
  double root_identity_residual = 0.0;

  std::string to_json() const;
};

BalanceReport balance_report(const std::vector<Permutation>& elements, const RootOptions& options = {});

enum class DeletionScope {
  Transpositions,  // delete only single-transposition elements
  AnyClass,        // delete elements of any cycle count
};

struct BalancedSolution {
  std::vector<Permutation> deleted;
  std::vector<Permutation> elements;
  IntPolynomial cycle_poly;
  IntPolynomial transposition_poly;
  BalanceReport report;
};

struct BalancedSearchResult {
  unsigned n = 0;
  DeletionScope scope = DeletionScope::Transpositions;
  /// Smallest number of deletions that balances S_n, if any.
  std::optional<std::size_t> minimal_deletions;
  /// Number of distinct deletion sets of that size.
  Integer solution_count = 0;
  /// Concrete solutions, at most `max_solutions`, in lexicographic order of the deleted elements.
  std::vector<BalancedSolution> solutions;
  std::string diagnostics;

  std::string to_json() const;
};

/// Deletes elements from S_n until the mean cycle count is exactly n/2,
/// searching deletion counts from 0 upwards. AnyClass needs n <= 8.
BalancedSearchResult make_balanced_from_symmetric(unsigned n, DeletionScope scope = DeletionScope::Transpositions,
                                                  std::size_t max_solutions = 64, const Budget& budget = {},
                                                  const RootOptions& options = {});

/// The balanced subset of S_4 obtained by deleting two transpositions, as
/// (cycle polynomial, transposition polynomial). Built by the deletion
/// search and checked against x^4 + 4x^3 + 11x^2 + 6x and 6x^3 + 11x^2 + 4x + 1;
/// throws grent::Error if they differ.
std::pair<IntPolynomial, IntPolynomial> sb4_fixture();
/// The element set behind sb4_fixture().
std::vector<Permutation> sb4_elements();

}  // namespace grent
