#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "grent/group.hpp"
#include "grent/polynomial.hpp"

namespace grent::cli {

/// Runs the command line; returns the process exit code. Output goes to
/// `out` unless --out names a file; diagnostics and failure JSON go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Non-trivial cycle structures (fixed points omitted) in the column order of
/// the classic S_n / A_n tally: by support size, then more cycles first, then
/// descending. The first column is the identity.
std::vector<std::vector<Point>> table_a1_columns(unsigned n_max);

struct TableA1Row {
  std::string label;  // "5S", "5A"
  unsigned n = 0;
  std::vector<Integer> counts;  // aligned with table_a1_columns for n
  Integer sum;
  Rational mean;
};

/// Rows 1S, 1A, 2S, 2A, ..., n_max S, n_max A; counts cover the columns of
/// table_a1_columns(n) (support size <= n).
std::vector<TableA1Row> table_a1_rows(unsigned n_max, const Budget& budget = {});

}  // namespace grent::cli
