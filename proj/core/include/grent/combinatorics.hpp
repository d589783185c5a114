#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "grent/permutation.hpp"
#include "grent/polynomial.hpp"

namespace grent {

/// Euler-Mascheroni constant. Only used for convergence reporting.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// One row of signless Stirling numbers of the first kind, values[k] = [n k].
struct StirlingRow {
  unsigned n = 0;
  std::vector<Integer> values;
};

/// Row n of the signless Stirling numbers of the first kind. Rows are built by
/// the recurrence [n+1 k] = n [n k] + [n k-1] and memoized process-wide;
/// concurrent callers are safe.
const StirlingRow& stirling_row(unsigned n);

/// [n k]; throws grent::Error when k > n.
Integer stirling_first_unsigned(unsigned n, unsigned k);

/// x(x+1)...(x+n-1) expanded; coefficients are the Stirling row n. Requires n >= 1.
IntPolynomial rising_factorial_poly(unsigned n);

/// H_n = sum_{k=1}^n 1/k, exact. Requires n >= 1.
Rational harmonic(unsigned long n);
/// sum_{k=first}^{last} 1/k, exact (zero when first > last). Requires first >= 1.
Rational harmonic_range(unsigned long first, unsigned long last);

/// Mean cycle count of the alternating group A_n: 1, 2 for n = 1, 2 and
/// 2 + sum_{k=3}^n (1/k + (-1)^k 2/(k(k-2))) beyond.
Rational alternating_series(unsigned n);

/// Mean cycle count of the cyclic group C_n: sum_{d | n} phi(d)/d.
Rational cyclic_series(unsigned n);

std::uint64_t totient(std::uint64_t d);
/// Ascending divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);

/// Generator of the partitions of n in descending-lexicographic order,
/// (n), (n-1,1), ..., (1,...,1). Each partition is a descending sequence.
class PartitionGenerator {
 public:
  /// Partitions of n into any number of parts.
  explicit PartitionGenerator(unsigned n);
  /// Partitions of n into exactly `parts` parts.
  PartitionGenerator(unsigned n, unsigned parts);

  /// Advances; returns false once exhausted.
  bool next();
  const std::vector<Point>& current() const { return current_; }

 private:
  bool first_valid();
  bool advance_any();
  unsigned n_;
  std::optional<unsigned> parts_;
  bool started_ = false;
  bool done_ = false;
  std::vector<Point> current_;
};

/// All partitions of n in descending-lexicographic order.
std::vector<CycleType> partitions(unsigned n);
/// Number of partitions of n into exactly m positive parts.
Integer partition_count(unsigned n, unsigned m);
/// Number of partitions of n.
Integer partition_count(unsigned n);

}  // namespace grent
