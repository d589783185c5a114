#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grent/group.hpp"
#include "grent/polynomial.hpp"

namespace grent {

/// A partition {n_i} of N objects into m occupied states.
class PartitionSpec {
 public:
  /// Throws unless every part is >= 1 and there is at least one part.
  explicit PartitionSpec(std::vector<unsigned> parts);
  /// Parses "3,3,5,5" (also accepts spaces and surrounding parentheses).
  static PartitionSpec parse(const std::string& text);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned total() const { return total_; }
  std::size_t size() const { return parts_.size(); }
  /// Parts sorted in descending order.
  PartitionSpec sorted_descending() const;
  /// Every part multiplied by `factor`.
  PartitionSpec scaled(unsigned factor) const;
  /// "(5,5,3,3)"
  std::string to_string() const;

  bool operator==(const PartitionSpec&) const = default;

 private:
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

enum class LogBase { Natural, Two };

/// -sum (n_i/N) log(n_i/N).
double shannon_entropy(const PartitionSpec& p, LogBase base = LogBase::Natural);

/// Mean cycle count per size for a family, memoized for one computation.
/// Every value is computed along two routes, the family series and the
/// logarithmic derivative of the cycle polynomial, and the two must agree
/// exactly for sizes up to `cross_check_limit`.
class FamilyMeans {
 public:
  explicit FamilyMeans(Family family, unsigned cross_check_limit = 64);
  Family family() const { return family_; }
  /// Throws grent::Error if the family is undefined at n or the routes disagree.
  const Rational& mean_cycles(unsigned n);
  /// Mean transposition count, Q'(1)/Q(1) below the cross-check limit and n - <C> above.
  const Rational& mean_transpositions(unsigned n);
  /// Whether every size queried so far was cross-checked.
  bool all_cross_checked() const { return all_cross_checked_; }

 private:
  Family family_;
  unsigned limit_;
  bool all_cross_checked_ = true;
  std::vector<std::optional<Rational>> cycles_;
  std::vector<std::optional<Rational>> transpositions_;
};

struct EntropyReport {
  Family family = Family::Symmetric;
  PartitionSpec partition{std::vector<unsigned>{1}};
  Rational J;
  double shannon = 0.0;
  LogBase base = LogBase::Natural;
  /// <C>_N - <C>_{n_i} per part.
  std::vector<Rational> surprisals;
  /// Expectation and log-derivative routes were both evaluated and agreed.
  bool cross_checked = false;

  double J_value() const { return to_double(J); }
  std::string to_json() const;
  /// Header "family,N,m,parts,J_exact,J,shannon" plus one row.
  std::string to_csv() const;
};

/// J = <C>_N - (1/N) sum n_i <C>_{n_i}.
EntropyReport integer_entropy(Family family, const PartitionSpec& p, LogBase base = LogBase::Natural);
Rational integer_entropy_value(FamilyMeans& means, const PartitionSpec& p);

/// J = (N - <T>_N) - sum (n_i/N)(n_i - <T>_{n_i}). Throws if it disagrees
/// with integer_entropy.
Rational transposition_entropy(Family family, const PartitionSpec& p);
/// Same expression with an arbitrary per-size mean transposition count.
Rational transposition_entropy(const PartitionSpec& p, const std::function<Rational(unsigned)>& mean_transpositions);

/// N/2 - sum n_i^2 / (2N): every size has mean transposition count n/2.
Rational balanced_entropy(const PartitionSpec& p);
/// (N/2)(m-1)/m; requires m | N.
Rational balanced_entropy_uniform(unsigned total, unsigned m);
/// (N/2)(m - 1/f)/m for f*m parts occupied uniformly; requires f*m to be a
/// positive integer no larger than m that divides N.
Rational balanced_entropy_fraction(unsigned total, unsigned m, const Rational& fraction);

struct ConvergenceRow {
  unsigned scale = 0;
  unsigned total = 0;
  Rational J;
  double J_value = 0.0;
  double shannon = 0.0;
  double abs_diff = 0.0;
};

/// J_Symmetric and Shannon entropy for the shape scaled by each factor.
std::vector<ConvergenceRow> convergence_profile(const PartitionSpec& shape, const std::vector<unsigned>& scales,
                                                LogBase base = LogBase::Natural);
/// Header "scale,N,J,I,abs_diff".
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

enum class Functional { Integer, Shannon };

struct RankedPartition {
  PartitionSpec partition;
  std::optional<Rational> exact;  // integer entropy only
  double value = 0.0;
};

struct MaxEntropyResult {
  Family family = Family::Symmetric;
  Functional functional = Functional::Integer;
  unsigned total = 0;
  unsigned parts = 0;
  /// Best first; ties broken by the lexicographically smallest descending partition.
  std::vector<RankedPartition> ranking;
  const RankedPartition& best() const { return ranking.front(); }
  /// 1-based rank of a partition (order of parts ignored), 0 if absent.
  std::size_t rank_of(const PartitionSpec& p) const;
};

/// Exhaustive search over all partitions of `total` into exactly `parts`
/// positive parts. Integer entropy is compared exactly.
MaxEntropyResult max_entropy_partition(Family family, unsigned total, unsigned parts,
                                       Functional functional = Functional::Integer, const Budget& budget = {});

}  // namespace grent
