#include "grent/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "grent/error.hpp"

namespace grent {

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

namespace {

// Rows live in a deque so references stay valid as the table grows.
class StirlingTable {
 public:
  const StirlingRow& row(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({0, {Integer(1)}});
    while (rows_.size() <= n) {
      const StirlingRow& prev = rows_.back();
      unsigned m = prev.n;
      StirlingRow next{m + 1, std::vector<Integer>(m + 2, 0)};
      for (unsigned k = 1; k <= m + 1; ++k) {
        Integer v = prev.values[k - 1];
        if (k <= m) v += prev.values[k] * m;
        next.values[k] = std::move(v);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<StirlingRow> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

// Binary splitting: returns the unreduced sum of 1/k over [a, b] as num/den.
void harmonic_split(unsigned long a, unsigned long b, Integer& num, Integer& den) {
  if (b - a < 16) {
    num = 0;
    den = 1;
    for (unsigned long k = a; k <= b; ++k) {
      // num/den + 1/k
      num = num * k + den;
      den *= k;
    }
    return;
  }
  unsigned long mid = a + (b - a) / 2;
  Integer ln, ld, rn, rd;
  harmonic_split(a, mid, ln, ld);
  harmonic_split(mid + 1, b, rn, rd);
  num = ln * rd + rn * ld;
  den = ld * rd;
}

}  // namespace

const StirlingRow& stirling_row(unsigned n) { return stirling_table().row(n); }

Integer stirling_first_unsigned(unsigned n, unsigned k) {
  if (k > n) throw Error("stirling_first_unsigned: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  return stirling_row(n).values[k];
}

IntPolynomial rising_factorial_poly(unsigned n) {
  if (n == 0) throw Error("rising_factorial_poly requires n >= 1");
  return IntPolynomial(stirling_row(n).values);
}

Rational harmonic_range(unsigned long first, unsigned long last) {
  if (first == 0) throw Error("harmonic_range requires first >= 1");
  if (first > last) return Rational(0);
  Integer num, den;
  harmonic_split(first, last, num, den);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational harmonic(unsigned long n) {
  if (n == 0) throw Error("harmonic requires n >= 1");
  return harmonic_range(1, n);
}

Rational alternating_series(unsigned n) {
  if (n == 0) throw Error("alternating_series requires n >= 1");
  if (n == 1) return Rational(1);
  if (n == 2) return Rational(2);
  Rational sum(2);
  for (unsigned k = 3; k <= n; ++k) {
    Rational term(1, k);
    Rational correction(2, static_cast<unsigned long>(k) * (k - 2));
    correction.canonicalize();
    if (k % 2 == 0) {
      term += correction;
    } else {
      term -= correction;
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

Rational cyclic_series(unsigned n) {
  if (n == 0) throw Error("cyclic_series requires n >= 1");
  Rational sum(0);
  for (std::uint64_t d : divisors(n)) {
    Rational term(static_cast<unsigned long>(totient(d)), static_cast<unsigned long>(d));
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t totient(std::uint64_t d) {
  if (d == 0) throw Error("totient requires d >= 1");
  std::uint64_t result = d;
  std::uint64_t m = d;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw Error("divisors requires n >= 1");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

PartitionGenerator::PartitionGenerator(unsigned n) : n_(n) {}

PartitionGenerator::PartitionGenerator(unsigned n, unsigned parts) : n_(n), parts_(parts) {}

bool PartitionGenerator::first_valid() {
  if (!parts_) {
    if (n_ == 0) return false;
    current_ = {n_};
    return true;
  }
  unsigned m = *parts_;
  if (m == 0 || m > n_) return false;
  current_.assign(m, 1);
  current_[0] = n_ - (m - 1);
  return true;
}

// Standard descending-lex successor over all partitions: find the rightmost
// part > 1, decrement it, and refill the tail greedily with the remainder.
bool PartitionGenerator::advance_any() {
  Point remainder = 0;
  while (!current_.empty() && current_.back() == 1) {
    current_.pop_back();
    ++remainder;
  }
  if (current_.empty()) return false;
  Point cap = --current_.back();
  ++remainder;
  while (remainder > 0) {
    Point part = std::min(cap, remainder);
    current_.push_back(part);
    remainder -= part;
  }
  return true;
}

bool PartitionGenerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!first_valid()) done_ = true;
    return !done_;
  }
  if (!parts_) {
    if (!advance_any()) done_ = true;
    return !done_;
  }
  // Fixed part count m: find the rightmost position i (excluding the last
  // part region) whose value can be lowered while the suffix still absorbs the
  // remainder with parts <= the new value.
  const std::size_t m = current_.size();
  for (std::size_t i = m - 1; i-- > 0;) {
    if (current_[i] < 2) continue;
    Point cap = current_[i] - 1;
    Point suffix = 0;
    for (std::size_t j = i; j < m; ++j) suffix += current_[j];
    // Positions i..m-1 must hold `suffix` with each part in [1, cap].
    if (static_cast<std::uint64_t>(cap) * (m - i) < suffix) continue;
    current_[i] = cap;
    Point rest = suffix - cap;
    std::size_t slots = m - i - 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      --slots;
      Point part = std::min<Point>(cap, rest - static_cast<Point>(slots));
      current_[j] = part;
      rest -= part;
    }
    return true;
  }
  done_ = true;
  return false;
}

std::vector<CycleType> partitions(unsigned n) {
  std::vector<CycleType> out;
  PartitionGenerator gen(n);
  while (gen.next()) out.emplace_back(gen.current());
  return out;
}

Integer partition_count(unsigned n, unsigned m) {
  // p(n, m) = p(n-1, m-1) + p(n-m, m)
  if (m > n) return 0;
  std::vector<std::vector<Integer>> table(n + 1, std::vector<Integer>(m + 1, 0));
  table[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= std::min(i, m); ++j) {
      table[i][j] = table[i - 1][j - 1] + table[i - j][j];
    }
  }
  return table[n][m];
}

Integer partition_count(unsigned n) {
  std::vector<Integer> p(n + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned i = part; i <= n; ++i) p[i] += p[i - part];
  }
  return p[n];
}

}  // namespace grent
