#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grent {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree. Trailing zero coefficients are trimmed, so the zero
/// polynomial has no coefficients and degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(Integer coefficient, std::size_t power);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k, zero beyond the degree.
  Integer coefficient(std::size_t k) const;
  /// Multiplicity of the root x = 0 (index of the lowest nonzero coefficient).
  std::size_t lowest_degree() const;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  IntPolynomial derivative() const;
  /// Exact division of every coefficient; throws if any coefficient is not divisible.
  IntPolynomial divide_exact(const Integer& divisor) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human form in descending degree, e.g. "x^4 + 6x^3 + 11x^2 + 6x".
  std::string to_string() const;
  /// Comma-separated coefficients in ascending degree, padded to `min_length` entries.
  std::string to_csv_row(std::size_t min_length = 0) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Nearest double to q (mpq_get_d truncates).
double to_double(const Rational& q);

/// Logarithmic derivative at x = 1, P'(1)/P(1), computed exactly.
/// Throws grent::Error if P(1) = 0.
Rational log_derivative_at_one(const IntPolynomial& p);

/// Coefficient reversal x^n P(1/x); throws if degree(p) > n.
IntPolynomial reciprocal(const IntPolynomial& p, std::size_t n);

}  // namespace grent
