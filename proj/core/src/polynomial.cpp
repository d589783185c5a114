#include "grent/polynomial.hpp"

#include <algorithm>

#include "grent/error.hpp"

namespace grent {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(Integer coefficient, std::size_t power) {
  std::vector<Integer> c(power + 1, 0);
  c[power] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

std::size_t IntPolynomial::lowest_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return k;
  }
  return 0;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  acc.canonicalize();
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::divide_exact(const Integer& divisor) const {
  if (divisor == 0) throw Error("division of polynomial by zero");
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (mpz_divisible_p(coeffs_[k].get_mpz_t(), divisor.get_mpz_t()) == 0) {
      throw Error("polynomial coefficient not divisible by " + divisor.get_str());
    }
    mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), divisor.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::string IntPolynomial::to_csv_row(std::size_t min_length) const {
  std::string out;
  std::size_t n = std::max(min_length, coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (k) out += ',';
    out += coefficient(k).get_str();
  }
  return out;
}

double to_double(const Rational& q) {
  mpf_class f(q, 128);
  double hi = f.get_d();
  mpf_class rest = f - hi;
  return hi + rest.get_d();
}

Rational log_derivative_at_one(const IntPolynomial& p) {
  Integer value = p.evaluate(Integer(1));
  if (value == 0) throw Error("logarithmic derivative undefined: P(1) = 0");
  Rational r(p.derivative().evaluate(Integer(1)), value);
  r.canonicalize();
  return r;
}

IntPolynomial reciprocal(const IntPolynomial& p, std::size_t n) {
  if (p.degree() > static_cast<long>(n)) {
    throw Error("reciprocal: degree " + std::to_string(p.degree()) + " exceeds n = " + std::to_string(n));
  }
  std::vector<Integer> out(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) out[k] = p.coefficient(n - k);
  return IntPolynomial(std::move(out));
}

}  // namespace grent
