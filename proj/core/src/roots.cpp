#include "grent/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/error.hpp"

namespace grent {

namespace {

using cld = std::complex<long double>;

// Coefficients of p / x^zeros scaled so the largest magnitude is about 1.
std::vector<long double> scaled_deflated(const IntPolynomial& p, std::size_t zeros) {
  const auto& c = p.coefficients();
  std::vector<long double> mantissa(c.size() - zeros);
  std::vector<long> exponent(c.size() - zeros);
  long max_exp = std::numeric_limits<long>::min();
  for (std::size_t i = zeros; i < c.size(); ++i) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, c[i].get_mpz_t());
    mantissa[i - zeros] = d;
    exponent[i - zeros] = e;
    if (d != 0.0) max_exp = std::max(max_exp, e);
  }
  std::vector<long double> out(mantissa.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mantissa[i] == 0.0L ? 0.0L : std::ldexp(mantissa[i], static_cast<int>(exponent[i] - max_exp));
  }
  return out;
}

// Horner for p and p' together.
void horner(const std::vector<long double>& a, cld z, cld& value, cld& deriv) {
  value = 0;
  deriv = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + a[i];
  }
}

long double backward_error(const std::vector<long double>& a, cld z) {
  cld value = 0;
  long double scale = 0;
  long double az = std::abs(z);
  for (std::size_t i = a.size(); i-- > 0;) {
    value = value * z + a[i];
    scale = scale * az + std::fabs(a[i]);
  }
  return scale == 0 ? 0 : std::abs(value) / scale;
}

bool aberth(const std::vector<long double>& a, unsigned max_iter, std::vector<cld>& z) {
  const std::size_t m = a.size() - 1;
  // Fujiwara bound on root moduli.
  long double bound = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    long double ratio = std::fabs(a[m - i] / a[m]);
    if (i == m) ratio /= 2;
    bound = std::max(bound, std::pow(ratio, 1.0L / static_cast<long double>(i)));
  }
  bound = 2 * bound;
  if (bound == 0) bound = 1;
  const long double center = -a[m - 1] / (static_cast<long double>(m) * a[m]);
  const long double radius = std::max(bound / 2, 1e-3L);
  z.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(m) + 0.4L;
    z[k] = cld(center, 0) + std::polar(radius, angle);
  }
  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<bool> settled(m, false);
  for (unsigned iter = 0; iter < max_iter; ++iter) {
    bool all_settled = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (settled[k]) continue;
      cld value, deriv;
      horner(a, z[k], value, deriv);
      if (value == cld(0)) {
        settled[k] = true;
        continue;
      }
      cld ratio = value / deriv;
      cld repulsion = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) repulsion += cld(1) / (z[k] - z[j]);
      }
      cld step = ratio / (cld(1) - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        step = cld(eps * (1 + std::abs(z[k])), eps);
      }
      z[k] -= step;
      if (std::abs(step) <= 4 * eps * std::max<long double>(1, std::abs(z[k])) ||
          backward_error(a, z[k]) <= 8 * eps * static_cast<long double>(m)) {
        settled[k] = true;
      } else {
        all_settled = false;
      }
    }
    if (all_settled) return true;
  }
  return false;
}

std::vector<cld> companion_roots(const std::vector<long double>& a) {
  const std::size_t m = a.size() - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    companion(0, static_cast<Eigen::Index>(i)) = static_cast<double>(-a[m - 1 - i] / a[m]);
    if (i + 1 < m) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error("companion eigenvalue iteration failed");
  std::vector<cld> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    auto ev = solver.eigenvalues()(i);
    out.emplace_back(ev.real(), ev.imag());
  }
  return out;
}

// Aberth iterations against the exact integer coefficients in
// multiprecision, started from the long double roots. Working precision grows
// with the coefficient size, which is what ill-conditioned rising-factorial
// type polynomials need.
struct Mpc {
  mpf_class re, im;
};

Mpc mul(const Mpc& a, const Mpc& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Mpc div(const Mpc& a, const Mpc& b) {
  mpf_class d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

mpf_class norm2(const Mpc& z) { return z.re * z.re + z.im * z.im; }

mpf_class from_ld(long double v, mp_bitcnt_t bits) {
  mpf_class out(static_cast<double>(v), bits);
  out += static_cast<double>(v - static_cast<long double>(static_cast<double>(v)));
  return out;
}

long double to_ld(const mpf_class& v) {
  double hi = v.get_d();
  mpf_class rest = v - hi;
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

void refine(const IntPolynomial& p, std::size_t zeros, std::vector<cld>& z) {
  const auto& coeffs = p.coefficients();
  std::size_t max_bits = 0;
  for (const auto& c : coeffs) max_bits = std::max(max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(192 + 2 * max_bits);
  std::vector<mpf_class> c;
  for (std::size_t i = zeros; i < coeffs.size(); ++i) c.emplace_back(mpf_class(coeffs[i], bits));
  const std::size_t m = z.size();
  std::vector<Mpc> w(m);
  for (std::size_t k = 0; k < m; ++k) w[k] = {from_ld(z[k].real(), bits), from_ld(z[k].imag(), bits)};
  // Stop once a step no longer changes the root at about three quarters of the working precision.
  mpf_class threshold(1, bits);
  mpf_div_2exp(threshold.get_mpf_t(), threshold.get_mpf_t(), static_cast<mp_bitcnt_t>(3 * bits / 2));
  std::vector<bool> settled(m, false);
  const Mpc one{mpf_class(1, bits), mpf_class(0, bits)};
  for (int iter = 0; iter < 400; ++iter) {
    bool all_settled = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (settled[k]) continue;
      Mpc value{mpf_class(0, bits), mpf_class(0, bits)};
      Mpc deriv = value;
      for (std::size_t i = c.size(); i-- > 0;) {
        deriv = mul(deriv, w[k]);
        deriv.re += value.re;
        deriv.im += value.im;
        value = mul(value, w[k]);
        value.re += c[i];
      }
      if (norm2(value) == 0 || norm2(deriv) == 0) {
        settled[k] = true;
        continue;
      }
      Mpc ratio = div(value, deriv);
      Mpc repulsion{mpf_class(0, bits), mpf_class(0, bits)};
      for (std::size_t j = 0; j < m; ++j) {
        if (j == k) continue;
        Mpc diff{w[k].re - w[j].re, w[k].im - w[j].im};
        if (norm2(diff) == 0) continue;
        Mpc inv = div(one, diff);
        repulsion.re += inv.re;
        repulsion.im += inv.im;
      }
      Mpc denom = mul(ratio, repulsion);
      denom.re = 1 - denom.re;
      denom.im = -denom.im;
      Mpc step = norm2(denom) == 0 ? ratio : div(ratio, denom);
      w[k].re -= step.re;
      w[k].im -= step.im;
      mpf_class scale = norm2(w[k]);
      if (scale < 1) scale = 1;
      if (norm2(step) <= threshold * scale) {
        settled[k] = true;
      } else {
        all_settled = false;
      }
    }
    if (all_settled) break;
  }
  for (std::size_t k = 0; k < m; ++k) z[k] = cld(to_ld(w[k].re), to_ld(w[k].im));
}

void order_roots(std::vector<ComplexRoot>& roots) {
  std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) { return a.re > b.re; });
  // Real parts that agree to rounding (conjugate pairs) are ordered by imaginary part.
  std::size_t start = 0;
  while (start < roots.size()) {
    std::size_t end = start + 1;
    while (end < roots.size() &&
           std::fabs(roots[end].re - roots[start].re) <= 1e-9 * (1 + std::fabs(roots[start].re))) {
      ++end;
    }
    std::sort(roots.begin() + static_cast<long>(start), roots.begin() + static_cast<long>(end),
              [](const ComplexRoot& a, const ComplexRoot& b) { return a.im < b.im; });
    start = end;
  }
}

std::string describe(const IntPolynomial& p) {
  std::string s = p.to_string();
  if (s.size() > 200) s = s.substr(0, 200) + "...";
  return s;
}

}  // namespace

std::vector<ComplexRoot> find_roots(const IntPolynomial& p, const RootOptions& options) {
  if (p.degree() < 1) throw Error("find_roots requires a polynomial of degree >= 1");
  const std::size_t zeros = p.lowest_degree();
  std::vector<ComplexRoot> roots(zeros, ComplexRoot{0.0, 0.0, 0.0});
  const auto a = scaled_deflated(p, zeros);
  if (a.size() > 1) {
    std::vector<cld> z;
    auto accept = [&](const std::vector<cld>& candidates, long double& worst) {
      worst = 0;
      for (const auto& c : candidates) worst = std::max(worst, backward_error(a, c));
      return worst <= options.tolerance;
    };
    long double worst_aberth = std::numeric_limits<long double>::infinity();
    long double worst_companion = std::numeric_limits<long double>::infinity();
    bool ok = false;
    if (options.method != RootMethod::Companion) {
      bool converged = aberth(a, options.max_iterations, z);
      ok = accept(z, worst_aberth) && (converged || options.method == RootMethod::Aberth);
    }
    if (!ok && options.method != RootMethod::Aberth) {
      z = companion_roots(a);
      ok = accept(z, worst_companion);
    }
    if (!ok) {
      throw Error("root finding did not converge for " + describe(p) + " (best residuals: aberth " +
                  std::to_string(static_cast<double>(worst_aberth)) + ", companion " +
                  std::to_string(static_cast<double>(worst_companion)) + ")");
    }
    refine(p, zeros, z);
    for (const auto& c : z) {
      roots.push_back({static_cast<double>(c.real()), static_cast<double>(c.imag()),
                       static_cast<double>(backward_error(a, c))});
    }
  }
  order_roots(roots);
  return roots;
}

RootSum root_sum_cycles(const std::vector<ComplexRoot>& roots) {
  cld sum = 0;
  for (const auto& r : roots) sum += cld(1) / (cld(1) - cld(r.re, r.im));
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

RootSum root_sum_transpositions(const std::vector<ComplexRoot>& roots) {
  cld sum = 0;
  for (const auto& r : roots) {
    cld z(r.re, r.im);
    sum += -z / (cld(1) - z);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

RootSum root_sum_transpositions_q(const std::vector<ComplexRoot>& q_roots) { return root_sum_cycles(q_roots); }

RootSum root_sum_cycles_q(const std::vector<ComplexRoot>& q_roots, unsigned degree) {
  RootSum s = root_sum_transpositions(q_roots);
  s.value += static_cast<double>(degree) - static_cast<double>(q_roots.size());
  return s;
}

double imaginary_cancellation(const std::vector<ComplexRoot>& roots) {
  long double sum = 0;
  for (const auto& r : roots) {
    long double dr = 1.0L - r.re;
    sum += r.im / (dr * dr + static_cast<long double>(r.im) * r.im);
  }
  return static_cast<double>(sum);
}

double reciprocity_residual(const std::vector<ComplexRoot>& p_roots, const std::vector<ComplexRoot>& q_roots) {
  std::vector<std::complex<double>> inverted;
  for (const auto& r : p_roots) {
    if (r.re == 0.0 && r.im == 0.0) continue;
    inverted.push_back(1.0 / r.value());
  }
  if (inverted.size() != q_roots.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(q_roots.size(), false);
  double worst = 0.0;
  for (const auto& target : inverted) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < q_roots.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(q_roots[j].value() - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_dist / std::max(1.0, std::abs(target)));
  }
  return worst;
}

bool RootReport::passed() const {
  return std::all_of(identity_checks.begin(), identity_checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

const IdentityCheck* RootReport::check(const std::string& name) const {
  for (const auto& c : identity_checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

RootReport root_report(const IntPolynomial& cycle_poly, const IntPolynomial& transposition_poly, unsigned degree,
                       const std::string& spec_name, const RootOptions& options) {
  RootReport report;
  report.spec = spec_name;
  report.degree = degree;
  report.cycle_poly = cycle_poly;
  report.transposition_poly = transposition_poly;
  report.mean_cycles = log_derivative_at_one(cycle_poly);
  report.mean_transpositions = log_derivative_at_one(transposition_poly);
  report.roots = find_roots(cycle_poly, options);
  if (transposition_poly.degree() >= 1) report.q_roots = find_roots(transposition_poly, options);

  const double mean_c = to_double(report.mean_cycles);
  const double mean_t = to_double(report.mean_transpositions);
  const double tol = options.identity_tolerance;
  auto add = [&](std::string name, double value, double expected, double residual, double tolerance) {
    report.identity_checks.push_back({std::move(name), value, expected, residual, tolerance});
  };
  auto sc = root_sum_cycles(report.roots);
  auto st = root_sum_transpositions(report.roots);
  auto qt = root_sum_transpositions_q(report.q_roots);
  auto qc = root_sum_cycles_q(report.q_roots, degree);
  add("root_sum_cycles", sc.value, mean_c, std::fabs(sc.value - mean_c), tol);
  add("root_sum_transpositions", st.value, mean_t, std::fabs(st.value - mean_t), tol);
  add("q_root_sum_transpositions", qt.value, mean_t, std::fabs(qt.value - mean_t), tol);
  add("q_root_sum_cycles", qc.value, mean_c, std::fabs(qc.value - mean_c), tol);
  double imag = imaginary_cancellation(report.roots);
  add("imaginary_cancellation", imag, 0.0, std::fabs(imag), tol / 10);
  double recip = reciprocity_residual(report.roots, report.q_roots);
  add("reciprocity", recip, 0.0, recip, tol);
  double worst = 0.0;
  for (const auto& r : report.roots) worst = std::max(worst, r.residual);
  for (const auto& r : report.q_roots) worst = std::max(worst, r.residual);
  add("root_residual", worst, 0.0, worst, options.tolerance);
  return report;
}

RootReport root_report(const GroupSpec& spec, const RootOptions& options, const Budget& budget) {
  return root_report(cycle_polynomial(spec, budget), transposition_polynomial(spec, budget), spec.degree(),
                     spec.name(), options);
}

std::string to_json(const RootReport& report) {
  using nlohmann::json;
  auto roots_json = [](const std::vector<ComplexRoot>& roots) {
    json pairs = json::array();
    json residuals = json::array();
    for (const auto& r : roots) {
      pairs.push_back({r.re, r.im});
      residuals.push_back(r.residual);
    }
    return std::pair{pairs, residuals};
  };
  auto [p_pairs, p_res] = roots_json(report.roots);
  auto [q_pairs, q_res] = roots_json(report.q_roots);
  json checks = json::object();
  for (const auto& c : report.identity_checks) {
    checks[c.name] = {{"value", c.value},
                      {"expected", c.expected},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed()}};
  }
  json j = {{"spec", report.spec},
            {"degree", report.degree},
            {"cycle_polynomial", report.cycle_poly.to_string()},
            {"transposition_polynomial", report.transposition_poly.to_string()},
            {"mean_cycles", report.mean_cycles.get_str()},
            {"mean_transpositions", report.mean_transpositions.get_str()},
            {"roots", p_pairs},
            {"residuals", p_res},
            {"q_roots", q_pairs},
            {"q_residuals", q_res},
            {"identity_checks", checks},
            {"passed", report.passed()}};
  return j.dump(2);
}

std::vector<std::complex<double>> weights_w(const GroupSpec& spec, const RootOptions& options, const Budget& budget) {
  auto roots = find_roots(cycle_polynomial(spec, budget), options);
  std::vector<std::complex<double>> w;
  w.reserve(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    w.push_back(static_cast<double>(k + 1) / (1.0 - roots[k].value()));
  }
  return w;
}

std::vector<Rational> weights_y(const GroupSpec& spec, const Budget& budget) {
  IntPolynomial p = cycle_polynomial(spec, budget);
  const unsigned n = spec.degree();
  Integer order = p.evaluate(Integer(1));
  Integer nfact = factorial(n);
  const auto& row = stirling_row(n).values;
  std::vector<Rational> y;
  y.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    Rational v(p.coefficient(k) * nfact, order * row[k]);
    v.canonicalize();
    y.push_back(v);
  }
  return y;
}

Rational surprisal_difference(Family family, unsigned part, unsigned total) {
  if (part == 0 || part > total) throw Error("surprisal_difference requires 1 <= part <= total");
  Rational d = family_mean_cycles(family, part) - family_mean_cycles(family, total);
  d.canonicalize();
  return d;
}

double surprisal_difference_roots(Family family, unsigned part, unsigned total, const RootOptions& options) {
  if (part == 0 || part > total) throw Error("surprisal_difference_roots requires 1 <= part <= total");
  if (family == Family::Symmetric) {
    auto roots = find_roots(cycle_polynomial(GroupSpec::symmetric(total)), options);
    std::vector<ComplexRoot> tail(roots.begin() + part, roots.end());
    return -root_sum_cycles(tail).value;
  }
  auto sum = [&](unsigned n) { return root_sum_cycles(find_roots(cycle_polynomial(GroupSpec::named(family, n)), options)).value; };
  return sum(part) - sum(total);
}

}  // namespace grent
