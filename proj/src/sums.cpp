#include "bhlab/sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bhlab/constants.hpp"
#include "bhlab/error.hpp"

namespace bhlab {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::inverse() const { return {den, num}; }

Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
Rational operator/(Rational a, Rational b) { return a * b.inverse(); }

double bh_exponent(int m) {
  if (m < 1) throw DomainError("bh_exponent needs m >= 1");
  return constants::bh_exponent(m);
}

Rational bh_exponent_exact(int m) {
  if (m < 1) throw DomainError("bh_exponent needs m >= 1");
  return {2 * m, m + 1};
}

Rational interpolated_exponent(Rational p1, Rational p2, Rational theta) {
  return (theta / p1 + (Rational(1) - theta) / p2).inverse();
}

namespace {

void check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("exponent p must be finite and >= 1");
}

}  // namespace

double lp_sum(std::span<const double> magnitudes, double p) {
  check_p(p);
  double scale = 0.0;
  for (double a : magnitudes) scale = std::max(scale, std::abs(a));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  double compensation = 0.0;
  for (double a : magnitudes) {
    const double term = std::pow(std::abs(a) / scale, p);
    const double t = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return scale * std::pow(sum + compensation, 1.0 / p);
}

double lp_sum(std::span<const Scalar> coeffs, double p) {
  std::vector<double> mags;
  mags.reserve(coeffs.size());
  for (const auto& c : coeffs) mags.push_back(c.abs());
  return lp_sum(mags, p);
}

std::vector<double> coefficient_magnitudes(const MultilinearForm& form) {
  std::vector<double> out;
  out.reserve(form.size());
  for (const auto& [t, c] : form.coeffs()) out.push_back(c.abs());
  return out;
}

std::vector<double> coefficient_magnitudes(const HomogeneousPolynomial& poly) {
  std::vector<double> out;
  out.reserve(poly.size());
  for (const auto& [alpha, c] : poly.coeffs()) out.push_back(c.abs());
  return out;
}

double restricted_sum(const MultilinearForm& form, int M, double p) {
  if (M < 1 || static_cast<std::size_t>(M) > form.arity()) throw DomainError("restricted_sum needs 1 <= M <= m");
  std::vector<double> mags;
  for (const auto& [t, c] : form.coeffs()) {
    if (distinct_count(t) <= static_cast<std::size_t>(M)) mags.push_back(c.abs());
  }
  return lp_sum(mags, p);
}

double block_sum(const MultilinearForm& form, std::span<const int> partition, double p) {
  if (partition.empty()) throw DomainError("block partition is empty");
  std::size_t total = 0;
  for (int n : partition) {
    if (n < 1) throw DomainError("block sizes must be >= 1");
    total += static_cast<std::size_t>(n);
  }
  if (total != form.arity()) {
    throw DomainError("block sizes sum to " + std::to_string(total) + ", form arity is " +
                      std::to_string(form.arity()));
  }
  if (p <= 0.0) p = bh_exponent(static_cast<int>(partition.size()));
  // v(i_1..i_M) is the coefficient of the tuple that is constant on each
  // block, so only stored tuples of that shape contribute.
  std::vector<double> mags;
  for (const auto& [t, c] : form.coeffs()) {
    std::size_t pos = 0;
    bool constant = true;
    for (int n : partition) {
      for (int r = 1; r < n && constant; ++r) constant = t[pos + r] == t[pos];
      pos += static_cast<std::size_t>(n);
    }
    if (constant) mags.push_back(c.abs());
  }
  return lp_sum(mags, p);
}

double poly_restricted_sum(const HomogeneousPolynomial& poly, int M, double p) {
  if (M < 1 || static_cast<std::uint32_t>(M) > std::max<std::uint32_t>(poly.degree(), 1)) {
    throw DomainError("poly_restricted_sum needs 1 <= M <= m");
  }
  std::vector<double> mags;
  for (const auto& [alpha, c] : poly.coeffs()) {
    if (alpha.omega() <= static_cast<std::size_t>(M)) mags.push_back(c.abs());
  }
  return lp_sum(mags, p);
}

InterpolationResult interpolation_bound(std::span<const double> a, double p1, double p2, double theta) {
  if (!(p1 >= 1.0) || !(p2 >= 1.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
    throw DomainError("interpolation exponents must be finite and >= 1");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("theta must lie in [0, 1]");
  InterpolationResult r;
  r.target_p = 1.0 / (theta / p1 + (1.0 - theta) / p2);
  r.value = lp_sum(a, r.target_p);
  r.bound = std::pow(lp_sum(a, p1), theta) * std::pow(lp_sum(a, p2), 1.0 - theta);
  // Holder is exact; the slack only absorbs rounding in pow.
  r.holds = r.value <= r.bound * (1.0 + 1e-12);
  return r;
}

double theorem_upper_bound(int m, int M) {
  if (M < 1 || M > m) throw DomainError("theorem_upper_bound needs 1 <= M <= m");
  const double theta = static_cast<double>(M) / m;
  return std::pow(constants::bound_base, theta) *
         std::pow(static_cast<double>(M), constants::rounded_real_rate * theta + (M + 1) / 2.0);
}

std::string to_string(Restriction::Kind kind) {
  switch (kind) {
    case Restriction::Kind::full: return "full";
    case Restriction::Kind::card_leq: return "card";
    case Restriction::Kind::omega_leq: return "omega";
    case Restriction::Kind::block: return "block";
  }
  return "full";
}

namespace {

double finish_ratio(double sum, double norm) { return norm > 0.0 ? sum / norm : 0.0; }

}  // namespace

RatioReport ratio_report(const MultilinearForm& form, double p, const Restriction& restriction,
                         const NormMethod& method) {
  RatioReport report;
  report.restriction = restriction;
  const int m = static_cast<int>(form.arity());
  switch (restriction.kind) {
    case Restriction::Kind::full:
      report.p = p > 0.0 ? p : bh_exponent(m);
      report.sum = lp_sum(coefficient_magnitudes(form), report.p);
      break;
    case Restriction::Kind::card_leq:
    case Restriction::Kind::omega_leq:
      report.p = p > 0.0 ? p : bh_exponent(m);
      report.sum = restricted_sum(form, restriction.M, report.p);
      break;
    case Restriction::Kind::block:
      report.p = p > 0.0 ? p : bh_exponent(static_cast<int>(restriction.partition.size()));
      report.sum = block_sum(form, restriction.partition, report.p);
      break;
  }
  report.norm = method.kind == NormMethod::Kind::exact ? exact_norm_real(form, method.exact)
                                                       : ascent_lower_bound(form, method.ascent);
  report.ratio = finish_ratio(report.sum, report.norm.value);
  return report;
}

RatioReport ratio_report(const HomogeneousPolynomial& poly, double p, const Restriction& restriction,
                         const NormMethod& method) {
  RatioReport report;
  report.restriction = restriction;
  const int m = static_cast<int>(std::max<std::uint32_t>(poly.degree(), 1));
  report.p = p > 0.0 ? p : bh_exponent(m);
  switch (restriction.kind) {
    case Restriction::Kind::full:
      report.sum = lp_sum(coefficient_magnitudes(poly), report.p);
      break;
    case Restriction::Kind::card_leq:
    case Restriction::Kind::omega_leq:
      report.sum = poly_restricted_sum(poly, restriction.M, report.p);
      break;
    case Restriction::Kind::block:
      throw DomainError("block restriction applies to multilinear forms only");
  }
  report.norm = poly_lower_bound(poly, method.ascent, method.exact);
  report.ratio = finish_ratio(report.sum, report.norm.value);
  return report;
}

}  // namespace bhlab
