#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bhlab/core.hpp"
#include "bhlab/norms.hpp"

namespace bhlab {

// Small exact rational for exponent bookkeeping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  Rational inverse() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

// 2m/(m+1).
double bh_exponent(int m);
Rational bh_exponent_exact(int m);

// Exponent p with 1/p = theta/p1 + (1-theta)/p2.
Rational interpolated_exponent(Rational p1, Rational p2, Rational theta);

// (sum |a_i|^p)^(1/p); the largest magnitude is factored out before powering
// and the sum is Neumaier-compensated. Empty input gives 0.
double lp_sum(std::span<const double> magnitudes, double p);
double lp_sum(std::span<const Scalar> coeffs, double p);

// Magnitudes of all stored coefficients.
std::vector<double> coefficient_magnitudes(const MultilinearForm& form);
std::vector<double> coefficient_magnitudes(const HomogeneousPolynomial& poly);

// lp_sum over coefficients whose tuple has at most M distinct index values.
double restricted_sum(const MultilinearForm& form, int M, double p);

// lp_sum over v(i_1..i_M) = T(e_{i_1} repeated n_1 times, ..., e_{i_M} repeated
// n_M times). p <= 0 selects 2M/(M+1).
double block_sum(const MultilinearForm& form, std::span<const int> partition, double p = 0.0);

// lp_sum over coefficients c_alpha with omega(alpha) <= M.
double poly_restricted_sum(const HomogeneousPolynomial& poly, int M, double p);

struct InterpolationResult {
  double target_p = 0.0;
  double value = 0.0;  // lp_sum(a, target_p)
  double bound = 0.0;  // lp_sum(a, p1)^theta * lp_sum(a, p2)^(1-theta)
  bool holds = false;
};

InterpolationResult interpolation_bound(std::span<const double> a, double p1, double p2, double theta);

// (1.3)^{M/m} * M^{0.365 M/m + (M+1)/2}.
double theorem_upper_bound(int m, int M);

struct Restriction {
  enum class Kind { full, card_leq, omega_leq, block };
  Kind kind = Kind::full;
  int M = 0;
  std::vector<int> partition;

  static Restriction full() { return {}; }
  static Restriction card_leq(int M) { return {Kind::card_leq, M, {}}; }
  static Restriction omega_leq(int M) { return {Kind::omega_leq, M, {}}; }
  static Restriction block(std::vector<int> partition) {
    return {Kind::block, static_cast<int>(partition.size()), std::move(partition)};
  }
};

std::string to_string(Restriction::Kind kind);

struct NormMethod {
  enum class Kind { exact, ascent };
  Kind kind = Kind::exact;
  NormOptions exact;
  AscentOptions ascent;
};

struct RatioReport {
  double p = 0.0;
  double sum = 0.0;
  NormResult norm;
  double ratio = 0.0;
  Restriction restriction;

  // A ratio witnesses a lower bound on the optimal constant only when the
  // norm is exact.
  bool certified() const noexcept { return norm.exact(); }
};

// p <= 0 selects the natural exponent: 2m/(m+1), or 2M/(M+1) for blocks.
RatioReport ratio_report(const MultilinearForm& form, double p, const Restriction& restriction = {},
                         const NormMethod& method = {});
RatioReport ratio_report(const HomogeneousPolynomial& poly, double p, const Restriction& restriction = {},
                         const NormMethod& method = {});

}  // namespace bhlab
