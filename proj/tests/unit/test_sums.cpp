#include <doctest.h>

#include <cmath>
#include <vector>

#include "bhlab/constants.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/rng.hpp"
#include "bhlab/sums.hpp"

using namespace bhlab;

TEST_CASE("bh exponent") {
  CHECK(bh_exponent(1) == 1.0);
  CHECK(bh_exponent(2) == doctest::Approx(4.0 / 3.0));
  CHECK(bh_exponent_exact(3) == Rational(3, 2));
  CHECK(bh_exponent_exact(4) == Rational(8, 5));
}

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(2, 7).inverse() == Rational(7, 2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("exponent algebra reproduces 2m/(m+1) for theta = M/m") {
  for (int m = 1; m <= 12; ++m)
    for (int M = 1; M <= m; ++M)
      CHECK(interpolated_exponent(bh_exponent_exact(M), Rational(2), Rational(M, m)) == bh_exponent_exact(m));
}

TEST_CASE("lp_sum basics") {
  const std::vector<double> a{3, 4};
  CHECK(lp_sum(a, 2) == doctest::Approx(5));
  CHECK(lp_sum(a, 1) == doctest::Approx(7));
  CHECK(lp_sum(std::vector<double>{}, 1.5) == 0);
  CHECK_THROWS(lp_sum(a, 0.5));
  // factoring the maximum keeps huge and tiny magnitudes finite
  const std::vector<double> big{1e300, 1e300};
  CHECK(lp_sum(big, 1.2) == doctest::Approx(std::pow(2.0, 1 / 1.2) * 1e300));
  const std::vector<double> tiny{1e-300, 1e-300};
  CHECK(lp_sum(tiny, 3) == doctest::Approx(std::cbrt(2.0) * 1e-300));
}

TEST_CASE("property: lp monotonicity and scaling") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(1 + rng.below(50));
    for (auto& x : a) x = std::abs(rng.gaussian()) * std::pow(10.0, rng.uniform(-4, 4));
    const double p = rng.uniform(1, 3), q = p + rng.uniform(0, 2);
    CHECK(lp_sum(a, p) >= lp_sum(a, q) * (1 - 1e-12));
    auto b = a;
    for (auto& x : b) x *= 7.5;
    CHECK(lp_sum(b, p) == doctest::Approx(7.5 * lp_sum(a, p)).epsilon(1e-12));
  }
}

TEST_CASE("S_m full sums and ratios") {
  for (int m = 2; m <= 5; ++m) {
    const auto s = s_family(m);
    const double p = bh_exponent(m);
    CHECK(lp_sum(coefficient_magnitudes(s), p) ==
          doctest::Approx(std::pow(2.0, (m - 1.0) * (m + 1.0) / m)).epsilon(1e-12));
    const auto r = ratio_report(s, 0.0);
    CHECK(r.certified());
    CHECK(r.ratio == doctest::Approx(std::pow(2.0, (m - 1.0) / m)).epsilon(1e-12));
  }
}

TEST_CASE("restricted sums") {
  const auto s4 = s_family(4);
  const double p = bh_exponent(4);
  CHECK(restricted_sum(s4, 3, p) == doctest::Approx(lp_sum(coefficient_magnitudes(s4), p)));
  CHECK(restricted_sum(s4, 4, p) == doctest::Approx(lp_sum(coefficient_magnitudes(s4), p)));
  CHECK(restricted_sum(s4, 1, p) <= restricted_sum(s4, 2, p));
  MultilinearForm diag({3, 3}, Field::real, {{{1, 1}, Scalar::integer(2)}, {{3, 3}, Scalar::integer(-2)}});
  CHECK(restricted_sum(diag, 1, 1.0) == 4);
}

TEST_CASE("block sums") {
  const auto s3 = s_family(3);
  // (2,1): enumerate i <= 4, j <= 2 and add |S3(e_i, e_i, e_j)|^{3/2}
  double acc = 0;
  for (std::uint32_t i = 1; i <= 2; ++i)
    for (std::uint32_t j = 1; j <= 2; ++j) acc += std::pow(s3.coefficient({i, i, j}).abs(), 1.5);
  const std::vector<int> part{2, 1};
  CHECK(block_sum(s3, part, 1.5) == doctest::Approx(std::pow(acc, 2.0 / 3.0)));
  CHECK(block_sum(s3, part, 1.5) == doctest::Approx(std::pow(4.0, 2.0 / 3.0)));

  const std::vector<int> ones{1, 1, 1};
  CHECK(block_sum(s3, ones) == doctest::Approx(lp_sum(coefficient_magnitudes(s3), 1.5)));
  const std::vector<int> all{3};
  MultilinearForm d({2, 2, 2}, Field::real, {{{1, 1, 1}, Scalar::integer(3)}, {{1, 2, 1}, Scalar::integer(5)}});
  CHECK(block_sum(d, all, 1.0) == 3);
  const std::vector<int> bad{2, 2};
  CHECK_THROWS((void)block_sum(s3, bad));
}

TEST_CASE("interpolation bound") {
  const std::vector<double> a{1, 2, 3};
  const auto eq = interpolation_bound(a, 1.5, 2.0, 1.0);
  CHECK(eq.holds);
  CHECK(eq.bound == doctest::Approx(lp_sum(a, 1.5)));
  SplitMix64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + rng.below(100));
    for (auto& x : v) x = std::pow(10.0, rng.uniform(-8, 8));
    const auto r = interpolation_bound(v, rng.uniform(1, 4), rng.uniform(1, 4), rng.uniform());
    CHECK(r.holds);
  }
}

TEST_CASE("upper bound formula") {
  CHECK(theorem_upper_bound(3, 3) == doctest::Approx(1.3 * std::pow(3.0, 0.365 + 2.0)));
  CHECK(theorem_upper_bound(1000000, 2) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-5));
}

TEST_CASE("ratio report plumbing") {
  MultilinearForm empty({2, 2}, Field::real, {});
  CHECK(ratio_report(empty, 0.0).ratio == 0);
  // scale invariance
  const auto s3 = s_family(3);
  MultilinearForm::Coeffs c;
  for (const auto& [t, v] : s3.coeffs()) c[t] = Scalar::real(v.re() * -2.5);
  const MultilinearForm scaled({4, 2, 2}, Field::real, c);
  CHECK(ratio_report(scaled, 0.0).ratio == doctest::Approx(ratio_report(s_family(3), 0.0).ratio));
  const auto card = ratio_report(s_family(4), 0.0, Restriction::card_leq(3));
  CHECK(card.restriction.kind == Restriction::Kind::card_leq);
  CHECK(card.ratio <= theorem_upper_bound(4, 3));
}

TEST_CASE("constants") {
  CHECK(constants::bh_exponent(2) == doctest::Approx(4.0 / 3.0));
  CHECK(constants::real_exponent_rate == doctest::Approx((2 - std::log(2.0) - constants::gamma) / 2));
}
