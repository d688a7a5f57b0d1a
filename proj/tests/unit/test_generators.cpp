#include <doctest.h>

#include <cmath>

#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/norms.hpp"

using namespace bhlab;

TEST_CASE("Littlewood S2") {
  const auto s = littlewood_s2();
  CHECK(s.dims() == std::vector<std::size_t>{2, 2});
  CHECK(s.coefficient({2, 2}) == Scalar::integer(-1));
  CHECK(s == s_family(2));
}

TEST_CASE("S_m shape") {
  for (int m = 2; m <= 6; ++m) {
    const auto s = s_family(m);
    CHECK(s.dims()[0] == (std::size_t{1} << (m - 1)));
    for (int k = 1; k < m; ++k) CHECK(s.dims()[static_cast<std::size_t>(k)] == 2);
    CHECK(s.size() == (std::size_t{1} << (2 * (m - 1))));
    for (const auto& [t, v] : s.coeffs()) {
      CHECK(v.abs() == 1);
      CHECK(distinct_count(t) <= 3);
    }
  }
  CHECK_THROWS(s_family(1));
}

TEST_CASE("R_m and A_m") {
  for (int m : {2, 4, 6}) {
    const auto r = r_family(m);
    CHECK(r.size() == (std::size_t{1} << m));
    for (const auto& [t, v] : r.coeffs()) CHECK(distinct_count(t) <= 2);
    CHECK(exact_norm_real(r).value == std::pow(2.0, m / 2));
  }
  for (int m : {3, 5}) {
    const auto a = a_family(m);
    CHECK(a.size() == (std::size_t{1} << (m - 1)));
    CHECK(a.dims().back() == 1);
    CHECK(exact_norm_real(a).value == std::pow(2.0, (m - 1) / 2));
  }
  CHECK_THROWS(r_family(3));
  CHECK_THROWS(a_family(4));
}

TEST_CASE("KSZ forms are dense, +-1 and reproducible") {
  const auto a = ksz_random(3, 4, 99);
  CHECK(a.size() == 64);
  for (const auto& [t, v] : a.coeffs()) CHECK(v.abs() == 1);
  CHECK(a == ksz_random(3, 4, 99));
  CHECK_FALSE(a == ksz_random(3, 4, 100));
  CHECK_THROWS_AS(ksz_random(10, 100, 1), BudgetError);
}

TEST_CASE("random sparse forms") {
  const auto f = random_sparse(2, {3, 4}, 0.5, CoeffDist::gaussian, 5);
  CHECK(f.dims() == std::vector<std::size_t>{3, 4});
  CHECK(f == random_sparse(2, {3, 4}, 0.5, CoeffDist::gaussian, 5));
  const auto u = random_sparse(2, {3, 3}, 1.0, CoeffDist::uniform, 5);
  CHECK(u.size() == 9);
  for (const auto& [t, v] : u.coeffs()) CHECK(v.abs() <= 1.0);
  CHECK_THROWS(random_sparse(2, {3}, 0.5, CoeffDist::pm1, 1));
  CHECK_THROWS(random_sparse(2, {3, 3}, 0.0, CoeffDist::pm1, 1));
  CHECK(coeff_dist_from_string(to_string(CoeffDist::gaussian)) == CoeffDist::gaussian);
}

TEST_CASE("generate dispatches on the family name") {
  SeededSpec spec;
  spec.family = family_from_string("a");
  spec.m = 3;
  CHECK(generate(spec) == a_family(3));
  spec.family = family_from_string("random");
  spec.n = 3;
  spec.seed = 4;
  CHECK(generate(spec).dims() == std::vector<std::size_t>{3, 3, 3});
  CHECK_THROWS(family_from_string("nope"));
}
