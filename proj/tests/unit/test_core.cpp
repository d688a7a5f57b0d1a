#include <doctest.h>

#include "bhlab/core.hpp"
#include "bhlab/error.hpp"
#include "bhlab/rng.hpp"

using namespace bhlab;

namespace {

MultilinearForm small_2x2() {
  return MultilinearForm({2, 2}, Field::real,
                         {{{1, 1}, Scalar::integer(1)},
                          {{1, 2}, Scalar::integer(2)},
                          {{2, 1}, Scalar::integer(3)},
                          {{2, 2}, Scalar::integer(-4)}});
}

}  // namespace

TEST_CASE("scalar tags integers and rejects lossy field changes") {
  CHECK(Scalar::real(3.0).exact_integer() == std::optional<std::int64_t>(3));
  CHECK_FALSE(Scalar::real(0.5).exact_integer().has_value());
  CHECK(Scalar::complex(1, 1).abs() == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS((void)Scalar::complex(1, 2).as(Field::real), DomainError);
  CHECK(Scalar::complex(2, 0).as(Field::real) == Scalar::real(2));
  CHECK(field_from_string("complex") == Field::complex);
  CHECK_THROWS((void)field_from_string("quaternion"));
}

TEST_CASE("distinct_count") {
  CHECK(distinct_count({1, 1, 1}) == 1);
  CHECK(distinct_count({3, 1, 3, 2}) == 3);
  CHECK(distinct_count({}) == 0);
}

TEST_CASE("forms store only nonzero coefficients and validate tuples") {
  const auto t = small_2x2();
  CHECK(t.arity() == 2);
  CHECK(t.size() == 4);
  CHECK(t.integer_coefficients());
  CHECK(t.coefficient({2, 2}) == Scalar::integer(-4));

  MultilinearForm z({2, 2}, Field::real, {{{1, 1}, Scalar::integer(0)}});
  CHECK(z.empty());
  CHECK(z.coefficient({1, 1}).is_zero());

  CHECK_THROWS_AS(MultilinearForm({2, 2}, Field::real, {{{3, 1}, Scalar::integer(1)}}), DomainError);
  CHECK_THROWS_AS(MultilinearForm({2, 2}, Field::real, {{{0, 1}, Scalar::integer(1)}}), DomainError);
  CHECK_THROWS_AS(MultilinearForm({2, 2}, Field::real, {{{1}, Scalar::integer(1)}}), DomainError);
  CHECK_THROWS((void)t.coefficient({3, 1}));
}

TEST_CASE("from_terms rejects or accumulates duplicates") {
  std::vector<std::pair<IndexTuple, Scalar>> terms{{{1, 1}, Scalar::integer(1)}, {{1, 1}, Scalar::integer(2)}};
  CHECK_THROWS_AS(MultilinearForm::from_terms({1, 1}, Field::real, terms), DomainError);
  const auto acc = MultilinearForm::from_terms({1, 1}, Field::real, terms, true);
  CHECK(acc.coefficient({1, 1}) == Scalar::integer(3));
}

TEST_CASE("active coordinates") {
  MultilinearForm t({4, 3}, Field::real, {{{4, 1}, Scalar::integer(1)}, {{2, 1}, Scalar::integer(1)}});
  CHECK(t.active_coordinates(0) == std::vector<std::uint32_t>{2, 4});
  CHECK(t.active_coordinates(1) == std::vector<std::uint32_t>{1});
}

TEST_CASE("evaluation on basis vectors recovers coefficients") {
  const auto t = small_2x2();
  for (std::uint32_t i = 1; i <= 2; ++i) {
    for (std::uint32_t j = 1; j <= 2; ++j) {
      std::vector<RealVector> args{RealVector(2, 0.0), RealVector(2, 0.0)};
      args[0][i - 1] = 1;
      args[1][j - 1] = 1;
      CHECK(evaluate_form(t, args) == t.coefficient({i, j}));
    }
  }
}

TEST_CASE("property: multilinearity and homogeneity in each slot") {
  SplitMix64 rng(11);
  MultilinearForm::Coeffs c;
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (std::uint32_t j = 1; j <= 2; ++j)
      for (std::uint32_t k = 1; k <= 2; ++k) c[{i, j, k}] = Scalar::real(rng.uniform(-2, 2));
  const MultilinearForm t({3, 2, 2}, Field::real, c);
  auto rv = [&](std::size_t n) {
    RealVector v(n);
    for (auto& x : v) x = rng.uniform(-1, 1);
    return v;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t slot = rng.below(3);
    std::vector<RealVector> a{rv(3), rv(2), rv(2)};
    auto b = a;
    b[slot] = rv(t.dims()[slot]);
    const double lambda = rng.uniform(-3, 3);
    auto s = a;
    for (std::size_t q = 0; q < s[slot].size(); ++q) s[slot][q] = a[slot][q] + lambda * b[slot][q];
    const double lhs = evaluate_form(t, s).re();
    const double rhs = evaluate_form(t, a).re() + lambda * evaluate_form(t, b).re();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("integer evaluation is exact") {
  const auto t = small_2x2();
  std::vector<RealVector> args{{1, -1}, {-1, 1}};
  const Scalar v = evaluate_form(t, args);
  REQUIRE(v.exact_integer().has_value());
  CHECK(*v.exact_integer() == -1 + 2 + 3 + 4);
}

TEST_CASE("complex evaluation") {
  MultilinearForm t({1, 1}, Field::complex, {{{1, 1}, Scalar::complex(0, 1)}});
  std::vector<ComplexVector> args{{{0, 1}}, {{1, 0}}};
  CHECK(evaluate_form(t, args).re() == doctest::Approx(-1.0));
  MultilinearForm r({1}, Field::real, {{{1}, Scalar::integer(1)}});
  std::vector<ComplexVector> cargs{{{0, 1}}};
  CHECK_THROWS((void)evaluate_form(r, cargs));
}

TEST_CASE("multi-indices") {
  const auto a = MultiIndex::from_tuple({3, 1, 3});
  CHECK(a.degree() == 3);
  CHECK(a.omega() == 2);
  CHECK(omega(a) == 2);
  CHECK(a.exponent(3) == 2);
  CHECK(a.exponent(2) == 0);
  CHECK(a.shifted(1, 2).exponent(1) == 3);
  CHECK(a.shifted(5, 1).omega() == 3);
  CHECK_THROWS(MultiIndex({{0, 1}}));
  CHECK_THROWS(MultiIndex({{1, 0}}));
  CHECK_THROWS(MultiIndex({{1, 1}, {1, 2}}));
}

TEST_CASE("homogeneous polynomials") {
  HomogeneousPolynomial p(2, 3, Field::real,
                          {{MultiIndex({{1, 2}}), Scalar::integer(1)}, {MultiIndex({{2, 1}, {3, 1}}), Scalar::integer(-2)}});
  CHECK_FALSE(p.multiaffine());
  CHECK(p.active_variables() == std::vector<std::uint32_t>{1, 2, 3});
  std::vector<double> x{1, 2, 3};
  CHECK(evaluate_poly(p, x).re() == doctest::Approx(1 - 12));
  CHECK_THROWS(HomogeneousPolynomial(3, 3, Field::real, {{MultiIndex({{1, 2}}), Scalar::integer(1)}}));
  CHECK_THROWS(HomogeneousPolynomial(2, 1, Field::real, {{MultiIndex({{2, 2}}), Scalar::integer(1)}}));
  // homogeneity: P(tx) = t^m P(x)
  std::vector<double> tx{0.5, 1, 1.5};
  CHECK(evaluate_poly(p, tx).re() == doctest::Approx(0.25 * evaluate_poly(p, x).re()));
}
