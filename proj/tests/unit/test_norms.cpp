#include <doctest.h>

#include <cmath>

#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/norms.hpp"
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

MultilinearForm random_form(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int m = 1 + static_cast<int>(rng.below(3));
  std::vector<std::size_t> dims(static_cast<std::size_t>(m));
  for (auto& d : dims) d = 1 + rng.below(3);
  const auto dist = rng.below(2) ? CoeffDist::pm1 : CoeffDist::gaussian;
  return random_sparse(m, dims, 1.0, dist, rng.next());
}

}  // namespace

TEST_CASE("oracle: 2x2 form by hand over all 16 sign pairs") {
  // max over sign pairs of |x1 y1 + 2 x1 y2 + 3 x2 y1 - 4 x2 y2|
  double best = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double x1 = a & 1 ? -1 : 1, x2 = a & 2 ? -1 : 1, y1 = b & 1 ? -1 : 1, y2 = b & 2 ? -1 : 1;
      best = std::max(best, std::abs(x1 * y1 + 2 * x1 * y2 + 3 * x2 * y1 - 4 * x2 * y2));
    }
  CHECK(best == 8);
  const auto t = small_2x2();
  const auto r = exact_norm_real(t);
  CHECK(r.value == 8);
  REQUIRE(r.exact_value.has_value());
  CHECK(*r.exact_value == 8);
  CHECK(r.exact());
  CHECK(brute_force_norm_real(t) == 8);
}

TEST_CASE("S_m norms") {
  for (int m = 2; m <= 5; ++m) {
    const auto r = exact_norm_real(s_family(m));
    CHECK(r.exact_value == std::optional<std::int64_t>(std::int64_t{1} << (m - 1)));
  }
}

TEST_CASE("property: witness is a vertex attaining the norm") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto t = random_form(s);
    const auto r = exact_norm_real(t);
    const auto w = r.real_witness();
    REQUIRE(w.size() == t.arity());
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(w[k].size() == t.dims()[k]);
      for (double x : w[k]) CHECK(std::abs(x) == 1.0);
    }
    CHECK(std::abs(evaluate_form(t, w).re()) == doctest::Approx(r.value).epsilon(1e-12));
  }
}

TEST_CASE("property: exact norm equals brute force") {
  for (std::uint64_t s = 100; s < 200; ++s) {
    const auto t = random_form(s);
    const double e = exact_norm_real(t).value;
    const double b = brute_force_norm_real(t);
    if (t.integer_coefficients()) {
      CHECK(e == b);
    } else {
      CHECK(e == doctest::Approx(b).epsilon(1e-12));
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto t = ksz_random(3, 5, 42);
  NormOptions one, many;
  many.threads = 8;
  const auto a = exact_norm_real(t, one);
  const auto b = exact_norm_real(t, many);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}

TEST_CASE("budget and field checks") {
  NormOptions tight;
  tight.budget = 2;
  CHECK_THROWS_AS(exact_norm_real(s_family(5), tight), BudgetError);
  MultilinearForm c({1}, Field::complex, {{{1}, Scalar::complex(0, 1)}});
  CHECK_THROWS((void)exact_norm_real(c));
  MultilinearForm empty({2, 2}, Field::real, {});
  CHECK(exact_norm_real(empty).value == 0);
}

TEST_CASE("ascent is a lower bound and finds easy optima") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto t = random_form(300 + s);
    AscentOptions o;
    o.seed = s;
    const auto a = ascent_lower_bound(t, o);
    CHECK_FALSE(a.exact());
    CHECK(a.value <= exact_norm_real(t).value + 1e-9);
  }
  AscentOptions o;
  o.seed = 5;
  CHECK(ascent_lower_bound(small_2x2(), o).value == doctest::Approx(8));
}

TEST_CASE("complex ascent beats the real norm of S2") {
  // sup over the polydisc is max_y |y1 + y2| + |y1 - y2|, between 2 and 2 sqrt(2).
  MultilinearForm t({2, 2}, Field::complex,
                    {{{1, 1}, Scalar::complex(1, 0)},
                     {{1, 2}, Scalar::complex(1, 0)},
                     {{2, 1}, Scalar::complex(1, 0)},
                     {{2, 2}, Scalar::complex(-1, 0)}});
  AscentOptions o;
  o.seed = 3;
  o.restarts = 16;
  const auto a = ascent_lower_bound(t, o);
  CHECK(a.value >= 2.0 - 1e-9);
  CHECK(a.value <= 2.0 * std::sqrt(2.0) + 1e-9);
}

TEST_CASE("polynomial norms") {
  // x1 x2 + x3 x4 is multiaffine: exact value 2
  HomogeneousPolynomial p(2, 4, Field::real,
                          {{MultiIndex({{1, 1}, {2, 1}}), Scalar::integer(1)},
                           {MultiIndex({{3, 1}, {4, 1}}), Scalar::integer(1)}});
  const auto r = poly_lower_bound(p);
  CHECK(r.exact());
  CHECK(r.value == 2);

  // x1^2 - x2^2 has sup 1 on the cube
  HomogeneousPolynomial q(2, 2, Field::real,
                          {{MultiIndex({{1, 2}}), Scalar::integer(1)}, {MultiIndex({{2, 2}}), Scalar::integer(-1)}});
  AscentOptions o;
  o.seed = 9;
  const auto rq = poly_lower_bound(q, o);
  CHECK_FALSE(rq.exact());
  CHECK(rq.value == doctest::Approx(1.0));

  // x1^2 + x1 x2 attains 2 at (1, 1)
  HomogeneousPolynomial u(2, 2, Field::real,
                          {{MultiIndex({{1, 2}}), Scalar::integer(1)}, {MultiIndex({{1, 1}, {2, 1}}), Scalar::integer(1)}});
  CHECK(poly_lower_bound(u, o).value == doctest::Approx(2.0));
}
