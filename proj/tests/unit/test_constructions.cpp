#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bhlab/constructions.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/rng.hpp"
#include "bhlab/sums.hpp"

using namespace bhlab;

TEST_CASE("slot embedding is a bijection onto disjoint blocks") {
  SlotEmbedding e{3, 4};
  std::vector<int> hits(13, 0);
  for (std::size_t s = 0; s < 3; ++s)
    for (std::uint32_t j = 1; j <= 4; ++j) {
      const auto v = e.map(s, j);
      ++hits[v];
      CHECK(e.invert(v) == std::pair<std::size_t, std::uint32_t>{s, j});
    }
  CHECK(std::count(hits.begin() + 1, hits.end(), 1) == 12);
}

TEST_CASE("symmetrization chain on random forms") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    SplitMix64 rng(s);
    const int m = 1 + static_cast<int>(rng.below(3));
    std::vector<std::size_t> dims(static_cast<std::size_t>(m));
    for (auto& d : dims) d = 1 + rng.below(3);
    const auto t = random_sparse(m, dims, 1.0, CoeffDist::pm1, rng.next());
    const auto [t1, emb] = disjointify(t);
    CHECK(t1.size() == t.size());
    for (auto d : t1.dims()) CHECK(d == m * *std::max_element(dims.begin(), dims.end()));
    CHECK(exact_norm_real(t1).value == exact_norm_real(t).value);
    const auto p = diagonal_polynomial(t1);
    CHECK(p.size() == t.size());
    CHECK(p.multiaffine());
    const double bh = bh_exponent(m);
    CHECK(lp_sum(coefficient_magnitudes(p), bh) == doctest::Approx(lp_sum(coefficient_magnitudes(t), bh)));
    CHECK(poly_lower_bound(p).value <= exact_norm_real(t).value + 1e-9);
    CHECK(recover_form(p, emb, dims) == t);
  }
}

TEST_CASE("diagonal polynomial adds colliding tuples") {
  MultilinearForm t({2, 2}, Field::real, {{{1, 2}, Scalar::integer(1)}, {{2, 1}, Scalar::integer(2)}});
  const auto p = diagonal_polynomial(t);
  CHECK(p.size() == 1);
  CHECK(p.coefficient(MultiIndex({{1, 1}, {2, 1}})) == Scalar::integer(3));
}

TEST_CASE("lift") {
  // P = x2 x3 - 2 x3 x4 has degree M - 1 = 2; lift to m = 5
  HomogeneousPolynomial p(2, 4, Field::real,
                          {{MultiIndex({{2, 1}, {3, 1}}), Scalar::integer(1)},
                           {MultiIndex({{3, 1}, {4, 1}}), Scalar::integer(-2)}});
  const auto q = lift_polynomial(p, 3, 5);
  CHECK(q.degree() == 5);
  CHECK(q.size() == p.size());
  for (const auto& [alpha, c] : q.coeffs()) {
    CHECK(alpha.exponent(1) == 3);
    CHECK(alpha.omega() <= 3);
  }
  SplitMix64 rng(8);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x(4);
    for (auto& v : x) v = rng.uniform(-1, 1);
    CHECK(std::abs(evaluate_poly(q, x).re()) <= std::abs(evaluate_poly(p, x).re()) + 1e-12);
  }
  CHECK_THROWS(lift_polynomial(p, 2, 5));
  CHECK_THROWS(lift_polynomial(p, 3, 2));
}
