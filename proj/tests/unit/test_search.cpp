#include <doctest.h>

#include <cmath>

#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/search.hpp"

using namespace bhlab;

TEST_CASE("search recovers the Littlewood constant") {
  SearchConfig c;
  c.m = 2;
  c.dims = {2, 2};
  c.p = 4.0 / 3.0;
  c.seed = 7;
  const auto r = maximize_ratio(c);
  CHECK(r.report.ratio >= std::sqrt(2.0) - 1e-9);
  CHECK(r.report.certified());
  CHECK(r.evaluations <= c.budget);
}

TEST_CASE("search is reproducible and thread independent") {
  SearchConfig c;
  c.m = 3;
  c.dims = {3, 2, 2};
  c.budget = 400;
  c.restarts = 4;
  c.seed = 123;
  const auto a = maximize_ratio(c);
  c.threads = 4;
  const auto b = maximize_ratio(c);
  CHECK(a.best == b.best);
  CHECK(a.report.ratio == b.report.ratio);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("search with a start never drops below it") {
  SearchConfig c;
  c.m = 3;
  c.dims = {4, 2, 2};
  c.budget = 200;
  c.restarts = 2;
  c.seed = 1;
  c.start = s_family(3);
  const auto r = maximize_ratio(c);
  CHECK(r.report.ratio >= std::pow(2.0, 2.0 / 3.0) - 1e-9);
}

TEST_CASE("search argument checks") {
  SearchConfig c;
  c.budget = 3;
  c.restarts = 8;
  CHECK_THROWS_AS(maximize_ratio(c), BudgetError);
  c.budget = 100;
  c.restriction = Restriction::block({1, 1});
  CHECK_THROWS(maximize_ratio(c));
}

TEST_CASE("constant table") {
  SearchConfig d;
  d.budget = 64;
  d.restarts = 2;
  d.seed = 5;
  const auto t = constant_table({2, 3}, {2, 3}, d);
  CHECK(t.rows.size() == 3);
  for (const auto& row : t.rows) {
    const double best = row[4].get<double>(), upper = row[6].get<double>();
    CHECK(best <= upper);
  }
  CHECK(constant_table({}, {2}, d).rows.empty());
  const auto csv = t.to_csv();
  CHECK(csv.rfind("m,M,p,dims,best_ratio", 0) == 0);
  CHECK(content_hash(t.to_json()) == content_hash(constant_table({2, 3}, {2, 3}, d).to_json()));
}

TEST_CASE("KSZ experiment shape") {
  const auto t = ksz_scaling_experiment(2, {2, 4}, 5, 9);
  CHECK(t.rows.size() == 2);
  CHECK(t.summary.contains("slope"));
  CHECK(t.summary["theory_slope"] == 1.5);
  CHECK_THROWS_AS(ksz_scaling_experiment(3, {64}, 1, 1), BudgetError);
}
