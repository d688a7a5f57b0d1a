#include <doctest.h>

#include <sstream>

#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/io.hpp"

using namespace bhlab;

namespace {

std::string parse_error_location(const std::string& text) {
  try {
    (void)document_from_json(parse_json(text));
  } catch (const ParseError& e) {
    return e.location();
  }
  return "no error";
}

}  // namespace

TEST_CASE("form round trip") {
  for (const auto& t : {s_family(3), random_sparse(2, {3, 2}, 0.7, CoeffDist::gaussian, 4)}) {
    std::stringstream ss;
    save_form(t, ss);
    CHECK(load_form(ss) == t);
  }
  MultilinearForm c({1, 2}, Field::complex, {{{1, 2}, Scalar::complex(0.5, -1)}});
  CHECK(form_from_json(to_json(c)) == c);
}

TEST_CASE("integers are written as JSON integers") {
  const auto j = to_json(littlewood_s2());
  CHECK(j.dump().find("\"re\":1}") != std::string::npos);
  CHECK(j.dump().find("1.0") == std::string::npos);
}

TEST_CASE("polynomial round trip") {
  HomogeneousPolynomial p(3, 4, Field::real,
                          {{MultiIndex({{1, 2}, {4, 1}}), Scalar::real(0.25)}, {MultiIndex({{2, 3}}), Scalar::integer(-7)}});
  std::stringstream ss;
  save_polynomial(p, ss);
  CHECK(load_polynomial(ss) == p);
  const auto doc = document_from_json(to_json(p));
  CHECK(std::holds_alternative<HomogeneousPolynomial>(doc));
}

TEST_CASE("malformed documents name the offending location") {
  CHECK(parse_error_location(R"({"kind":"form","m":2,"field":"real","dims":[2,2],"coeffs":[{"idx":[1,3],"re":1}]})") ==
        "/coeffs/0/idx/1");
  CHECK(parse_error_location(R"({"kind":"form","m":2,"field":"real","dims":[2,2],"coeffs":[{"idx":[0,1],"re":1}]})") ==
        "/coeffs/0/idx/0");
  CHECK(parse_error_location(R"({"kind":"form","m":2,"field":"real","dims":[2,2],"coeffs":[],"extra":1})") ==
        "/extra");
  CHECK(parse_error_location(R"({"m":2})") == "/kind");
  CHECK(parse_error_location(
            R"({"kind":"form","m":1,"field":"real","dims":[2],"coeffs":[{"idx":[1],"re":1},{"idx":[1],"re":2}]})") ==
        "/coeffs/1");
  CHECK(parse_error_location(R"({"kind":"form","m":1,"field":"real","dims":[2],"coeffs":[{"idx":[1],"re":0}]})") !=
        "no error");
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

TEST_CASE("doubles round trip bit-identically") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("norm and ratio JSON") {
  NormResult r;
  r.value = 8;
  r.exact_value = 8;
  r.bound = Bound::exact;
  r.witness = {{{1, 0}}, {{-1, 0}}};
  r.eliminated_slot = 0;
  const auto j = to_json(r);
  CHECK(j["value"] == 8);
  CHECK(j["exact"] == true);
  CHECK(j["eliminated_slot"] == 1);
  RatioReport rep;
  rep.p = 1.5;
  rep.norm = r;
  rep.restriction = Restriction::card_leq(3);
  const auto k = to_json(rep);
  CHECK(k["exact_norm"] == true);
  CHECK(k["restriction"]["kind"] == "card");
  CHECK(k["restriction"]["M"] == 3);
}
