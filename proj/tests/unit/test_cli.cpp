#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bhlab/cli.hpp"
#include "bhlab/io.hpp"

using namespace bhlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bhlab_cli_" + name)).string();
}

}  // namespace

TEST_CASE("gen then norm") {
  const auto path = temp_path("s4.json");
  REQUIRE(run({"gen", "--family", "s", "--m", "4", "--out", path}).code == cli::kOk);
  const auto r = run({"norm", "--in", path});
  REQUIRE(r.code == cli::kOk);
  const auto j = parse_json(r.out);
  CHECK(j["value"] == 8);
  CHECK(j["exact"] == true);
}

TEST_CASE("ratio of a family") {
  const auto r = run({"ratio", "--family", "s", "--m", "3", "--p", "bh"});
  REQUIRE(r.code == cli::kOk);
  CHECK(parse_json(r.out)["ratio"].get<double>() == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-12));
  const auto csv = run({"--csv", "ratio", "--family", "s2"});
  CHECK(csv.out.rfind("p,sum,norm,exact_norm,ratio,restriction\n", 0) == 0);
}

TEST_CASE("sum with restrictions") {
  const auto path = temp_path("s3.json");
  REQUIRE(run({"gen", "--family", "s", "--m", "3", "--out", path}).code == cli::kOk);
  const auto r = run({"sum", "--in", path, "--p", "1.5", "--restrict", "block:2,1"});
  REQUIRE(r.code == cli::kOk);
  CHECK(parse_json(r.out)["sum"].get<double>() == doctest::Approx(std::pow(4.0, 2.0 / 3.0)));
  CHECK(run({"sum", "--in", path, "--restrict", "card:x"}).code == cli::kUsage);
}

TEST_CASE("construct symmetrize and lift") {
  const auto in = temp_path("s2.json"), emb = temp_path("emb.json"), poly = temp_path("p.json");
  REQUIRE(run({"gen", "--family", "s2", "--out", in}).code == cli::kOk);
  REQUIRE(run({"construct", "symmetrize", "--in", in, "--out", poly, "--emit-embedding", emb}).code == cli::kOk);
  std::ifstream pf(poly);
  const auto p = load_polynomial(pf);
  CHECK(p.degree() == 2);
  CHECK(p.size() == 4);
  const auto lifted = run({"construct", "lift", "--in", poly, "--M", "3", "--m", "4"});
  REQUIRE(lifted.code == cli::kOk);
  CHECK(parse_json(lifted.out)["m"] == 4);
  CHECK(run({"construct", "lift", "--in", poly, "--M", "2", "--m", "4"}).code == cli::kUsage);
}

TEST_CASE("randomness needs an explicit seed and is reproducible") {
  CHECK(run({"gen", "--family", "ksz", "--m", "2", "--n", "3"}).code == cli::kUsage);
  const auto a = run({"gen", "--family", "ksz", "--m", "2", "--n", "3", "--seed", "4"});
  const auto b = run({"gen", "--family", "ksz", "--m", "2", "--n", "3", "--seed", "4"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(run({"search", "--m", "2"}).code == cli::kUsage);
  const auto s1 = run({"search", "--m", "2", "--dims", "2,2", "--budget", "200", "--seed", "3"});
  const auto s2 = run({"search", "--m", "2", "--dims", "2,2", "--budget", "200", "--seed", "3", "--threads", "4"});
  REQUIRE(s1.code == cli::kOk);
  CHECK(s1.out == s2.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"norm", "--in", "x", "--bogus"}).code == cli::kUsage);
  CHECK(run({"norm", "--in", temp_path("does_not_exist.json")}).code == cli::kUsage);
  const auto path = temp_path("s5.json");
  REQUIRE(run({"gen", "--family", "s", "--m", "5", "--out", path}).code == cli::kOk);
  CHECK(run({"norm", "--in", path, "--budget", "4"}).code == cli::kBudget);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("ksz-scaling and quick verify") {
  const auto k = run({"ksz-scaling", "--m", "2", "--ns", "2,4", "--samples", "3", "--seed", "1", "--csv"});
  REQUIRE(k.code == cli::kOk);
  CHECK(k.out.rfind("n,samples,median_norm", 0) == 0);
  const auto v = run({"verify", "--suite", "quick", "--deterministic"});
  CHECK(v.code == cli::kOk);
  CHECK(parse_json(v.out).is_object());
}
