#include "doctest.h"

#include <fstream>
#include <sstream>

#include "nilgr/cli.hpp"
#include "nilgr/correspondence.hpp"
#include "nilgr/json_io.hpp"

using namespace nilgr;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("orbits reproduces the Sp10 chain") {
  auto r = run({"orbits", "--case", "sympA", "--n", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(std::string(NILGR_GOLDEN_DIR) + "/orbits_sympA_5.out"));
  std::vector<long> dims;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    auto tab = line.find('\t');
    if (line.rfind("[", 0) == 0 && tab != std::string::npos) dims.push_back(std::stol(line.substr(tab + 1)));
  }
  CHECK(dims == std::vector<long>{40, 36, 32, 28, 24, 16, 0});
}

TEST_CASE("output is deterministic") {
  auto a = run({"verify-table", "--case", "A2lMinus1", "--rank", "3", "--seed", "5", "--conjugates", "3"});
  auto b = run({"verify-table", "--case", "A2lMinus1", "--rank", "3", "--seed", "5", "--conjugates", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto rep = json::parse(a.out);
  CHECK(rep["pass"] == true);
  CHECK(rep["rows"].size() > 0);
  CHECK(rep["rows"][0].contains("checks"));
}

TEST_CASE("verify-table full run for A2lMinus1(4)") {
  auto r = run({"verify-table", "--case", "A2lMinus1", "--rank", "4"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["pass"] == true);
}

TEST_CASE("cell-of, pi and iota over JSON") {
  TwistedCase c(TwistKind::A2lMinus1, 3);
  std::string ident = laurent_to_json(LaurentMatrix::identity(6)).dump();
  auto r = run({"cell-of", "--case", "A2lMinus1", "--rank", "3"}, ident);
  CHECK(r.code == 0);
  CHECK(r.out == "(0,0,0)\n");
  auto lam = WeightTuple(c.htype(), {2, 1, 1});
  auto row = expected_image(c, lam, Branch::II);
  LaurentMatrix g = witness(c, lam, Branch::II, row.orbits[0]);
  std::string gj = laurent_to_json(g).dump();
  auto cj = run({"cell-of", "--case", "A2lMinus1", "--rank", "3", "--json"}, gj);
  CHECK(weight_from_json(json::parse(cj.out)) == lam);
  auto pj = run({"pi"}, gj);
  CHECK(matrix_from_json(json::parse(pj.out)) == pi(g));
  auto ij = run({"iota"}, gj);
  CHECK(laurent_from_json(json::parse(ij.out)) == iota(g));
}

TEST_CASE("JSON schemas round-trip") {
  RationalMatrix a = RationalMatrix::from_rows({{Rational(1, 2), Rational(-3)}, {Rational(0), Rational(5, 7)}});
  CHECK(matrix_to_json(a)[0][0] == "1/2");
  CHECK(matrix_from_json(matrix_to_json(a)) == a);
  CHECK(matrix_from_json(json::parse(R"([[1, "2/4"], [0, -1]])"))(0, 1) == Rational(1, 2));
  LaurentMatrix g = LaurentMatrix::unipotent(a, a * a);
  CHECK(laurent_to_json(g)["coeffs"].contains("-2"));
  CHECK(laurent_from_json(laurent_to_json(g)) == g);
  WeightTuple w(HType::C(3), {2, 1, 1});
  CHECK(weight_to_json(w)["htype"] == "C");
  CHECK(weight_from_json(weight_to_json(w)) == w);
  CHECK(partition_from_json(json("3^2 1^4")).str() == "3^2 1^4");
  CHECK(partition_from_json(json::parse("[1, 3, 3]")).str() == "3^2 1");
}

TEST_CASE("fiber subcommand") {
  auto r = run({"fiber", "--case", "A2lMinus1", "--rank", "3", "--profile"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["dim"] == 6);
  CHECK(j["stated_dim"] == 7);
  CHECK(j["matches_stated"] == false);
  auto d = json::parse(run({"fiber", "--case", "D", "--rank", "4", "--profile"}).out);
  CHECK(d["dim"] == 16);
}

TEST_CASE("malformed input exits with 2") {
  CHECK(run({"orbits", "--case", "nope", "--n", "3"}).code == 2);
  CHECK(run({"orbits", "--case", "sympA"}).code == 2);
  CHECK(run({"small-weights", "--htype", "D", "--rank", "3"}).code == 2);
  CHECK(run({"cell-of", "--case", "A2l", "--rank", "2"}, "{not json").code == 2);
  auto bad = run({"cell-of", "--case", "A2l", "--rank", "2"}, laurent_to_json(LaurentMatrix::identity(3)).dump());
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({}).code == 2);
}
