#include "doctest.h"
#include "json.hpp"
#include "numsg/cli.hpp"
#include "numsg/cone.hpp"

using nlohmann::json;
using numsg::cli::CommandResult;
using numsg::cli::run;

namespace {

bool has(const CommandResult& r, const std::string& text) { return r.out.find(text) != std::string::npos; }

}  // namespace

TEST_CASE("argument parsers") {
  CHECK(numsg::cli::parse_generators("6,15,7") == std::vector<numsg::Int>{6, 15, 7});
  CHECK(numsg::cli::parse_generators(" 2, 3 ") == std::vector<numsg::Int>{2, 3});
  CHECK_THROWS_AS(numsg::cli::parse_generators(""), numsg::SemigroupError);
  CHECK_THROWS_AS(numsg::cli::parse_generators("2,,3"), numsg::SemigroupError);
  CHECK_THROWS_AS(numsg::cli::parse_generators("2,-3"), numsg::SemigroupError);
  CHECK_THROWS_AS(numsg::cli::parse_generators("0,3"), numsg::SemigroupError);
  const auto steps = numsg::cli::parse_steps("(2,3); (2,5)");
  REQUIRE(steps.size() == 2);
  CHECK(steps[1] == std::pair<numsg::Int, numsg::Int>{2, 5});
  CHECK_THROWS_AS(numsg::cli::parse_steps("(2,3);2,5"), numsg::SemigroupError);
}

TEST_CASE("info") {
  auto r = run({"info", "6,15,7"});
  CHECK(r.exit_code == 0);
  CHECK(has(r, "CM tangent cone: false"));
  r = run({"info", "1"});
  CHECK(has(r, "semigroup: N"));
  CHECK(has(r, "frobenius: -1"));
  r = run({"info", "11,60,68,156"});
  CHECK(has(r, "CM tangent cone: true"));
  CHECK(has(r, "nondecreasing"));
  r = run({"info", "4,6"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("NonCoprime") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);
  CHECK(run({"info", "4,x"}).exit_code == 2);
}

TEST_CASE("info JSON matches the library") {
  const auto r = run({"--json", "info", "6,15,7"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const auto s = numsg::NumericalSemigroup::from_generators({6, 15, 7});
  CHECK(j["semigroup"] == numsg::to_json(s));
  CHECK(j["cm_tangent_cone"] == false);
  CHECK(j["hilbert"] == numsg::to_json(numsg::hilbert_function(s)));
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("table") {
  auto r = run({"table", "1"});
  CHECK(r.exit_code == 0);
  CHECK(has(r, "AP(S) | 0"));
  r = run({"table", "2,3"});
  CHECK(has(r, "AP(S)  | 0 | 3"));
  CHECK(has(r, "AP(M)  | 2 | 3"));
  CHECK(has(r, "AP(2M) | 4 | 5"));
  r = run({"table", "11,60,72,156", "--json"});
  const json j = json::parse(r.out);
  CHECK(j == numsg::to_json(numsg::apery_table(numsg::NumericalSemigroup::from_generators({11, 60, 72, 156}))));
  CHECK(run({"table", "2,4"}).exit_code == 2);
}

TEST_CASE("apery and hilbert") {
  auto r = run({"apery", "4,11,29"});
  CHECK(has(r, "by residue: 0, 29, 22, 11"));
  r = run({"apery", "2,3", "-x", "4", "--json"});
  const json j = json::parse(r.out);
  CHECK(j["elements"] == std::vector<numsg::Int>{0, 5, 2, 3});
  CHECK(run({"apery", "2,3", "-x", "1"}).exit_code == 2);
  r = run({"hilbert", "2,3"});
  CHECK(has(r, "1, 2 (then 2 forever), nondecreasing"));
}

TEST_CASE("glue") {
  auto r = run({"glue", "--s1", "4,11,29", "--s2", "2,3", "-p", "15", "-q", "4"});
  CHECK(r.exit_code == 0);
  CHECK(has(r, "glued: <16, 30, 44, 45, 116>"));
  CHECK(has(r, "nice: true"));
  CHECK(has(r, "specific: true"));
  r = run({"glue", "--s1", "2,5", "--s2", "1", "-p", "7", "-q", "3", "--analyze"});
  CHECK(has(r, "extension: true"));
  CHECK(has(r, "nice: false"));
  CHECK(has(r, "S: symmetric true, G CM false"));
  CHECK(has(r, "applicable theorems:"));
  r = run({"glue", "--s1", "2,3", "--s2", "2,3", "-p", "4", "-q", "4"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("NotCoprime") != std::string::npos);
  r = run({"--json", "glue", "--s1", "2,5", "--s2", "1", "-p", "7", "-q", "3", "--analyze"});
  const json j = json::parse(r.out);
  CHECK(j["glued_generators"] == std::vector<numsg::Int>{6, 7, 15});
  CHECK(j["analysis"]["glued"]["cm_tangent_cone"] == false);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--theorem", "T4", "--samples", "200", "--seed", "42"});
  CHECK(r.exit_code == 0);
  r = run({"verify", "--theorem", "T1", "--samples", "200", "--seed", "7"});
  CHECK(r.exit_code == 0);
  CHECK(run({"verify", "--theorem", "T999"}).exit_code == 2);
  r = run({"verify", "--theorem", "T1", "--samples", "200", "--drop-specific", "--json"});
  CHECK(r.exit_code == 1);
  CHECK_FALSE(json::parse(r.out)["violations"].empty());
  r = run({"verify", "--theorem", "T1", "--samples", "200", "--drop-specific"});
  CHECK(has(r, "first witness:"));
  const auto a = run({"--seed", "5", "verify", "--theorem", "T6", "--samples", "20", "--json"});
  const auto b = run({"verify", "--theorem", "T6", "--samples", "20", "--json", "--seed", "5"});
  CHECK(a.out == b.out);
}

TEST_CASE("free") {
  auto r = run({"free", "--steps", "(2,3)"});
  CHECK(has(r, "free semigroup: <2, 3>"));
  r = run({"free", "--steps", "(2,3);(2,5)"});
  CHECK(has(r, "free semigroup: <4, 5, 6>"));
  r = run({"free", "--steps", "(2,3);(3,4)"});
  CHECK(r.exit_code == 0);
  r = run({"free", "--steps", "(2,3);(2,4)"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("step 2") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"glue", "--s1", "2,5"}).exit_code == 2);
  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
