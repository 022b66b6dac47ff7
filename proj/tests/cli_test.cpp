#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cubicsurf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("info") {
  const auto r = call({"info", "H"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["degree"] == 3);
  CHECK(j["self_intersection"] == 3);
  CHECK(j["ample"] == true);
  CHECK(j["family"] == "none");
  CHECK(j["chi"] == 4);
}

TEST_CASE("cohomology rows") {
  const auto r = call({"cohomology", "2*L[1]", "--twists", "0..0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["twists"].size() == 1);
  CHECK(j["twists"][0]["h0"] == 1);
  CHECK(j["twists"][0]["h1"] == 1);
  CHECK(j["twists"][0]["h2"] == 0);

  const auto tsv = call({"--format", "tsv", "cohomology", "2*L[1]", "--twists", "0..1"});
  REQUIRE(tsv.code == 0);
  CHECK(tsv.out.find("t\th0\th1\th2\n") == 0);
  CHECK(tsv.out.find("0\t1\t1\t0") != std::string::npos);
}

TEST_CASE("acm verdict") {
  const auto r = call({"acm", "L[1]"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["acm"] == true);
  const auto r2 = call({"acm", "2*L[1]"});
  CHECK(json::parse(r2.out)["acm"] == false);
}

TEST_CASE("classify") {
  const auto r = call({"classify", "--c1", "2*H", "--c2", "5"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["type"] == "A1");
  CHECK(j["hilbert"] == json({3, 9, 6}));
  const auto none = call({"classify", "--c1", "H", "--c2", "7"});
  CHECK(json::parse(none.out)["type"].is_null());
}

TEST_CASE("extension") {
  const auto r = call({"extension", "--m", "C^[1]", "--n", "T[]"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["type"] == "B1");
  CHECK(j["ext_dim"] == 2);
  CHECK(j["c2"] == 3);
  CHECK(j["stability"] == "st");
  // split pair: no nonsplit extension
  const auto split = call({"extension", "--m", "L[1]", "--n", "L[1]"});
  CHECK(split.code == 1);
}

TEST_CASE("census tables") {
  const auto r = call({"--format", "tsv", "census", "--table", "families"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("A1\t2H\t5\t1\t5") != std::string::npos);
  CHECK(r.out.find("A3\tH+C+L\t3\t270\t1") != std::string::npos);
  const auto maps = call({"census", "--table", "maps"});
  REQUIRE(maps.code == 0);
  CHECK(json::parse(maps.out)["maps"].size() == 12);
}

TEST_CASE("orbit") {
  const auto r = call({"orbit", "L[1]"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["size"] == 27);
  const auto rl = call({"orbit", "H", "--list"});
  const json j = json::parse(rl.out);
  CHECK(j["size"] == 1);
  CHECK(j["elements"].size() == 1);
}

TEST_CASE("verify single checks and exit codes") {
  const auto r = call({"verify", "--check", "weyl-order-51840"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS weyl-order-51840") != std::string::npos);

  const auto bad = call({"verify", "--check", "lattice-gram-diagonal", "--corrupt-gram"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL lattice-gram-diagonal") != std::string::npos);

  const auto unknown = call({"verify", "--check", "no-such-check"});
  CHECK(unknown.code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"info", "b7"}).code == 2);
  CHECK(call({"info", "L[1,1]"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"classify", "--c1", "H"}).code == 2);  // missing --c2
  CHECK(call({}).code == 2);
}
