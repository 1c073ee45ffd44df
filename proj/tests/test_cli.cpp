#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fanohs/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = fanohs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "cli_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("grad subcommand emits the exact gradient table") {
  Result r = run_cli({"grad", "catalog:D2"});
  REQUIRE(r.code == 0);
  json j = r.parsed();
  CHECK(j["gradients"]["-4"] ==
        json({"-11/1024", "-11/1024", "-21/1024"}));
  CHECK(j["gradients"]["-2"] == json({"-13/768", "-13/768", "-9/256"}));
  CHECK(j["gradients"]["-1"] == json({"-1/192", "-1/192", "-1/64"}));
}

TEST_CASE("rank subcommand canonicalizes the basis") {
  Result r = run_cli({"rank", "catalog:C2"});
  REQUIRE(r.code == 0);
  json j = r.parsed();
  CHECK(j["rank"] == 1);
  CHECK(j["basis"] == json({{"1", "-2", "3"}}));

  Result rb2 = run_cli({"rank", "catalog:B2"});
  CHECK(rb2.parsed()["basis"] == json({{"3", "1", "1"}}));
}

TEST_CASE("volmin subcommand reproduces the irrational minimizer") {
  Result r = run_cli({"volmin", "catalog:dP8"});
  REQUIRE(r.code == 0);
  json j = r.parsed();
  REQUIRE(j["converged"] == true);
  double b0 = std::sqrt(13.0) - 4.0;
  CHECK(std::abs(j["minimizer"][0].get<double>()) <= 1e-8);
  CHECK(std::abs(j["minimizer"][1].get<double>() - b0) <= 1e-8);
  CHECK(j.contains("post_report"));
}

TEST_CASE("coeffs subcommand with --at") {
  Result r = run_cli({"coeffs", "catalog:dP8", "--at", "1/2,0", "--order", "0"});
  REQUIRE(r.code == 0);
  json j = r.parsed();
  CHECK(j["at"] == json({"1/2", "0"}));
  CHECK(j["coefficients"].contains("-3"));
  // Closed form at (1/2, 0): 2(12 - 1/2)/((3)(-4)(5/2)(-5/2)) = 23/75.
  CHECK(j["coefficients"]["-3"] == "23/75");
}

TEST_CASE("validate subcommand exit codes") {
  Result good = run_cli({"validate", "catalog:CP3"});
  CHECK(good.code == 0);
  CHECK(good.parsed()["pass"] == true);

  std::string bad = write_temp("bad.json",
                               R"({"dim":2,"vertices":[[1,0],[0,1],[-2,-1]]})");
  Result r = run_cli({"validate", bad});
  CHECK(r.code == 1);
  CHECK(r.parsed()["pass"] == false);
  CHECK(r.parsed()["delzant"] == false);
}

TEST_CASE("file input with matching polar override loads") {
  std::string path = write_temp(
      "cp1.json",
      R"({"name":"interval","dim":1,"vertices":[[1],[-1]],
          "polar":{"vertices":[[-1],[1]],"edges":[[[1]],[[-1]]]}})");
  Result r = run_cli({"polar", path});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["vertices"] == json({{-1}, {1}}));

  std::string mismatched = write_temp(
      "cp1_bad.json",
      R"({"dim":1,"vertices":[[1],[-1]],"polar":{"vertices":[[-1],[2]]}})");
  Result rb = run_cli({"polar", mismatched});
  CHECK(rb.code == 1);
  CHECK(rb.err.find("disagree") != std::string::npos);
}

TEST_CASE("localize with a weights file reproduces the recorded forms") {
  std::string weights = write_temp("w.json", R"({
    "m": 3,
    "points": [
      [[-1,1,0],[-1,0,0],[0,0,-1]], [[-1,1,0],[-1,0,0],[0,0,1]],
      [[1,-1,0],[0,-1,0],[0,0,1]], [[1,0,0],[0,1,0],[0,0,1]],
      [[1,-1,0],[0,-1,0],[-1,1,-1]], [[0,-1,0],[0,0,-1],[1,-1,1]],
      [[1,0,0],[0,1,0],[-1,0,-1]], [[0,1,0],[0,0,-1],[1,0,1]]
    ]})");
  Result r = run_cli({"localize", "catalog:D2", "--weights", weights});
  REQUIRE(r.code == 0);
  json j = r.parsed();
  CHECK(j["c1_top"] == json({"-22", "11", "21"}));
  CHECK(j["c1sq_c2"] == json({"-4", "2", "6"}));
  CHECK(j["rank"] == 2);
}

TEST_CASE("localize derived with span comparison") {
  Result r = run_cli({"localize", "catalog:CP2xCP1", "--derived", "--compare"});
  REQUIRE(r.code == 0);
  json j = r.parsed();
  CHECK(j["span_equal"] == true);
  CHECK(j["rank"] == 0);

  Result conflict = run_cli({"localize", "catalog:D2"});
  CHECK(conflict.code == 1);
}

TEST_CASE("hilbert latex rendering") {
  Result r = run_cli({"hilbert", "catalog:CP1", "--format", "latex"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\\frac{1}{1-") != std::string::npos);
}

TEST_CASE("text and latex formats for the query commands") {
  Result coeffs =
      run_cli({"coeffs", "catalog:CP1", "--order", "0", "--format", "text"});
  REQUIRE(coeffs.code == 0);
  CHECK(coeffs.out.find("C_{-2} = 1/2") != std::string::npos);

  Result latex =
      run_cli({"coeffs", "catalog:CP1", "--order", "0", "--format", "latex"});
  REQUIRE(latex.code == 0);
  CHECK(latex.out.find("t^{-2}") != std::string::npos);

  Result grad =
      run_cli({"grad", "catalog:D2", "--order", "-4", "--format", "text"});
  REQUIRE(grad.code == 0);
  CHECK(grad.out.find("grad C_{-4} = (-11/1024, -11/1024, -21/1024)") !=
        std::string::npos);

  Result rank = run_cli({"rank", "catalog:B2", "--format", "text"});
  REQUIRE(rank.code == 0);
  CHECK(rank.out.find("rank = 1") != std::string::npos);
  CHECK(rank.out.find("basis: (3, 1, 1)") != std::string::npos);

  Result loc = run_cli(
      {"localize", "catalog:D2", "--derived", "--format", "latex"});
  REQUIRE(loc.code == 0);
  CHECK(loc.out.find("\\alpha") != std::string::npos);

  Result val = run_cli({"validate", "catalog:CP1", "--format", "text"});
  REQUIRE(val.code == 0);
  CHECK(val.out.find("pass") != std::string::npos);
}

TEST_CASE("brion subcommand certifies the identity") {
  Result r = run_cli({"brion", "catalog:dP8", "--level", "2", "--samples", "4"});
  REQUIRE(r.code == 0);
  json j = r.parsed();
  CHECK(j["all_equal"] == true);
  CHECK(j["samples"].size() == 4);
}

TEST_CASE("unknown catalog names fail with exit 1") {
  Result r = run_cli({"grad", "catalog:F1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("unknown catalog entry") != std::string::npos);
}

TEST_CASE("usage errors go to the error stream") {
  Result r = run_cli({"frobnicate"});
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
}

TEST_CASE("file input end to end on the projective plane") {
  // Not a catalog entry; exercises the whole pipeline from a bare vertex
  // list.  vol(P°) = 9/2, so C_{-3}(xi0) = 2 * (9/2) / 27 = 1/3, and the
  // symmetric vertex set forces zero gradients.
  std::string path = write_temp(
      "cp2.json", R"({"name":"CP2","dim":2,"vertices":[[1,0],[0,1],[-1,-1]]})");
  Result coeffs = run_cli({"coeffs", path, "--order", "0"});
  REQUIRE(coeffs.code == 0);
  CHECK(coeffs.parsed()["coefficients"]["-3"] == "1/3");

  Result rank = run_cli({"rank", path});
  REQUIRE(rank.code == 0);
  CHECK(rank.parsed()["rank"] == 0);

  Result brion = run_cli({"brion", path, "--level", "3"});
  REQUIRE(brion.code == 0);
  CHECK(brion.parsed()["all_equal"] == true);
  CHECK(brion.parsed()["count"] == 55);  // h^0(O(9)) on the plane

  Result vm = run_cli({"volmin", path});
  REQUIRE(vm.code == 0);
  CHECK(std::abs(vm.parsed()["minimizer"][0].get<double>()) <= 1e-10);
  CHECK(std::abs(vm.parsed()["minimizer"][1].get<double>()) <= 1e-10);
}

TEST_CASE("verify-all is deterministic and byte-identical") {
  Result a = run_cli({"catalog", "verify-all"});
  Result b = run_cli({"catalog", "verify-all"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.parsed()["all_ok"] == true);
}
