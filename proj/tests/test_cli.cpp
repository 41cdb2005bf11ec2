#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bellhopf/bell.hpp"
#include "bellhopf/cli.hpp"
#include "bellhopf/format.hpp"
#include "bellhopf/hopf.hpp"
#include "bellhopf/mobius.hpp"

using namespace bellhopf;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("reference examples") {
  CHECK(run({"bell", "--nc", "-n", "3", "--format", "text"}).out == "d1^3 + d2*d1 + 2*d1*d2 + d3\n");
  const Result zero = run({"bell", "-n", "0"});
  CHECK(zero.status == 0);
  CHECK(zero.out == "1\n");
  CHECK(run({"partial", "-n", "3", "-k", "2"}).out == "d2*d1 + 2*d1*d2\n");
  CHECK(run({"bell", "--c", "-n", "3", "--format", "latex"}).out == "d_1^3 + 3 d_1 d_2 + d_3\n");
  CHECK(run({"hopf", "--dfdb", "--coproduct", "-n", "2"}).out == "X2 (x) 1 + 3*X1 (x) X1 + 1 (x) X2\n");
  CHECK(run({"mobius", "--nc", "--invert", "-n", "3"}).out == "2*B1^3 - B2*B1 - 2*B1*B2 + B3\n");
  CHECK(run({"qbell", "-n", "4", "-k", "2"}).out == "(1 + q + q^2)*d2^2 + (2 + q + q^2)*d1*d3\n");
  CHECK(run({"trees", "-n", "2"}).out == "aababb + aaabbb\n");
}

TEST_CASE("structured output round-trips") {
  for (int n = 0; n <= 6; ++n) {
    const Result nc = run({"bell", "--nc", "-n", std::to_string(n), "--format", "json"});
    CHECK(poly_from_json<Word>(json::parse(nc.out)) == bell<Word>(n));
    const Result c = run({"bell", "--c", "-n", std::to_string(n), "--format", "json"});
    CHECK(poly_from_json<Monomial>(json::parse(c.out)) == bell<Monomial>(n));
  }
  const Result s = run({"hopf", "--dfdb", "--antipode", "-n", "4", "--method", "qdet", "--format", "json"});
  CHECK(poly_from_json<Word>(json::parse(s.out)) == antipode_recursive<Word>(4));
  const json inv = json::parse(run({"mobius", "--nc", "--invert", "-n", "3", "--format", "json"}).out);
  CHECK(inv["algebra"] == "b-symbols");
  CHECK(poly_from_json<Word>(inv) == mobius_invert<Word>(3));
  const json t = json::parse(run({"hopf", "--coproduct", "-n", "3", "--format", "json"}).out);
  CHECK(t["terms"].size() == coproduct_generator<Monomial>(3).size());
}

TEST_CASE("quasideterminant of a matrix file") {
  const std::string path = write_temp("bellhopf_matrix.json", R"({"algebra": "nc", "rows": [["d1", "d2"], ["-1", "d3"]]})");
  const Result r = run({"quasidet", "--file", path});
  CHECK(r.status == 0);
  CHECK(r.out == "| d1 [d2] |\n| -1   d3 |\n= d1*d3 + d2\n");
  CHECK(run({"quasidet", "--bell-matrix", "-n", "2"}).out == "| d1 [d2] |\n| -1   d1 |\n= d1^2 + d2\n");
}

TEST_CASE("series commands") {
  const std::string path = write_temp(
      "bellhopf_series.json",
      R"({"f": {"truncation": 4, "coeffs": ["0", "1", "1"]}, "g": {"truncation": 4, "coeffs": [0, 1, "1/2"]}})");
  const Result r = run({"series", "--compose", "--order", "4", "--file", path});
  CHECK(r.status == 0);
  CHECK(r.out.find("f o g = t + 3/2*t^2 + t^3 + 1/4*t^4 + O(t^5)\n") != std::string::npos);
  CHECK(run({"series", "--compose", "--order", "5", "--file", path}).status == 2);
  CHECK(run({"series", "--reversion", "--order", "6"}).status == 0);
  CHECK(run({"series", "--flow-check", "--order", "4"}).out.find("PASS") != std::string::npos);
}

TEST_CASE("errors") {
  const Result unknown = run({"bell", "--frobnicate", "-n", "2"});
  CHECK(unknown.status == 2);
  CHECK_FALSE(unknown.err.empty());
  CHECK(run({"bell", "-n", "40"}).status == 2);
  CHECK(run({"hopf", "--coproduct", "--antipode", "-n", "2"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"verify", "--suite", "nope"}).status == 2);
}

TEST_CASE("verify is deterministic") {
  const Result small = run({"verify", "--suite", "all", "--max-degree", "3"});
  CHECK(small.status == 0);
  CHECK(small.out.find("FAIL") == std::string::npos);
  const Result a = run({"verify", "--suite", "all", "--max-degree", "6", "--seed", "7"});
  const Result b = run({"verify", "--suite", "all", "--max-degree", "6", "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(a.status == b.status);
  CHECK(run({"verify", "--suite", "term-count", "--max-degree", "12"}).status == 0);
}
