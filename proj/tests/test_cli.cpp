#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "realclass/cli.hpp"
#include "realclass/parser.hpp"
#include "test_support.hpp"

using namespace realclass;
using realclass::testing::kXY;
using realclass::testing::numbered_vars;
using realclass::testing::Random;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "realclassify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    char name[] = "/tmp/realclass_batch_XXXXXX";
    const int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parser examples") {
  const Poly f = parse_poly("x^3 + y^4", kXY);
  CHECK(f.coefficient({3, 0}) == 1);
  CHECK(f.coefficient({0, 4}) == 1);
  CHECK(f.size() == 2);
  CHECK(parse_poly("-2/3*x^2*y", kXY).coefficient({2, 1}) == make_rational(-2, 3));
  CHECK(parse_poly("(x - y)*(x + y) - x^2", kXY) == parse_poly("-y^2", kXY));
  CHECK(parse_poly("x^0", kXY) == Poly::constant(kXY, 1));
  CHECK(parse_poly("4/6", kXY) == Poly::constant(kXY, make_rational(2, 3)));
}

TEST_CASE("parser errors") {
  for (const char* bad : {"x^(-1)", "x^-1", "2x", "x y", "x^65", "z", "1/0", "x +", "(x", "x)",
                          "x^1.5", "", "x**2", "x^y"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_poly(bad, kXY), ParseError);
  }
  try {
    parse_poly("x + y + w", kXY);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  CHECK_THROWS(parse_variable_list("x,x"));
  CHECK_THROWS(parse_variable_list("x,1y"));
  CHECK_THROWS(parse_variable_list(""));
  CHECK(parse_variable_list("x, y,z1") == std::vector<std::string>{"x", "y", "z1"});
}

TEST_CASE("canonical printing round-trips through the parser") {
  Random rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto vars = numbered_vars(static_cast<std::size_t>(rng.integer(1, 4)));
    const Poly p = rng.poly(vars, rng.integer(0, 8), 0, 7);
    INFO(to_string(p));
    CHECK(parse_poly(to_string(p), vars) == p);
  }
}

TEST_CASE("single expression text output") {
  const Outcome o = invoke({"--vars", "x,y", "x^2*y - y^4"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("D5-  mu=5 corank=2 inertia=0", 0) == 0);
  CHECK(o.out.find("normal_form=\"-y^4 + x^2*y\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"--vars", "x", "x^3 + 7"}).code == 5);
  CHECK(invoke({"--vars", "x,y", "x^2*y^2"}).code == 3);
  CHECK(invoke({"--vars", "x,y", "x^4 + y^4"}).code == 4);
  CHECK(invoke({"--vars", "x,y", "x^3 + y^7"}).code == 4);
  CHECK(invoke({"--vars", "x,y,z,w,v", "x^2 + y^2 + z^3 + w^3 + v^3"}).code == 4);
  CHECK(invoke({"--vars", "x,y", "x^(-1)"}).code == 2);
  CHECK(invoke({"--vars", "x,y", "x^2 + q"}).code == 2);
  CHECK(invoke({"--vars", "x,y", "x^2 + y^2"}).code == 0);
  // usage problems
  CHECK(invoke({"x^2"}).code == 2);
  CHECK(invoke({"--vars", "x,x", "x^2"}).code == 2);
  CHECK(invoke({"--vars", "x", "--format", "xml", "x^2"}).code == 2);
  CHECK(invoke({"--vars", "x"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("json output carries the record fields") {
  const Outcome o = invoke({"--vars", "x,y,z,w", "--format", "json", "x^3 + y^4 + z^2 - w^2"});
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["status"] == "ok");
  CHECK(j["type"] == "E6+");
  CHECK(j["mu"] == 6);
  CHECK(j["corank"] == 2);
  CHECK(j["inertia_index"] == 1);
  CHECK(j["determinacy"].is_number_integer());
  CHECK(j["residual"].is_string());
  CHECK(j["normal_form"] == "y^4 + x^3 - z^2 + w^2");
  CHECK(j["input"] == "x^3 + y^4 + z^2 - w^2");
  CHECK_FALSE(j.contains("steps"));

  const auto e = nlohmann::json::parse(invoke({"--vars", "x,y", "--format", "json", "x^2*y^2"}).out);
  CHECK(e["status"] == "not-isolated");
  CHECK(e["message"].is_string());
  CHECK(e["type"].is_null());

  const auto s = nlohmann::json::parse(
      invoke({"--vars", "x,y", "--format", "json", "--steps", "(x+y)^3 + y^4"}).out);
  REQUIRE(s["steps"].is_array());
  CHECK(s["steps"].size() >= 2);
}

TEST_CASE("text and json report the same fields") {
  for (const char* expr : {"x^2*y - y^4", "x^3 + x*y^3", "-x^4 + y^2", "x^2 + 2*x*y + y^2 + x^3"}) {
    const cli::Record r = cli::process(expr, kXY);
    const std::string text = cli::format_text(r, false);
    const auto j = cli::to_json(r, false);
    const std::regex field(R"((\w+)=("(?:[^"\\]|\\.)*"|\S+))");
    std::map<std::string, std::string> parsed;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), field); it != std::sregex_iterator(); ++it) {
      std::string v = (*it)[2];
      if (v.front() == '"') v = v.substr(1, v.size() - 2);
      parsed[(*it)[1]] = v;
    }
    CHECK(text.rfind(j["type"].get<std::string>(), 0) == 0);
    CHECK(parsed["mu"] == std::to_string(j["mu"].get<long>()));
    CHECK(parsed["corank"] == std::to_string(j["corank"].get<int>()));
    CHECK(parsed["inertia"] == std::to_string(j["inertia_index"].get<int>()));
    CHECK(parsed["determinacy"] == std::to_string(j["determinacy"].get<int>()));
    CHECK(parsed["residual"] == j["residual"].get<std::string>());
    CHECK(parsed["normal_form"] == j["normal_form"].get<std::string>());
    CHECK(parsed["input"] == j["input"].get<std::string>());
  }
}

TEST_CASE("batch mode keeps going and keeps order") {
  const TempFile file(
      "# simple singularities\n"
      "x^2*y + y^3\n"
      "\n"
      "x^4 + y^4\n"
      "  # indented comment\n"
      "x^(-1)\n"
      "-x^2 - y^2\n"
      "x^3 - y^4\n");
  const Outcome text = invoke({"--vars", "x,y", "--batch", file.path});
  CHECK(count_lines(text.out) == 5);
  CHECK(text.code == 4);  // first failing record
  std::istringstream lines(text.out);
  std::string line;
  std::vector<std::string> got;
  while (std::getline(lines, line)) got.push_back(line);
  REQUIRE(got.size() == 5);
  CHECK(got[0].rfind("D4+", 0) == 0);
  CHECK(got[1].rfind("error(not-simple)", 0) == 0);
  CHECK(got[2].rfind("error(parse-error)", 0) == 0);
  CHECK(got[3].rfind("A1 ", 0) == 0);
  CHECK(got[4].rfind("E6-", 0) == 0);

  const Outcome json = invoke({"--vars", "x,y", "--batch", file.path, "--format", "json"});
  const auto arr = nlohmann::json::parse(json.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 5);
  CHECK(arr[4]["type"] == "E6-");

  const TempFile mixed("x^2\n-x^3+y^2\n");
  // x^2 does not involve y, so it is not isolated in x,y
  CHECK(invoke({"--vars", "x,y", "--batch", mixed.path}).code == 3);
}

TEST_CASE("batch with a missing file or both inputs is a usage error") {
  CHECK(invoke({"--vars", "x", "--batch", "/nonexistent/file"}).code == 2);
  CHECK(invoke({"--vars", "x", "--batch", "/dev/null", "x^2"}).code == 2);
  CHECK(invoke({"--vars", "x", "--batch", "/dev/null"}).code == 0);
}

TEST_CASE("batch results match one-at-a-time processing") {
  std::vector<std::string> lines;
  for (int k = 1; k <= 10; ++k) {
    lines.push_back("x^" + std::to_string(k + 1) + " + y^2");
    lines.push_back("x^2*y - y^" + std::to_string(k + 3));
  }
  const auto batch = cli::process_batch(lines, kXY);
  REQUIRE(batch.size() == lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    CHECK(cli::format_text(batch[i], true) == cli::format_text(cli::process(lines[i], kXY), true));
}
