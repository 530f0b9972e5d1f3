#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "optdom/errors.hpp"
#include "optdom/radial.hpp"

using namespace optdom;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "optdom");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  CHECK(line == "r,maxmod,weighted");
  std::vector<std::vector<double>> rows;
  while (std::getline(is, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

double first_number_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  REQUIRE(pos != std::string::npos);
  return std::strtod(text.c_str() + pos + key.size(), nullptr);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("optdom_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("norm") {
  const Result a = run({"norm", "--fn", "pow_witness:1", "--space", "korenblum:1"});
  CHECK(a.code == 0);
  CHECK(std::abs(first_number_after(a.out, "estimate: ") - 1.0) <= 1e-3);
  CHECK(a.out.find("depth=12 angles=720") != std::string::npos);
  const Result b = run({"norm", "--fn", "g0", "--space", "bloch"});
  CHECK(std::abs(first_number_after(b.out, "estimate: ") - 1.0) <= 1e-3);
  const Result c = run({"norm", "--fn", "const:0", "--space", "korenblum:2"});
  CHECK(first_number_after(c.out, "estimate: ") == 0.0);
  const Result d = run({"--format", "json", "norm", "--fn", "const:1", "--space", "odomain:z:1"});
  CHECK(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(std::abs(j["estimate"].get<double>() - 0.25) <= 1e-3);
  const Result e = run({"norm", "--fn", "series:[1,2]", "--space", "bloch"});
  CHECK(std::abs(first_number_after(e.out, "estimate: ") - 3.0) <= 1e-12);
}

TEST_CASE("classify") {
  CHECK(run({"classify", "--fn", "pow_witness:1", "--gamma", "1"}).out.rfind("InA_NotA0\n", 0) == 0);
  CHECK(run({"classify", "--fn", "const:1", "--gamma", "1"}).out.rfind("InA0\n", 0) == 0);
  CHECK(run({"classify", "--fn", "pow_witness:1.5", "--gamma", "1"}).out.rfind("NotInA\n", 0) == 0);
  const Result m = run({"classify", "--fn", "e1_witness:1", "--gamma", "1", "--g", "g0"});
  CHECK(m.out.rfind("InA_NotA0 (member)", 0) == 0);
  const Result lo = run({"classify", "--fn", "e1_witness:1", "--gamma", "1", "--g", "g0", "--variant", "littleoh"});
  CHECK(lo.out.rfind("InA_NotA0 (non-member)", 0) == 0);
  const Result js = run({"--format", "json", "classify", "--fn", "pow_witness:1", "--gamma", "1"});
  CHECK(nlohmann::json::parse(js.out)["tail"].size() == 6);
}

TEST_CASE("apply") {
  CHECK(run({"apply", "--op", "cesaro", "--fn", "series:[0,2,-2]"}).out == "[0,1,0]\n");
  CHECK(run({"apply", "--op", "integrate", "--fn", "series:[3]"}).out == "[0,3]\n");
  const Result bad = run({"apply", "--op", "backshift", "--fn", "series:[1,2]"});
  CHECK(bad.code == 65);
  CHECK(bad.err.find("f(0) = 0") != std::string::npos);
  CHECK(run({"apply", "--op", "cesaro_inverse", "--fn", "series:[0,0,1]"}).out == "[0,0,3,-3]\n");
  CHECK(run({"apply", "--op", "volterra:z", "--fn", "series:[1]"}).out == "[0,1]\n");
  CHECK(run({"apply", "--op", "shift", "--fn", "[[0,1]]"}).out == "[[0,0],[0,1]]\n");
  CHECK(run({"apply", "--op", R"({"op":"mult","h":[0,1]})", "--fn", "series:[1,1]"}).out == "[0,1,1]\n");
  const Result at = run({"apply", "--op", "volterra:g0", "--fn", "const:1", "--at", "0.5"});
  CHECK(at.code == 0);
  CHECK(std::abs(std::strtod(at.out.c_str() + 1, nullptr) - std::numbers::ln2) <= 1e-12);
}

TEST_CASE("apply reports both values of T_g f at 0 when they differ") {
  // g = z^2: analytic value f(0) g'(0) = 0, convention value f(0) = 3
  const Result r = run({"--format", "json", "apply", "--op", "averaged:monomial:2", "--fn", "series:[3,1]"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"][0] == 0);
  CHECK(j["value_at_zero_by_convention"] == nlohmann::json::array({3, 0}));
  const Result at0 = run({"apply", "--op", "averaged:monomial:2", "--fn", "series:[3,1]", "--at", "0"});
  CHECK(at0.out.find("by convention f(0): [3,0]") != std::string::npos);
  // the Cesaro case agrees, so only one value is printed
  const Result ces = run({"apply", "--op", "averaged:g0", "--fn", "series:[3]", "--degree", "8"});
  CHECK(ces.out.find("convention") == std::string::npos);
}

TEST_CASE("profile") {
  const Result e1 = run({"profile", "--fn", "e1_witness:1", "--gamma", "1", "--ray", "pi"});
  CHECK(e1.code == 0);
  for (const auto& row : parse_csv(e1.out)) {
    const double r = row[0];
    CHECK(std::abs(row[2] - (1.0 + r) / (1.0 - r)) <= 1e-9 * (1.0 + r) / (1.0 - r));
  }
  for (const auto& row : parse_csv(run({"profile", "--fn", "const:1", "--gamma", "1"}).out)) {
    CHECK(row[2] == 1.0 - row[0]);
  }
  for (const auto& row : parse_csv(run({"profile", "--fn", "pow_witness:1", "--gamma", "1"}).out)) {
    CHECK(std::abs(row[2] - 1.0) <= 1e-12);
  }
}

TEST_CASE("profile CSV reproduces the in-memory profile exactly") {
  const Result r = run({"profile", "--fn", "e1_witness:2", "--gamma", "2"});
  const auto rows = parse_csv(r.out);
  const RadialProfile p =
      radial_profile(as_function(catalog("e1_witness", {2.0})), Weight::power(2.0), RadialGrid{});
  REQUIRE(rows.size() == p.points.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][0] == p.points[i].r);
    CHECK(rows[i][1] == p.points[i].maxmod);
    CHECK(rows[i][2] == p.points[i].weighted);
  }
}

TEST_CASE("profile to a file") {
  const auto path = temp_file("profile.csv");
  const Result r = run({"profile", "--fn", "pow_witness:1", "--gamma", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"profile", "--fn", "pow_witness:1", "--gamma", "1"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const Result ok = run({"verify", "check_cesaro_inverse"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("Pass") != std::string::npos);
  CHECK(run({"verify", "no_such_check"}).code == 64);
  CHECK(run({"verify", "e1_littleoh_diagnostic"}).code == 2);
  const Result js = run({"--format", "json", "verify", "check_shift_identities", "check_E2_iii"});
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out).size() == 10);
  CHECK(run({"verify", "all", "check_E2_iii"}).code == 64);
  const Result timed = run({"verify", "check_cesaro_inverse", "--timing"});
  CHECK(timed.out.find("runtime_ms") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> cmd = {"--format", "json", "verify", "check_j_norm_bound", "check_prop_J"};
  CHECK(run(cmd).out == run(cmd).out);
  const std::vector<std::string> prof = {"profile", "--fn", "propJ_witness:1", "--gamma", "1"};
  CHECK(run(prof).out == run(prof).out);
}

TEST_CASE("config file merges under flags") {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"grid_depth": 8, "angles": 64, "format": "json"})";
  }
  const Result a = run({"--config", path.string(), "norm", "--fn", "g0", "--space", "bloch"});
  CHECK(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["grid"]["depth"] == 8);
  CHECK(j["grid"]["angles"] == 64);
  const Result b = run({"--config", path.string(), "--angles", "128", "norm", "--fn", "g0", "--space", "bloch"});
  CHECK(nlohmann::json::parse(b.out)["grid"]["angles"] == 128);
  {
    std::ofstream f(path);
    f << R"({"mystery": 1})";
  }
  CHECK(run({"--config", path.string(), "verify", "all"}).code == 64);
  std::filesystem::remove(path);
  CHECK(run({"--config", "/nonexistent/optdom.json", "verify", "all"}).code == 64);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run({}).code == 64);
  CHECK(run({"norm", "--fn", "g0"}).code == 64);
  CHECK(run({"norm", "--fn", "nope", "--space", "bloch"}).code == 64);
  CHECK(run({"norm", "--fn", "g0", "--space", "hardy"}).code == 64);
  CHECK(run({"norm", "--fn", "series:[1,", "--space", "bloch"}).code == 64);
  CHECK(run({"--degree", "4", "verify", "all"}).code == 64);
  CHECK(run({"--grid-depth", "3", "verify", "all"}).code == 64);
  CHECK(run({"--format", "xml", "verify", "check_cesaro_inverse"}).code == 64);
  CHECK(run({"apply", "--op", "volterra", "--fn", "g0"}).code == 64);
  CHECK(run({"apply", "--op", "cesaro:g0", "--fn", "g0"}).code == 64);
  CHECK(run({"classify", "--fn", "g0", "--gamma", "0"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("evaluation errors exit 65") {
  CHECK(run({"apply", "--op", "integrate", "--fn", "g0", "--at", "1"}).code == 65);
  CHECK(run({"norm", "--fn", R"(["recip", ["var"], {"nonvanishing": false}])", "--space", "korenblum:1"}).code == 65);
}

TEST_CASE("argument parsing helpers") {
  CHECK(cli::parse_angle("pi") == std::numbers::pi);
  CHECK(cli::parse_angle("-pi/2") == -std::numbers::pi / 2);
  CHECK(cli::parse_angle("2pi/3") == 2 * std::numbers::pi / 3);
  CHECK(cli::parse_angle("0.25") == 0.25);
  CHECK_THROWS_AS(cli::parse_angle("tau"), ParseError);
  CHECK(cli::parse_point("0.5,-0.25") == cplx(0.5, -0.25));
  CHECK_THROWS_AS(cli::parse_point("1,2,3"), ParseError);
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(2.0) == "2");
  CHECK(std::holds_alternative<Expr>(cli::parse_function(R"(["linlog", {"a": 1}])")));
  CHECK(std::holds_alternative<TruncatedSeries>(cli::parse_function(R"({"re": [1], "im": [0]})")));
  CHECK(std::get<Expr>(cli::parse_function("e1_witness:1")) == catalog("e1_witness", {1.0}));
}

}  // TEST_SUITE
