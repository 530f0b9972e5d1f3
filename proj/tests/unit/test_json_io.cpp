#include <doctest.h>

#include "optdom/closed_form.hpp"
#include "optdom/errors.hpp"
#include "optdom/json_io.hpp"
#include "support.hpp"

using namespace optdom;

TEST_SUITE("json_io") {

TEST_CASE("series round trip") {
  const TruncatedSeries f{1.0, cplx(-0.5, 2.0), cplx(0.0, 1e-17)};
  CHECK(series_from_json(series_to_json(f)) == f);
  CHECK(series_from_json(nlohmann::json::parse("[0, 2, -2]")) == TruncatedSeries{0.0, 2.0, -2.0});
  CHECK(series_from_json(nlohmann::json::parse("[[1, 2], 3]")) == TruncatedSeries{cplx(1, 2), 3.0});
  CHECK(series_from_json(nlohmann::json::parse(R"({"re":[1,2],"im":[0,1]})")) == TruncatedSeries{1.0, cplx(2, 1)});
}

TEST_CASE("series errors") {
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"(["a"])")), ParseError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"re":[1],"im":[1,2]})")), ParseError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse("3")), ParseError);
}

TEST_CASE("expression round trip") {
  const std::vector<Expr> exprs = {
      catalog("g0"),
      catalog("e1_witness", {1.5, cplx(0, 1)}),
      catalog("gu_prime", {cplx(1, -1)}),
      Expr::sum({Expr::var(), Expr::constant(cplx(2, 3)), Expr::recip(Expr::linpow(-1.0, 1.0), true)}),
  };
  for (const auto& e : exprs) {
    INFO(to_string(e));
    CHECK(expr_from_json(expr_to_json(e)) == e);
  }
  const Expr parsed = expr_from_json(nlohmann::json::parse(R"(["linpow", {"a": [1, 0], "rho": -1}])"));
  CHECK(parsed == Expr::linpow(1.0, -1.0));
}

TEST_CASE("expression errors") {
  CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse(R"(["nope"])")), ParseError);
  CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse(R"(["linpow", {"a": [2, 0], "rho": 1}])")), ParseError);
  CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse("{}")), ParseError);
  CHECK(complex_from_json(complex_to_json(cplx(1.5, -2))) == cplx(1.5, -2));
}

}  // TEST_SUITE
