#include <doctest.h>

#include <numbers>
#include <random>

#include "optdom/closed_form.hpp"
#include "optdom/errors.hpp"
#include "optdom/operators.hpp"
#include "optdom/quadrature.hpp"
#include "support.hpp"

using namespace optdom;
using testing_support::check_coeffs;

namespace {

std::vector<cplx> harmonic(std::size_t n, std::size_t offset) {
  std::vector<cplx> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = k + offset == 0 ? 0.0 : 1.0 / static_cast<double>(k + offset);
  return out;
}

// (V_g f)_{n+1} = (f g')_n / (n+1), convolution written out directly
TruncatedSeries volterra_oracle(const TruncatedSeries& gp, const TruncatedSeries& f, std::size_t cap) {
  std::vector<cplx> p(f.degree() + gp.degree() + 1, cplx{});
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    for (std::size_t j = 0; j <= gp.degree(); ++j) p[i + j] += f[i] * gp[j];
  }
  std::vector<cplx> out(std::min(cap, p.size()) + 1, cplx{});
  for (std::size_t n = 0; n + 1 < out.size(); ++n) out[n + 1] = p[n] / static_cast<double>(n + 1);
  return TruncatedSeries(std::move(out));
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("volterra") {
  check_coeffs(volterra({1.0}, {1.0}), {0, 1});
  const TruncatedSeries v = volterra(TruncatedSeries::ones(40), {1.0}, 40);
  check_coeffs(v, harmonic(40, 0), 1e-16);
  const TruncatedSeries w = volterra(TruncatedSeries::ones(30), TruncatedSeries::ones(30), 30);
  std::vector<cplx> want(31, 1.0);
  want[0] = 0.0;
  check_coeffs(w, want, 1e-15);
}

TEST_CASE("volterra matches the convolution oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto gp = testing_support::random_poly(rng, 10);
    const auto f = testing_support::random_poly(rng, 20);
    CHECK(max_abs_difference(volterra(gp, f, 25), volterra_oracle(gp, f, 25)) <= 1e-14);
  }
}

TEST_CASE("averaged") {
  CHECK(averaged(TruncatedSeries::ones(16), {0.0, 2.0, -2.0}, 16) == TruncatedSeries{0.0, 1.0});
  check_coeffs(averaged({1.0}, {cplx(2, 3)}), {cplx(2, 3)});
  check_coeffs(averaged(TruncatedSeries::ones(30), {1.0}, 30), harmonic(30, 1), 1e-16);
  CHECK(averaged_value_at_zero_by_convention({cplx(4, 1), 2.0}) == cplx(4, 1));
  // analytic value at 0 is f(0) g'(0), which differs from f(0) once g'(0) != 1
  CHECK(averaged({0.0, 2.0}, {3.0, 1.0})[0] == cplx{});
}

TEST_CASE("cesaro and its inverse") {
  CHECK(cesaro({0.0, 2.0, -2.0}, 8) == TruncatedSeries{0.0, 1.0});
  check_coeffs(cesaro({1.0}, 20), harmonic(20, 1), 1e-16);
  const TruncatedSeries c = cesaro({0.0, 0.0, 3.0}, 6);
  check_coeffs(c, {0, 0, 1, 0.75, 0.6, 0.5, 3.0 / 7.0}, 1e-16);
  check_coeffs(cesaro_inverse({0.0, 0.0, 1.0}), {0, 0, 3, -3});
  check_coeffs(cesaro_inverse({1.0}), {1, -1});
  CHECK(cesaro({1.0}, 9).degree() == 9);
}

TEST_CASE("cesaro equals averaged with the all-ones symbol") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing_support::random_poly(rng, 40);
    CHECK(cesaro(f, 64) == averaged(TruncatedSeries::ones(64), f, 64));
  }
}

TEST_CASE("cesaro inverse round trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing_support::random_poly(rng, 64);
    CHECK(max_abs_difference(cesaro(cesaro_inverse(f, 64), 64), f) <= 1e-12);
    CHECK(max_abs_difference(cesaro_inverse(cesaro(f, 64), 64), f) <= 1e-12);
  }
}

TEST_CASE("elementary operators") {
  check_coeffs(differentiate({0.0, 0.0, 1.0}), {0, 2});
  check_coeffs(differentiate({5.0}), {0});
  check_coeffs(integrate({3.0}), {0, 3});
  check_coeffs(integrate({0.0, 1.0}), {0, 0, 0.5});
  check_coeffs(shift({1.0, 2.0}), {0, 1, 2});
  check_coeffs(shift({0.0}), {0, 0});
  check_coeffs(backshift({0.0, 1.0, 2.0}), {1, 2});
  CHECK_THROWS_AS(backshift({1.0, 2.0}), PreconditionError);
  check_coeffs(multiply({0.0, 1.0}, {1.0, 1.0}), {0, 1, 1});
  CHECK(shift({1.0, 2.0}, 1).degree() == 1);
}

TEST_CASE("shift factorisations") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing_support::random_poly(rng, 30);
    const auto gp = testing_support::random_poly(rng, 12);
    const TruncatedSeries h = subtract(f, TruncatedSeries{f[0]});
    CHECK(shift(backshift(h)) == h);
    CHECK(backshift(shift(f)) == f);
    CHECK(volterra(gp, f) == shift(averaged(gp, f)));
    CHECK(averaged(gp, f) == backshift(volterra(gp, f)));
  }
  check_coeffs(shift(backshift({0.0, 1.0})), {0, 1});
}

TEST_CASE("volterra is injective when g'(0) != 0") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    // a dominant g'(0) keeps the substitution below well conditioned
    const auto gp = add(scale(testing_support::random_poly(rng, 8), 0.1), {1.0});
    const auto f = testing_support::random_poly(rng, 20);
    // V_g f determines f by forward substitution in the convolution
    const TruncatedSeries v = volterra(gp, f, 60);
    std::vector<cplx> rec(f.degree() + 1);
    for (std::size_t n = 0; n <= f.degree(); ++n) {
      cplx p = v[n + 1] * static_cast<double>(n + 1);
      for (std::size_t j = 1; j <= std::min(n, gp.degree()); ++j) p -= rec[n - j] * gp[j];
      rec[n] = p / gp[0];
    }
    CHECK(max_abs_difference(TruncatedSeries(rec), f) <= 1e-10);
  }
  CHECK(volterra({1.0}, TruncatedSeries::zeros(5)) == TruncatedSeries{});
}

TEST_CASE("every operator is linear") {
  std::mt19937_64 rng(26);
  const cplx alpha(0.7, -1.3), beta(-2.1, 0.4);
  const TruncatedSeries gp = testing_support::random_poly(rng, 10);
  const std::vector<OperatorSpec> ops = {ops::Volterra{gp},        ops::Averaged{gp},    ops::Cesaro{},
                                         ops::CesaroInverse{},     ops::Differentiate{}, ops::Integrate{},
                                         ops::MultiplyBy{catalog("g0prime")}, ops::Shift{}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = testing_support::random_poly(rng, 30);
    const auto h = testing_support::random_poly(rng, 30);
    for (const auto& op : ops) {
      INFO(operator_name(op));
      const auto lhs = apply(op, add(scale(f, alpha), scale(h, beta)), 64);
      const auto rhs = add(scale(apply(op, f, 64), alpha), scale(apply(op, h, 64), beta));
      CHECK(max_abs_difference(lhs, rhs) <= 1e-12);
    }
    // backshift on the f(0) = 0 subspace
    const auto f0 = subtract(f, TruncatedSeries{f[0]});
    const auto h0 = subtract(h, TruncatedSeries{h[0]});
    CHECK(max_abs_difference(backshift(add(scale(f0, alpha), scale(h0, beta))),
                             add(scale(backshift(f0), alpha), scale(backshift(h0), beta))) <= 1e-12);
  }
}

TEST_CASE("operator specs round-trip through JSON") {
  const std::vector<OperatorSpec> ops = {ops::Volterra{catalog("g0prime")},
                                         ops::Averaged{TruncatedSeries{1.0, cplx(0, 2)}},
                                         ops::Cesaro{},
                                         ops::CesaroInverse{},
                                         ops::Differentiate{},
                                         ops::Integrate{},
                                         ops::MultiplyBy{catalog("pow_witness", {0.5})},
                                         ops::Shift{},
                                         ops::BackShift{}};
  const TruncatedSeries f{0.0, 1.0, -0.5, cplx(0.25, 1.0)};
  for (const auto& op : ops) {
    INFO(operator_name(op));
    const auto back = operator_from_json(operator_to_json(op));
    CHECK(operator_name(back) == operator_name(op));
    CHECK(apply(back, f, 32) == apply(op, f, 32));
  }
  CHECK_THROWS_AS(operator_from_json(nlohmann::json{{"op", "nope"}}), ParseError);
  CHECK_THROWS_AS(operator_from_json(nlohmann::json{{"op", "volterra"}}), ParseError);
}

TEST_CASE("gauss-legendre rule") {
  const auto& gl = gauss_legendre16();
  double sum = 0.0;
  for (int i = 0; i < 16; ++i) {
    sum += gl.weights[i];
    CHECK(gl.nodes[i] == doctest::Approx(-gl.nodes[15 - i]).epsilon(1e-15));
  }
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  // exact through degree 31
  for (int k = 0; k <= 31; ++k) {
    double q = 0.0;
    for (int i = 0; i < 16; ++i) q += gl.weights[i] * std::pow(gl.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    CHECK(std::abs(q - exact) <= 1e-14);
  }
}

TEST_CASE("segment quadrature") {
  const cplx z(0.3, 0.6);
  const cplx got = segment_integral([](cplx w) { return std::exp(w); }, z);
  CHECK(std::abs(got - (std::exp(z) - 1.0)) <= 1e-14);
  CHECK(segment_integral([](cplx) { return cplx(1.0); }, 0.0) == cplx{});
  QuadratureOptions strict;
  strict.max_levels = 1;
  CHECK_THROWS_AS(segment_integral([](cplx w) { return 1.0 / (1.0 - w); }, 0.999999999, strict), ConvergenceError);
}

TEST_CASE("path integral volterra") {
  CHECK(std::abs(path_integral_volterra(catalog("g0prime"), Expr::constant(1.0), 0.5) - std::numbers::ln2) <= 1e-14);
  CHECK(path_integral_volterra(catalog("g0prime"), Expr::constant(0.0), 0.5) == cplx{});
  CHECK_THROWS_AS(path_integral_volterra(Expr::constant(1.0), Expr::constant(1.0), 1.0), DomainError);
}

TEST_CASE("path integral agrees with coefficient volterra") {
  const std::vector<std::pair<Expr, Expr>> pairs = {
      {catalog("g0prime"), Expr::constant(1.0)},
      {Expr::constant(1.0), catalog("pow_witness", {1.0})},
      {Expr::product({Expr::constant(2.0), Expr::var()}), catalog("g0")},
  };
  for (const auto& [gp, f] : pairs) {
    const TruncatedSeries v = volterra(taylor(gp, 256), taylor(f, 256), 256);
    for (int i = 0; i < 40; ++i) {
      const cplx z = std::polar(0.5 * (i + 1) / 40.0, 0.7 * i);
      CHECK(std::abs(path_integral_volterra(gp, f, z) - evaluate(v, z)) <= 1e-8);
    }
  }
}

}  // TEST_SUITE
