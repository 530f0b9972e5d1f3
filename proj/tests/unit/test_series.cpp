#include <doctest.h>

#include <random>

#include "optdom/errors.hpp"
#include "optdom/series.hpp"
#include "support.hpp"

using namespace optdom;
using testing_support::check_coeffs;

TEST_SUITE("series") {

TEST_CASE("construction") {
  CHECK(TruncatedSeries().degree() == 0);
  CHECK(TruncatedSeries()[0] == cplx{});
  CHECK(TruncatedSeries(std::vector<cplx>{}).degree() == 0);
  CHECK_THROWS_AS(TruncatedSeries({1.0, std::nan("")}), PreconditionError);
  CHECK_THROWS_AS(TruncatedSeries({cplx(0.0, INFINITY)}), PreconditionError);
  check_coeffs(TruncatedSeries::ones(3), {1, 1, 1, 1});
  check_coeffs(TruncatedSeries::monomial(2, 5.0), {0, 0, 5});
  check_coeffs(TruncatedSeries::zeros(2), {0, 0, 0});
  CHECK(TruncatedSeries{1.0, 2.0}.coeff(7) == cplx{});
}

TEST_CASE("equality pads with zeros") {
  CHECK(TruncatedSeries{1.0, 2.0} == TruncatedSeries{1.0, 2.0, 0.0});
  CHECK_FALSE(TruncatedSeries{1.0, 2.0} == TruncatedSeries{1.0, 2.0, 1e-300});
}

TEST_CASE("add") {
  check_coeffs(add({1.0, 2.0}, {0.0, 0.0, 3.0}), {1, 2, 3});
  const TruncatedSeries f{cplx(1, 2), 3.0};
  CHECK(add(f, TruncatedSeries{}) == f);
  check_coeffs(add({1.0, -1.0}, {-1.0, 1.0}), {0, 0});
  check_coeffs(subtract({1.0}, {0.0, 2.0}), {1, -2});
  check_coeffs(scale({1.0, 2.0}, cplx(0, 1)), {cplx(0, 1), cplx(0, 2)});
}

TEST_CASE("cauchy product") {
  check_coeffs(cauchy_product({1.0, 1.0}, {1.0, 1.0}, 2), {1, 2, 1});
  const TruncatedSeries f{1.0, cplx(0, 3), -2.0};
  CHECK(cauchy_product(f, {1.0}) == f);
  check_coeffs(cauchy_product(TruncatedSeries::ones(3), TruncatedSeries::ones(3), 3), {1, 2, 3, 4});
  // degree is min(cap, deg a + deg b)
  CHECK(cauchy_product({1.0, 1.0}, {1.0, 1.0}, 1).degree() == 1);
  CHECK(cauchy_product({1.0, 1.0}, {1.0, 1.0}, 10).degree() == 2);
}

TEST_CASE("cauchy product matches brute-force convolution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing_support::integer_poly(rng, 20);
    const auto b = testing_support::integer_poly(rng, 20);
    const std::size_t cap = 25;
    std::vector<cplx> want(std::min(cap, a.degree() + b.degree()) + 1, cplx{});
    for (std::size_t i = 0; i <= a.degree(); ++i) {
      for (std::size_t j = 0; j <= b.degree(); ++j) {
        if (i + j < want.size()) want[i + j] += a[i] * b[j];
      }
    }
    CHECK(cauchy_product(a, b, cap) == TruncatedSeries(want));
  }
}

TEST_CASE("cauchy product is commutative and associative on integer coefficients") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing_support::integer_poly(rng, 12);
    const auto b = testing_support::integer_poly(rng, 12);
    const auto c = testing_support::integer_poly(rng, 12);
    const std::size_t cap = 20;
    CHECK(cauchy_product(a, b, cap) == cauchy_product(b, a, cap));
    CHECK(cauchy_product(cauchy_product(a, b, cap), c, cap) == cauchy_product(a, cauchy_product(b, c, cap), cap));
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate({1.0, 2.0, 3.0}, 0.0) == cplx(1.0));
  CHECK(evaluate({0.0, 0.0, 1.0}, 0.5) == cplx(0.25));
  // geometric oracle: sum_{n<=50} 2^-n by direct summation
  double oracle = 0.0;
  for (int n = 50; n >= 0; --n) oracle += std::ldexp(1.0, -n);
  CHECK(std::abs(evaluate(TruncatedSeries::ones(50), 0.5) - 2.0) <= 1e-12);
  CHECK(std::abs(evaluate(TruncatedSeries::ones(50), 0.5) - oracle) <= 1e-15);
  CHECK_THROWS_AS(evaluate({1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate({1.0}, cplx(0.8, 0.6)), DomainError);
}

TEST_CASE("evaluation is multiplicative when the cap keeps every term") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing_support::random_poly(rng, 30);
    const auto b = testing_support::random_poly(rng, 30);
    const cplx z(u(rng), u(rng));
    CHECK(std::abs(evaluate(cauchy_product(a, b, 60), z) - evaluate(a, z) * evaluate(b, z)) <= 1e-10);
  }
}

TEST_CASE("partial sums") {
  check_coeffs(partial_sum({1.0, 2.0, 3.0}, 1), {1, 2});
  const TruncatedSeries f{1.0, 2.0, 3.0};
  CHECK(partial_sum(f, f.degree()) == f);
  check_coeffs(partial_sum({5.0}, 3), {5});
}

TEST_CASE("partial sums converge inside the tail bound") {
  std::mt19937_64 rng(14);
  const auto f = testing_support::random_poly(rng, 40);
  const cplx z = std::polar(0.6, 1.1);
  double previous = INFINITY;
  for (std::size_t m = 0; m <= 40; ++m) {
    const double err = std::abs(evaluate(partial_sum(f, m), z) - evaluate(f, z));
    const double bound = tail_bound(f, m, std::abs(z));
    CHECK(err <= bound + 1e-14);
    CHECK(bound <= previous);
    previous = bound;
  }
  CHECK(tail_bound(f, 40, 0.6) == 0.0);
}

TEST_CASE("trim trailing zeros") {
  check_coeffs(trim_trailing_zeros({1.0, 0.0, 2.0, 0.0, 0.0}), {1, 0, 2});
  check_coeffs(trim_trailing_zeros({1.0, 0.0, 0.0}, 1), {1, 0});
  check_coeffs(trim_trailing_zeros({0.0, 0.0}), {0});
  CHECK(max_abs_difference({1.0, 2.0}, {1.0}) == 2.0);
}

}  // TEST_SUITE
