#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "optdom/series.hpp"

namespace testing_support {

using optdom::cplx;
using optdom::TruncatedSeries;

inline bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

inline void check_coeffs(const TruncatedSeries& f, const std::vector<cplx>& want, double tol = 0.0) {
  REQUIRE(f.degree() + 1 == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    INFO("coefficient " << i);
    CHECK(std::abs(f[i] - want[i]) <= tol);
  }
}

/// Integer-coefficient polynomial, so products stay exact in double.
inline TruncatedSeries integer_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<int> deg(0, static_cast<int>(max_degree));
  std::uniform_int_distribution<int> val(-9, 9);
  std::vector<cplx> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = cplx(val(rng), val(rng));
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries random_poly(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(degree + 1);
  for (auto& x : c) x = cplx(u(rng), u(rng));
  return TruncatedSeries(std::move(c));
}

/// Maximum of a unimodal function on [a, b] by golden-section search.
inline double golden_max(const std::function<double(double)>& f, double a, double b) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 200; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace testing_support
