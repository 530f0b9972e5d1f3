#include "optdom/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "optdom/errors.hpp"

namespace optdom {

namespace {

GaussLegendre16 build_rule() {
  constexpr int n = 16;
  GaussLegendre16 rule{};
  for (int i = 0; i < n / 2; ++i) {
    // Newton iteration on P_16 from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

struct Panel {
  const std::function<cplx(cplx)>& integrand;
  cplx z;
  const QuadratureOptions& options;
  double scale = 0.0;

  // Integral of z * F(t z) over t in [a, b].
  cplx rule(double a, double b) const {
    const auto& gl = gauss_legendre16();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    cplx acc{};
    for (int i = 0; i < 16; ++i) acc += gl.weights[i] * integrand((mid + half * gl.nodes[i]) * z);
    return acc * half * z;
  }

  cplx refine(double a, double b, cplx whole, int level) {
    const double m = 0.5 * (a + b);
    const cplx left = rule(a, m);
    const cplx right = rule(m, b);
    const cplx both = left + right;
    scale = std::max(scale, std::abs(both));
    const double tol = std::max(options.abs_tol, options.rel_tol * scale);
    if (std::abs(both - whole) <= tol) return both;
    if (level >= options.max_levels) {
      throw ConvergenceError("segment quadrature did not converge within the refinement limit");
    }
    return refine(a, m, left, level + 1) + refine(m, b, right, level + 1);
  }
};

}  // namespace

const GaussLegendre16& gauss_legendre16() {
  static const GaussLegendre16 rule = build_rule();
  return rule;
}

cplx segment_integral(const std::function<cplx(cplx)>& integrand, cplx z,
                      const QuadratureOptions& options) {
  if (z == cplx{}) return {};
  Panel panel{integrand, z, options};
  const cplx whole = panel.rule(0.0, 1.0);
  panel.scale = std::abs(whole);
  return panel.refine(0.0, 1.0, whole, 1);
}

}  // namespace optdom
