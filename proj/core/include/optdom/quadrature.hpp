#pragma once

#include <functional>

#include "optdom/series.hpp"

namespace optdom {

struct QuadratureOptions {
  /// Two successive panel estimates must agree to this absolute level...
  double abs_tol = 1e-11;
  /// ...or to this fraction of the running integral magnitude, whichever is
  /// larger. Integrands near the boundary reach 1e7 and cannot be resolved
  /// to an absolute 1e-11 in double precision.
  double rel_tol = 1e-13;
  int max_levels = 20;
};

/// Integral of `integrand` along the straight segment from 0 to z, by
/// adaptive bisection of 16-point Gauss-Legendre panels. Throws
/// ConvergenceError when a panel needs more than `max_levels` bisections.
cplx segment_integral(const std::function<cplx(cplx)>& integrand, cplx z,
                      const QuadratureOptions& options = {});

/// 16-point Gauss-Legendre rule on [-1, 1]: nodes ascending, weights alike.
struct GaussLegendre16 {
  double nodes[16];
  double weights[16];
};
const GaussLegendre16& gauss_legendre16();

}  // namespace optdom
