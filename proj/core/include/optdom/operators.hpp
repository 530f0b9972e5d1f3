#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "optdom/closed_form.hpp"
#include "optdom/quadrature.hpp"
#include "optdom/series.hpp"

namespace optdom {

// Coefficient-domain operators. Every operator that can raise the degree
// takes a truncation cap; the result never exceeds it.

/// V_g f = integral_0^z f g'. out_0 = 0, out_n = p_{n-1}/n with p = f g'.
/// Degree min(cap, deg f + deg g' + 1).
TruncatedSeries volterra(const TruncatedSeries& gprime, const TruncatedSeries& f,
                         std::size_t cap = kDefaultDegree);

/// T_g f = (1/z) V_g f. out_n = p_n/(n+1), degree min(cap, deg f + deg g').
/// The constant term is the analytic value f(0) g'(0).
TruncatedSeries averaged(const TruncatedSeries& gprime, const TruncatedSeries& f,
                         std::size_t cap = kDefaultDegree);

/// Value assigned to (T_g f)(0) by the pointwise definition, namely f(0).
/// It agrees with averaged(...)[0] exactly when g'(0) = 1 or f(0) = 0.
cplx averaged_value_at_zero_by_convention(const TruncatedSeries& f);

/// Cesaro operator: out_n = (f_0 + ... + f_n)/(n+1), degree cap.
TruncatedSeries cesaro(const TruncatedSeries& f, std::size_t cap = kDefaultDegree);

/// out_n = (n+1) f_n - n f_{n-1}; degree min(cap, deg f + 1). Left and
/// right inverse of cesaro at a common cap.
TruncatedSeries cesaro_inverse(const TruncatedSeries& f, std::size_t cap = kDefaultDegree);

/// f'. Degree max(deg f - 1, 0).
TruncatedSeries differentiate(const TruncatedSeries& f);

/// integral_0^z f. Degree min(cap, deg f + 1).
TruncatedSeries integrate(const TruncatedSeries& f, std::size_t cap = kDefaultDegree);

/// S f = z f. Degree min(cap, deg f + 1).
TruncatedSeries shift(const TruncatedSeries& f, std::size_t cap = kDefaultDegree);

/// T f = f / z, defined for f(0) = 0 (value f'(0) at the origin).
/// Throws PreconditionError when |f_0| > 1e-12.
TruncatedSeries backshift(const TruncatedSeries& f);

/// M_h f = h f.
TruncatedSeries multiply(const TruncatedSeries& h, const TruncatedSeries& f,
                         std::size_t cap = kDefaultDegree);

/// (V_g f)(z) by adaptive Gauss-Legendre quadrature along [0, z].
/// Throws DomainError for |z| >= 1, ConvergenceError on refinement failure.
cplx path_integral_volterra(const Expr& gprime, const Expr& f, cplx z,
                            const QuadratureOptions& options = {});

/// A function given either in closed form or by Taylor coefficients.
using SymbolFunction = std::variant<Expr, TruncatedSeries>;

TruncatedSeries to_series(const SymbolFunction& fn, std::size_t cap);

namespace ops {
struct Volterra {
  SymbolFunction gprime;
};
struct Averaged {
  SymbolFunction gprime;
};
struct Cesaro {};
struct CesaroInverse {};
struct Differentiate {};
struct Integrate {};
struct MultiplyBy {
  SymbolFunction h;
};
struct Shift {};
struct BackShift {};
}  // namespace ops

/// Every operator kind. Volterra and Averaged carry the derivative g' of the
/// symbol, never g itself.
using OperatorSpec = std::variant<ops::Volterra, ops::Averaged, ops::Cesaro, ops::CesaroInverse,
                                  ops::Differentiate, ops::Integrate, ops::MultiplyBy, ops::Shift,
                                  ops::BackShift>;

TruncatedSeries apply(const OperatorSpec& op, const TruncatedSeries& f,
                      std::size_t cap = kDefaultDegree);

std::string operator_name(const OperatorSpec& op);

/// Tagged union {"op": "volterra", "gprime": <expr or series>}, {"op": "cesaro"}, ...
nlohmann::json operator_to_json(const OperatorSpec& op);
OperatorSpec operator_from_json(const nlohmann::json& j);

}  // namespace optdom
