#include "optdom/operators.hpp"

#include <algorithm>
#include <cmath>

#include "optdom/errors.hpp"
#include "optdom/json_io.hpp"

namespace optdom {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kBackshiftTolerance = 1e-12;

}  // namespace

TruncatedSeries volterra(const TruncatedSeries& gprime, const TruncatedSeries& f, std::size_t cap) {
  const TruncatedSeries p = cauchy_product(f, gprime, cap);
  const std::size_t degree = std::min(cap, p.degree() + 1);
  std::vector<cplx> out(degree + 1, cplx{});
  for (std::size_t n = 1; n <= degree; ++n) out[n] = p[n - 1] / static_cast<double>(n);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries averaged(const TruncatedSeries& gprime, const TruncatedSeries& f, std::size_t cap) {
  const TruncatedSeries p = cauchy_product(f, gprime, cap);
  std::vector<cplx> out(p.degree() + 1);
  for (std::size_t n = 0; n <= p.degree(); ++n) out[n] = p[n] / static_cast<double>(n + 1);
  return TruncatedSeries(std::move(out));
}

cplx averaged_value_at_zero_by_convention(const TruncatedSeries& f) { return f[0]; }

TruncatedSeries cesaro(const TruncatedSeries& f, std::size_t cap) {
  std::vector<cplx> out(cap + 1);
  cplx prefix{};
  for (std::size_t n = 0; n <= cap; ++n) {
    prefix += f.coeff(n);
    out[n] = prefix / static_cast<double>(n + 1);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries cesaro_inverse(const TruncatedSeries& f, std::size_t cap) {
  const std::size_t degree = std::min(cap, f.degree() + 1);
  std::vector<cplx> out(degree + 1);
  out[0] = f[0];
  for (std::size_t n = 1; n <= degree; ++n) {
    out[n] = static_cast<double>(n + 1) * f.coeff(n) - static_cast<double>(n) * f.coeff(n - 1);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries differentiate(const TruncatedSeries& f) {
  if (f.degree() == 0) return TruncatedSeries::zeros(0);
  std::vector<cplx> out(f.degree());
  for (std::size_t n = 0; n < f.degree(); ++n) out[n] = static_cast<double>(n + 1) * f[n + 1];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries integrate(const TruncatedSeries& f, std::size_t cap) {
  const std::size_t degree = std::min(cap, f.degree() + 1);
  std::vector<cplx> out(degree + 1, cplx{});
  for (std::size_t n = 1; n <= degree; ++n) out[n] = f[n - 1] / static_cast<double>(n);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shift(const TruncatedSeries& f, std::size_t cap) {
  const std::size_t degree = std::min(cap, f.degree() + 1);
  std::vector<cplx> out(degree + 1, cplx{});
  for (std::size_t n = 1; n <= degree; ++n) out[n] = f[n - 1];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries backshift(const TruncatedSeries& f) {
  if (std::abs(f[0]) > kBackshiftTolerance) {
    throw PreconditionError("backshift requires f(0) = 0");
  }
  if (f.degree() == 0) return TruncatedSeries::zeros(0);
  const auto c = f.coeffs();
  return TruncatedSeries(std::vector<cplx>(c.begin() + 1, c.end()));
}

TruncatedSeries multiply(const TruncatedSeries& h, const TruncatedSeries& f, std::size_t cap) {
  return cauchy_product(h, f, cap);
}

cplx path_integral_volterra(const Expr& gprime, const Expr& f, cplx z, const QuadratureOptions& options) {
  if (!(std::abs(z) < 1.0)) throw DomainError("path integral endpoint must satisfy |z| < 1");
  return segment_integral([&](cplx xi) { return eval(f, xi) * eval(gprime, xi); }, z, options);
}

TruncatedSeries to_series(const SymbolFunction& fn, std::size_t cap) {
  return std::visit(Overloaded{
                        [cap](const Expr& e) { return taylor(e, cap); },
                        [cap](const TruncatedSeries& s) { return partial_sum(s, cap); },
                    },
                    fn);
}

TruncatedSeries apply(const OperatorSpec& op, const TruncatedSeries& f, std::size_t cap) {
  return std::visit(
      Overloaded{
          [&](const ops::Volterra& v) { return volterra(to_series(v.gprime, cap), f, cap); },
          [&](const ops::Averaged& v) { return averaged(to_series(v.gprime, cap), f, cap); },
          [&](const ops::Cesaro&) { return cesaro(f, cap); },
          [&](const ops::CesaroInverse&) { return cesaro_inverse(f, cap); },
          [&](const ops::Differentiate&) { return differentiate(f); },
          [&](const ops::Integrate&) { return integrate(f, cap); },
          [&](const ops::MultiplyBy& m) { return multiply(to_series(m.h, cap), f, cap); },
          [&](const ops::Shift&) { return shift(f, cap); },
          [&](const ops::BackShift&) { return backshift(f); },
      },
      op);
}

std::string operator_name(const OperatorSpec& op) {
  return std::visit(Overloaded{
                        [](const ops::Volterra&) { return "volterra"; },
                        [](const ops::Averaged&) { return "averaged"; },
                        [](const ops::Cesaro&) { return "cesaro"; },
                        [](const ops::CesaroInverse&) { return "cesaro_inverse"; },
                        [](const ops::Differentiate&) { return "diff"; },
                        [](const ops::Integrate&) { return "integrate"; },
                        [](const ops::MultiplyBy&) { return "mult"; },
                        [](const ops::Shift&) { return "shift"; },
                        [](const ops::BackShift&) { return "backshift"; },
                    },
                    op);
}

namespace {

nlohmann::json symbol_to_json(const SymbolFunction& fn) {
  return std::visit(Overloaded{
                        [](const Expr& e) { return expr_to_json(e); },
                        [](const TruncatedSeries& s) { return series_to_json(s); },
                    },
                    fn);
}

SymbolFunction symbol_from_json(const nlohmann::json& j) {
  if (j.is_array() && !j.empty() && j[0].is_string()) return expr_from_json(j);
  return series_from_json(j);
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("operator needs field '") + key + "'");
  return j.at(key);
}

}  // namespace

nlohmann::json operator_to_json(const OperatorSpec& op) {
  nlohmann::json out{{"op", operator_name(op)}};
  std::visit(Overloaded{
                 [&](const ops::Volterra& v) { out["gprime"] = symbol_to_json(v.gprime); },
                 [&](const ops::Averaged& v) { out["gprime"] = symbol_to_json(v.gprime); },
                 [&](const ops::MultiplyBy& m) { out["h"] = symbol_to_json(m.h); },
                 [](const auto&) {},
             },
             op);
  return out;
}

OperatorSpec operator_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("op") || !j.at("op").is_string()) {
    throw ParseError("operator must be an object with a string field 'op'");
  }
  const std::string name = j.at("op").get<std::string>();
  if (name == "volterra") return ops::Volterra{symbol_from_json(require(j, "gprime"))};
  if (name == "averaged") return ops::Averaged{symbol_from_json(require(j, "gprime"))};
  if (name == "cesaro") return ops::Cesaro{};
  if (name == "cesaro_inverse") return ops::CesaroInverse{};
  if (name == "diff") return ops::Differentiate{};
  if (name == "integrate") return ops::Integrate{};
  if (name == "mult") return ops::MultiplyBy{symbol_from_json(require(j, "h"))};
  if (name == "shift") return ops::Shift{};
  if (name == "backshift") return ops::BackShift{};
  throw ParseError("unknown operator '" + name + "'");
}

}  // namespace optdom
