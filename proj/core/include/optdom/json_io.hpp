#pragma once

#include <nlohmann/json.hpp>

#include "optdom/closed_form.hpp"
#include "optdom/series.hpp"

namespace optdom {

/// {"re": [...], "im": [...]} with equal-length arrays.
nlohmann::json series_to_json(const TruncatedSeries& f);
/// Accepts the object form, or a bare array of reals / [re, im] pairs.
/// Throws ParseError on malformed input.
TruncatedSeries series_from_json(const nlohmann::json& j);

/// S-expression form, e.g.
///   ["product", ["linpow", {"a": [1, 0], "rho": 1}], ["linpow", {"a": [-1, 0], "rho": -2}]]
/// Other heads: ["const", [re, im]], ["var"], ["sum", ...], ["linlog", {"a": [re, im]}],
/// ["recip", child, {"nonvanishing": true}].
nlohmann::json expr_to_json(const Expr& e);
Expr expr_from_json(const nlohmann::json& j);

/// [re, im] for complex values; a bare number is accepted on input.
nlohmann::json complex_to_json(cplx c);
cplx complex_from_json(const nlohmann::json& j);

}  // namespace optdom
