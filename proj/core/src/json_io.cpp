#include "optdom/json_io.hpp"

#include <string>

#include "optdom/errors.hpp"

namespace optdom {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
  return j.get<double>();
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

}  // namespace

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  throw ParseError("complex values are a number or a [re, im] pair");
}

json series_to_json(const TruncatedSeries& f) {
  json re = json::array();
  json im = json::array();
  for (const cplx c : f.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return json{{"re", re}, {"im", im}};
}

TruncatedSeries series_from_json(const json& j) {
  std::vector<cplx> coeffs;
  if (j.is_object()) {
    const json& re = field(j, "re");
    const json& im = field(j, "im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size()) {
      throw ParseError("series needs \"re\" and \"im\" arrays of equal length");
    }
    for (std::size_t n = 0; n < re.size(); ++n) {
      coeffs.emplace_back(number(re[n], "coefficient"), number(im[n], "coefficient"));
    }
  } else if (j.is_array()) {
    for (const auto& c : j) coeffs.push_back(complex_from_json(c));
  } else {
    throw ParseError("series must be an object {re, im} or an array");
  }
  if (coeffs.empty()) throw ParseError("series needs at least one coefficient");
  try {
    return TruncatedSeries(std::move(coeffs));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

json expr_to_json(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const node::Const& c) { return json::array({"const", complex_to_json(c.value)}); },
          [](const node::Var&) { return json::array({"var"}); },
          [](const node::Sum& s) {
            json out = json::array({"sum"});
            for (const auto& t : s.terms) out.push_back(expr_to_json(t));
            return out;
          },
          [](const node::Product& p) {
            json out = json::array({"product"});
            for (const auto& f : p.factors) out.push_back(expr_to_json(f));
            return out;
          },
          [](const node::LinPow& p) {
            return json::array({"linpow", json{{"a", complex_to_json(p.a)}, {"rho", p.rho}}});
          },
          [](const node::LinLog& l) { return json::array({"linlog", json{{"a", complex_to_json(l.a)}}}); },
          [](const node::Recip& r) {
            return json::array(
                {"recip", expr_to_json(r.child.front()), json{{"nonvanishing", r.nonvanishing}}});
          },
      },
      e.node());
}

Expr expr_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) {
    throw ParseError("expression must be an array headed by a node name");
  }
  const std::string head = j[0].get<std::string>();
  auto children = [&j]() {
    std::vector<Expr> out;
    for (std::size_t i = 1; i < j.size(); ++i) out.push_back(expr_from_json(j[i]));
    return out;
  };
  auto arity = [&j, &head](std::size_t n) {
    if (j.size() != n + 1) throw ParseError("node '" + head + "' has the wrong number of arguments");
  };
  try {
    if (head == "const") {
      arity(1);
      return Expr::constant(complex_from_json(j[1]));
    }
    if (head == "var") {
      arity(0);
      return Expr::var();
    }
    if (head == "sum") return Expr::sum(children());
    if (head == "product") return Expr::product(children());
    if (head == "linpow") {
      arity(1);
      return Expr::linpow(complex_from_json(field(j[1], "a")), number(field(j[1], "rho"), "rho"));
    }
    if (head == "linlog") {
      arity(1);
      return Expr::linlog(complex_from_json(field(j[1], "a")));
    }
    if (head == "recip") {
      if (j.size() != 2 && j.size() != 3) throw ParseError("node 'recip' takes a child and an optional flag object");
      bool nonvanishing = false;
      if (j.size() == 3) {
        const json& flag = field(j[2], "nonvanishing");
        if (!flag.is_boolean()) throw ParseError("'nonvanishing' must be a boolean");
        nonvanishing = flag.get<bool>();
      }
      return Expr::recip(expr_from_json(j[1]), nonvanishing);
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown expression node '" + head + "'");
}

}  // namespace optdom
