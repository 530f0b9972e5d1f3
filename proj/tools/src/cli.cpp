#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

#include "optdom/errors.hpp"
#include "optdom/json_io.hpp"
#include "optdom/radial.hpp"

namespace optdom::cli {

namespace {

double parse_real(const std::string& text, const char* what) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last || !std::isfinite(x)) {
    throw ParseError(std::string("bad ") + what + " '" + text + "'");
  }
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

SymbolFunction function_from_json(const nlohmann::json& j) {
  if (j.is_array() && !j.empty() && j.front().is_string()) return expr_from_json(j);
  return series_from_json(j);
}

Expr symbol_derivative_expr(const Expr& g) { return derivative(g); }

SymbolFunction derivative_of(const SymbolFunction& g) {
  if (const auto* e = std::get_if<Expr>(&g)) return symbol_derivative_expr(*e);
  return differentiate(std::get<TruncatedSeries>(g));
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw ParseError("unknown format '" + s + "'");
}

std::string fixed17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string series_text(const TruncatedSeries& f) {
  bool real = true;
  for (cplx c : f.coeffs()) real = real && c.imag() == 0.0;
  std::string s = "[";
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    if (i) s += ',';
    const cplx c = f[i];
    s += real ? format_number(c.real()) : "[" + format_number(c.real()) + "," + format_number(c.imag()) + "]";
  }
  return s + "]";
}

std::string complex_text(cplx c) { return "[" + format_number(c.real()) + "," + format_number(c.imag()) + "]"; }

PointFunction point_function(const SymbolFunction& f, std::size_t cap) {
  if (const auto* e = std::get_if<Expr>(&f)) return as_function(*e);
  return as_function(to_series(f, cap));
}

Expr as_expr(const SymbolFunction& f, const char* what) {
  if (const auto* e = std::get_if<Expr>(&f)) return *e;
  // a polynomial is the finite sum of its monomials
  const auto& s = std::get<TruncatedSeries>(f);
  std::vector<Expr> terms;
  for (std::size_t k = 0; k <= s.degree(); ++k) {
    if (s[k] == cplx{}) continue;
    terms.push_back(Expr::product({Expr::constant(s[k]), catalog("monomial", {static_cast<double>(k)})}));
  }
  if (terms.empty()) return Expr::constant(0.0);
  (void)what;
  return Expr::sum(std::move(terms));
}

void print_grid(std::ostream& out, const RadialGrid& grid) {
  out << "grid: depth=" << grid.depth << " angles=" << grid.angles;
  if (grid.ray) out << " ray=" << fixed17(*grid.ray);
  out << '\n';
}

nlohmann::ordered_json grid_json(const RadialGrid& grid) {
  nlohmann::ordered_json g;
  g["depth"] = grid.depth;
  g["angles"] = grid.angles;
  if (grid.ray) g["ray"] = *grid.ray;
  return g;
}

nlohmann::ordered_json profile_json(const std::vector<ProfilePoint>& pts) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& p : pts) {
    rows.push_back({{"level", p.level}, {"r", p.r}, {"maxmod", p.maxmod}, {"weighted", p.weighted}});
  }
  return rows;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& pts) {
  out << "r,maxmod,weighted\n";
  for (const auto& p : pts) out << fixed17(p.r) << ',' << fixed17(p.maxmod) << ',' << fixed17(p.weighted) << '\n';
}

struct Space {
  enum Kind { Korenblum, Bloch, ODomain } kind;
  double gamma = 0.0;
  SymbolFunction g{};
};

Space parse_space(const std::string& spec) {
  if (spec == "bloch") return {Space::Bloch};
  if (spec.rfind("korenblum:", 0) == 0) {
    return {Space::Korenblum, parse_real(spec.substr(10), "order")};
  }
  if (spec.rfind("odomain:", 0) == 0) {
    const std::string rest = spec.substr(8);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw ParseError("odomain space needs odomain:<g>:<gamma>");
    return {Space::ODomain, parse_real(rest.substr(colon + 1), "order"), parse_function(rest.substr(0, colon))};
  }
  throw ParseError("unknown space '" + spec + "' (korenblum:<gamma>, bloch, odomain:<g>:<gamma>)");
}

void require_positive_order(double gamma) {
  if (!(gamma > 0.0)) throw ParseError("order gamma must be positive");
}

/// Settings shared by every subcommand, before merging.
struct Overrides {
  std::string config_path;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t degree = 0;
  int depth = 0;
  int angles = 0;
  int window = 0;
  int samples = 0;
  double zero_tol = 0.0;
  double band_tol = 0.0;
  double slope_tol = 0.0;
  double fit_tol = 0.0;
  double slack = 0.0;
  bool timing = false;
};

template <class T>
void take(const nlohmann::json& j, const char* key, T& dst) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config key '") + key + "': " + e.what());
  }
}

RunConfig build_config(const CLI::App& app, const Overrides& o) {
  RunConfig rc;
  SuiteConfig& s = rc.suite;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ParseError("cannot read config file '" + o.config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const nlohmann::json j = parse_json(buf.str());
    if (!j.is_object()) throw ParseError("config file must hold a JSON object");
    static const std::vector<std::string> known = {"degree",    "grid_depth", "angles",    "window", "samples",
                                                   "zero_tol",  "band_tol",   "slope_tol", "fit_tol", "slack",
                                                   "seed",      "format",     "timing"};
    for (const auto& [k, _] : j.items()) {
      if (std::find(known.begin(), known.end(), k) == known.end()) throw ParseError("unknown config key '" + k + "'");
    }
    take(j, "degree", s.degree);
    take(j, "grid_depth", s.grid.depth);
    take(j, "angles", s.grid.angles);
    take(j, "window", s.tol.window);
    take(j, "samples", s.samples);
    take(j, "zero_tol", s.tol.zero);
    take(j, "band_tol", s.tol.band);
    take(j, "slope_tol", s.tol.slope);
    take(j, "fit_tol", s.slope_tol);
    take(j, "slack", s.slack);
    take(j, "seed", s.seed);
    take(j, "timing", rc.timing);
    if (j.contains("format")) {
      std::string f;
      take(j, "format", f);
      rc.format = parse_format(f);
      rc.format_given = true;
    }
  }
  if (app.count("--degree")) s.degree = o.degree;
  if (app.count("--grid-depth")) s.grid.depth = o.depth;
  if (app.count("--angles")) s.grid.angles = o.angles;
  if (app.count("--window")) s.tol.window = o.window;
  if (app.count("--samples")) s.samples = o.samples;
  if (app.count("--zero-tol")) s.tol.zero = o.zero_tol;
  if (app.count("--band-tol")) s.tol.band = o.band_tol;
  if (app.count("--slope-tol")) s.tol.slope = o.slope_tol;
  if (app.count("--fit-tol")) s.slope_tol = o.fit_tol;
  if (app.count("--slack")) s.slack = o.slack;
  if (app.count("--seed")) s.seed = o.seed;
  if (app.count("--timing")) rc.timing = o.timing;
  if (app.count("--format")) {
    rc.format = parse_format(o.format);
    rc.format_given = true;
  }
  try {
    s.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid configuration: ") + e.what());
  }
  return rc;
}

// ---------------------------------------------------------------------------

int cmd_norm(const RunConfig& rc, const std::string& fn_spec, const std::string& space_spec,
             const std::string& method, std::ostream& out) {
  const SymbolFunction f = parse_function(fn_spec);
  const Space space = parse_space(space_spec);
  if (method != "path" && method != "proxy") throw ParseError("unknown norm method '" + method + "'");
  const auto& grid = rc.suite.grid;
  double value = 0.0;
  std::string label;
  switch (space.kind) {
    case Space::Korenblum:
      require_positive_order(space.gamma);
      value = weighted_sup_estimate(point_function(f, rc.suite.degree), Weight::power(space.gamma), grid);
      label = "korenblum gamma=" + format_number(space.gamma);
      break;
    case Space::Bloch: {
      if (const auto* e = std::get_if<Expr>(&f)) {
        value = bloch_norm_estimate(*e, grid);
      } else {
        const auto& s = std::get<TruncatedSeries>(f);
        value = std::abs(s[0]) + weighted_sup_estimate(as_function(differentiate(s)), Weight::power(1.0), grid);
      }
      label = "bloch";
      break;
    }
    case Space::ODomain: {
      require_positive_order(space.gamma);
      const Expr gprime = as_expr(derivative_of(space.g), "symbol");
      value = odomain_norm_estimate(gprime, as_expr(f, "function"), space.gamma, grid,
                                    method == "path" ? NormMethod::PathIntegral : NormMethod::Proxy);
      label = "odomain gamma=" + format_number(space.gamma) + " method=" + method;
      break;
    }
  }
  switch (rc.format) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["function"] = fn_spec;
      j["space"] = space_spec;
      j["estimate"] = value;
      j["grid"] = grid_json(grid);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "function,space,estimate,depth,angles\n"
          << '"' << fn_spec << "\",\"" << space_spec << "\"," << fixed17(value) << ',' << grid.depth << ','
          << grid.angles << '\n';
      break;
    case Format::Table:
      out << "estimate: " << fixed17(value) << '\n' << "space: " << label << '\n';
      print_grid(out, grid);
      break;
  }
  return kOk;
}

int cmd_classify(const RunConfig& rc, const std::string& fn_spec, double gamma, const std::string& variant,
                 const std::string& g_spec, std::ostream& out) {
  require_positive_order(gamma);
  if (variant != "full" && variant != "littleoh") throw ParseError("variant must be full or littleoh");
  const SymbolFunction f = parse_function(fn_spec);
  const auto& grid = rc.suite.grid;
  Classification c{};
  std::string verdict;
  if (g_spec.empty()) {
    c = classify_membership(point_function(f, rc.suite.degree), gamma, grid, rc.suite.tol);
    verdict = to_string(c.label);
  } else {
    const Expr gprime = as_expr(derivative_of(parse_function(g_spec)), "symbol");
    const DomainMembership m =
        odomain_membership(gprime, as_expr(f, "function"), gamma,
                           variant == "full" ? DomainVariant::Full : DomainVariant::LittleOh, grid, rc.suite.tol);
    c = m.classification;
    verdict = to_string(c.label) + (m.member ? " (member)" : " (non-member)");
  }
  switch (rc.format) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["function"] = fn_spec;
      j["gamma"] = gamma;
      if (!g_spec.empty()) {
        j["symbol"] = g_spec;
        j["variant"] = variant;
      }
      j["label"] = to_string(c.label);
      j["slope"] = c.slope;
      j["tail"] = profile_json(c.tail);
      j["grid"] = grid_json(grid);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      write_profile_csv(out, c.tail);
      break;
    case Format::Table:
      out << verdict << '\n' << "slope: " << fixed17(c.slope) << '\n';
      print_grid(out, grid);
      out << "level  r                    weighted\n";
      for (const auto& p : c.tail) {
        char line[96];
        std::snprintf(line, sizeof line, "%5d  %-19.17g  %.17g\n", p.level, p.r, p.weighted);
        out << line;
      }
      break;
  }
  return kOk;
}

int cmd_apply(const RunConfig& rc, const std::string& op_spec, const std::string& fn_spec, const std::string& at,
              std::ostream& out) {
  const std::size_t cap = rc.suite.degree;
  const SymbolFunction fn = parse_function(fn_spec);
  const OperatorSpec op = parse_operator(op_spec, cap);
  const TruncatedSeries f = to_series(fn, cap);
  const std::size_t keep = std::holds_alternative<TruncatedSeries>(fn) ? f.degree() : 0;
  const TruncatedSeries result = trim_trailing_zeros(apply(op, f, cap), keep);

  // T_g f(0) = f(0) g'(0) analytically; the defining formula also allows the
  // convention value f(0). Report both when they differ.
  const bool averaged_op = std::holds_alternative<ops::Averaged>(op);
  const cplx convention = averaged_value_at_zero_by_convention(f);
  const bool differs = averaged_op && convention != result[0];

  if (!at.empty()) {
    const cplx z = parse_point(at);
    const cplx value = evaluate(result, z);
    const bool at_origin = z == cplx{};
    switch (rc.format) {
      case Format::Json: {
        nlohmann::ordered_json j;
        j["op"] = operator_name(op);
        j["at"] = complex_to_json(z);
        j["value"] = complex_to_json(value);
        if (differs && at_origin) j["value_by_convention"] = complex_to_json(convention);
        out << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        out << "re,im\n" << fixed17(value.real()) << ',' << fixed17(value.imag()) << '\n';
        break;
      case Format::Table:
        out << complex_text(value) << '\n';
        if (differs && at_origin) out << "by convention f(0): " << complex_text(convention) << '\n';
        break;
    }
    return kOk;
  }
  switch (rc.format) {
    case Format::Json: {
      if (differs) {
        out << "{\"coefficients\":" << series_text(result)
            << ",\"value_at_zero_by_convention\":" << complex_text(convention) << "}\n";
      } else {
        out << series_text(result) << '\n';
      }
      break;
    }
    case Format::Csv:
      out << "n,re,im\n";
      for (std::size_t n = 0; n <= result.degree(); ++n) {
        out << n << ',' << fixed17(result[n].real()) << ',' << fixed17(result[n].imag()) << '\n';
      }
      break;
    case Format::Table:
      out << series_text(result) << '\n';
      if (differs) out << "value at 0 by convention f(0): " << complex_text(convention) << '\n';
      break;
  }
  return kOk;
}

int cmd_profile(const RunConfig& rc, const std::string& fn_spec, double gamma, const std::string& ray,
                const std::string& path, std::ostream& out) {
  require_positive_order(gamma);
  RadialGrid grid = rc.suite.grid;
  if (!ray.empty()) grid = grid.along_ray(parse_angle(ray));
  const SymbolFunction f = parse_function(fn_spec);
  const RadialProfile profile = radial_profile(point_function(f, rc.suite.degree), Weight::power(gamma), grid);

  std::ostringstream body;
  if (rc.format == Format::Json) {
    nlohmann::ordered_json j;
    j["function"] = fn_spec;
    j["gamma"] = gamma;
    j["grid"] = grid_json(grid);
    j["profile"] = profile_json(profile.points);
    body << j.dump(2) << '\n';
  } else {
    // tables and CSV coincide: one row per radius
    write_profile_csv(body, profile.points);
  }
  if (path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot write '" + path + "'");
    file << body.str();
  }
  return kOk;
}

int cmd_verify(const RunConfig& rc, std::vector<std::string> names, std::ostream& out) {
  if (std::find(names.begin(), names.end(), "all") != names.end()) {
    if (names.size() > 1) throw ParseError("'all' cannot be combined with other check names");
    names.clear();
  }
  for (const auto& n : names) {
    if (find_check(n) == nullptr) throw ParseError("unknown check '" + n + "'");
  }
  const std::vector<Verdict> verdicts = run_checks(names, rc.suite);
  switch (rc.format) {
    case Format::Json: {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& v : verdicts) j.push_back(verdict_to_json(v, rc.timing));
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "check,params,status\n";
      for (const auto& v : verdicts) {
        std::string params;
        for (const auto& [k, x] : v.params) params += (params.empty() ? "" : ";") + k + "=" + format_number(x);
        out << v.check << ',' << params << ',' << to_string(v.status) << '\n';
      }
      break;
    case Format::Table:
      out << verdict_table(verdicts, rc.timing);
      break;
  }
  return aggregate_exit_code(verdicts);
}

}  // namespace

// ---------------------------------------------------------------------------

SymbolFunction parse_function(const std::string& spec) {
  if (spec.empty()) throw ParseError("empty function spec");
  if (spec.rfind("series:", 0) == 0) return series_from_json(parse_json(spec.substr(7)));
  if (spec.rfind("expr:", 0) == 0) return expr_from_json(parse_json(spec.substr(5)));
  if (spec.front() == '[' || spec.front() == '{') return function_from_json(parse_json(spec));
  if (spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw ParseError("cannot read '" + spec.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return function_from_json(parse_json(buf.str()));
  }
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<cplx> params;
  if (colon != std::string::npos) {
    for (const auto& p : split(spec.substr(colon + 1), ',')) params.emplace_back(parse_real(p, "parameter"));
  }
  return catalog(name, params);
}

OperatorSpec parse_operator(const std::string& spec, std::size_t cap) {
  if (!spec.empty() && spec.front() == '{') return operator_from_json(parse_json(spec));
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
  const bool needs_arg = name == "volterra" || name == "averaged" || name == "mult";
  if (needs_arg == arg.empty()) {
    throw ParseError(needs_arg ? "operator '" + name + "' needs a symbol, e.g. " + name + ":g0"
                               : "operator '" + name + "' takes no symbol");
  }
  (void)cap;
  if (name == "volterra") return ops::Volterra{derivative_of(parse_function(arg))};
  if (name == "averaged") return ops::Averaged{derivative_of(parse_function(arg))};
  if (name == "mult") return ops::MultiplyBy{parse_function(arg)};
  if (name == "cesaro") return ops::Cesaro{};
  if (name == "cesaro_inverse") return ops::CesaroInverse{};
  if (name == "diff") return ops::Differentiate{};
  if (name == "integrate") return ops::Integrate{};
  if (name == "shift") return ops::Shift{};
  if (name == "backshift") return ops::BackShift{};
  throw ParseError("unknown operator '" + name + "'");
}

double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^([+-]?)(\d*\.?\d*)\*?pi(?:/(\d*\.?\d+))?$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double x = std::numbers::pi;
    if (m[2].length() > 0) x *= parse_real(m[2].str(), "angle");
    if (m[3].length() > 0) x /= parse_real(m[3].str(), "angle");
    return m[1] == "-" ? -x : x;
  }
  return parse_real(text, "angle");
}

cplx parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0], "point"), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0], "point"), parse_real(parts[1], "point")};
  throw ParseError("point must be 'x' or 'x,y'");
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volterra and Cesaro operators on Korenblum growth spaces", "optdom"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path, "JSON config file (flags override it)");
  app.add_option("--format", o.format, "Output format: json, csv or table");
  app.add_option("--seed", o.seed, "Seed for random samples");
  app.add_option("--degree", o.degree, "Truncation degree N");
  app.add_option("--grid-depth", o.depth, "Dyadic depth K of the radial grid");
  app.add_option("--angles", o.angles, "Angular samples M per circle");
  app.add_option("--window", o.window, "Dyadic levels examined by the classifier");
  app.add_option("--samples", o.samples, "Random samples for sampled checks");
  app.add_option("--zero-tol", o.zero_tol, "Classifier relative zero level");
  app.add_option("--band-tol", o.band_tol, "Classifier relative band half-width");
  app.add_option("--slope-tol", o.slope_tol, "Classifier growth/decay slope");
  app.add_option("--fit-tol", o.fit_tol, "Half-width for fitted slopes in checks");
  app.add_option("--slack", o.slack, "Multiplicative slack on sampled inequalities");
  app.add_flag("--timing", o.timing, "Include runtimes in verify output");

  std::string fn, space, method = "path", variant = "full", gspec, op, at, ray, path;
  double gamma = 0.0;
  std::vector<std::string> checks;

  auto* norm = app.add_subcommand("norm", "Estimate a norm");
  norm->add_option("--fn", fn, "Function spec")->required();
  norm->add_option("--space", space, "korenblum:<gamma>, bloch or odomain:<g>:<gamma>")->required();
  norm->add_option("--method", method, "odomain norm: path (quadrature) or proxy");

  auto* classify = app.add_subcommand("classify", "Classify growth-space membership");
  classify->add_option("--fn", fn, "Function spec")->required();
  classify->add_option("--gamma", gamma, "Order gamma")->required();
  classify->add_option("--g", gspec, "Symbol g: classify f in the optimal domain of V_g instead");
  classify->add_option("--variant", variant, "full or littleoh (with --g)");

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a function");
  apply_cmd->add_option("--op", op, "Operator spec")->required();
  apply_cmd->add_option("--fn", fn, "Function spec")->required();
  apply_cmd->add_option("--at", at, "Evaluate the result at x or x,y");

  auto* profile = app.add_subcommand("profile", "Radial max-modulus profile as CSV");
  profile->add_option("--fn", fn, "Function spec")->required();
  profile->add_option("--gamma", gamma, "Weight order gamma")->required();
  profile->add_option("--ray", ray, "Sample one ray at this angle (e.g. pi, pi/2, 0.3)");
  profile->add_option("--out", path, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("checks", checks, "Check names or 'all'")->required();
  verify->add_flag("--timing", o.timing, "Include runtimes");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  RunConfig rc;
  try {
    rc = build_config(app, o);
    if (verify->parsed() && verify->count("--timing")) rc.timing = o.timing;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  // profiles default to CSV
  if (profile->parsed() && !rc.format_given) rc.format = Format::Csv;

  try {
    if (norm->parsed()) return cmd_norm(rc, fn, space, method, out);
    if (classify->parsed()) return cmd_classify(rc, fn, gamma, variant, gspec, out);
    if (apply_cmd->parsed()) return cmd_apply(rc, op, fn, at, out);
    if (profile->parsed()) return cmd_profile(rc, fn, gamma, ray, path, out);
    return cmd_verify(rc, checks, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluation;
  }
}

}  // namespace optdom::cli
