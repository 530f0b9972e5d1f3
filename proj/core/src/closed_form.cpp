#include "optdom/closed_form.hpp"

#include <cmath>
#include <sstream>

#include "optdom/errors.hpp"

namespace optdom {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kSingularModulus = 1e-300;

void require_unit_parameter(cplx a) {
  if (!(std::abs(a) <= 1.0)) {
    throw PreconditionError("linear factor 1 - a z needs |a| <= 1");
  }
}

cplx integer_power(cplx base, int n) {
  const bool invert = n < 0;
  unsigned m = static_cast<unsigned>(invert ? -n : n);
  cplx acc{1.0};
  while (m) {
    if (m & 1u) acc *= base;
    base *= base;
    m >>= 1u;
  }
  return invert ? 1.0 / acc : acc;
}

bool is_const(const Expr& e, cplx value) {
  const auto* c = std::get_if<node::Const>(&e.node());
  return c != nullptr && c->value == value;
}

}  // namespace

Expr::Expr() : Expr(node::Const{0.0}) {}

Expr::Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

Expr Expr::constant(cplx c) { return Expr(node::Const{c}); }

Expr Expr::var() { return Expr(node::Var{}); }

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  for (auto& t : terms) {
    if (const auto* s = std::get_if<node::Sum>(&t.node())) {
      for (const auto& inner : s->terms) flat.push_back(inner);
    } else if (!is_const(t, 0.0)) {
      flat.push_back(std::move(t));
    }
  }
  if (flat.empty()) return constant(0.0);
  if (flat.size() == 1) return flat.front();
  return Expr(node::Sum{std::move(flat)});
}

Expr Expr::product(std::vector<Expr> factors) {
  cplx scalar = 1.0;
  std::vector<Expr> rest;
  auto absorb = [&](const Expr& f) {
    if (const auto* c = std::get_if<node::Const>(&f.node())) {
      scalar *= c->value;
    } else {
      rest.push_back(f);
    }
  };
  for (const auto& f : factors) {
    if (const auto* p = std::get_if<node::Product>(&f.node())) {
      for (const auto& inner : p->factors) absorb(inner);
    } else {
      absorb(f);
    }
  }
  if (scalar == cplx{0.0}) return constant(0.0);
  if (scalar != cplx{1.0}) rest.insert(rest.begin(), constant(scalar));
  if (rest.empty()) return constant(1.0);
  if (rest.size() == 1) return rest.front();
  return Expr(node::Product{std::move(rest)});
}

Expr Expr::linpow(cplx a, double rho) {
  require_unit_parameter(a);
  if (!std::isfinite(rho)) throw PreconditionError("exponent must be finite");
  return Expr(node::LinPow{a, rho});
}

Expr Expr::linlog(cplx a) {
  require_unit_parameter(a);
  return Expr(node::LinLog{a});
}

Expr Expr::recip(Expr child, bool nonvanishing) {
  return Expr(node::Recip{{std::move(child)}, nonvanishing});
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  return std::visit(
      Overloaded{
          [](const node::Const& x, const node::Const& y) { return x.value == y.value; },
          [](const node::Var&, const node::Var&) { return true; },
          [](const node::Sum& x, const node::Sum& y) { return x.terms == y.terms; },
          [](const node::Product& x, const node::Product& y) { return x.factors == y.factors; },
          [](const node::LinPow& x, const node::LinPow& y) { return x.a == y.a && x.rho == y.rho; },
          [](const node::LinLog& x, const node::LinLog& y) { return x.a == y.a; },
          [](const node::Recip& x, const node::Recip& y) {
            return x.nonvanishing == y.nonvanishing && x.child == y.child;
          },
          [](const auto&, const auto&) { return false; },
      },
      a.node(), b.node());
}

namespace {

cplx eval_unchecked(const Expr& e, cplx z) {
  return std::visit(
      Overloaded{
          [](const node::Const& c) { return c.value; },
          [z](const node::Var&) { return z; },
          [z](const node::Sum& s) {
            cplx acc{};
            for (const auto& t : s.terms) acc += eval_unchecked(t, z);
            return acc;
          },
          [z](const node::Product& p) {
            cplx acc{1.0};
            for (const auto& f : p.factors) acc *= eval_unchecked(f, z);
            return acc;
          },
          [z](const node::LinPow& p) {
            const cplx base = 1.0 - p.a * z;
            if (p.rho == 0.0) return cplx{1.0};
            if (p.rho == std::round(p.rho) && std::abs(p.rho) <= 64.0) {
              // integer powers by repeated multiplication keep full precision
              return integer_power(base, static_cast<int>(p.rho));
            }
            return std::exp(p.rho * std::log(base));
          },
          [z](const node::LinLog& l) { return -std::log(1.0 - l.a * z); },
          [z](const node::Recip& r) {
            if (!r.nonvanishing) {
              throw PreconditionError("reciprocal of an expression not certified zero-free");
            }
            const cplx d = eval_unchecked(r.child.front(), z);
            if (std::abs(d) < kSingularModulus) throw SingularityError("reciprocal of a vanishing value");
            return 1.0 / d;
          },
      },
      e.node());
}

}  // namespace

cplx eval(const Expr& e, cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("expression evaluation requires |z| < 1");
  return eval_unchecked(e, z);
}

Expr derivative(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const node::Const&) { return Expr::constant(0.0); },
          [](const node::Var&) { return Expr::constant(1.0); },
          [](const node::Sum& s) {
            std::vector<Expr> terms;
            for (const auto& t : s.terms) terms.push_back(derivative(t));
            return Expr::sum(std::move(terms));
          },
          [](const node::Product& p) {
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < p.factors.size(); ++i) {
              std::vector<Expr> factors = p.factors;
              factors[i] = derivative(p.factors[i]);
              terms.push_back(Expr::product(std::move(factors)));
            }
            return Expr::sum(std::move(terms));
          },
          [](const node::LinPow& p) {
            if (p.rho == 0.0 || p.a == cplx{0.0}) return Expr::constant(0.0);
            return Expr::product({Expr::constant(-p.a * p.rho), Expr::linpow(p.a, p.rho - 1.0)});
          },
          [](const node::LinLog& l) {
            if (l.a == cplx{0.0}) return Expr::constant(0.0);
            return Expr::product({Expr::constant(l.a), Expr::linpow(l.a, -1.0)});
          },
          [](const node::Recip& r) {
            const Expr inv = Expr::recip(r.child.front(), r.nonvanishing);
            return Expr::product({Expr::constant(-1.0), derivative(r.child.front()), inv, inv});
          },
      },
      e.node());
}

TruncatedSeries taylor(const Expr& e, std::size_t n) {
  return std::visit(
      Overloaded{
          [n](const node::Const& c) {
            std::vector<cplx> out(n + 1, cplx{});
            out[0] = c.value;
            return TruncatedSeries(std::move(out));
          },
          [n](const node::Var&) {
            std::vector<cplx> out(n + 1, cplx{});
            if (n >= 1) out[1] = 1.0;
            return TruncatedSeries(std::move(out));
          },
          [n](const node::Sum& s) {
            TruncatedSeries acc = TruncatedSeries::zeros(n);
            for (const auto& t : s.terms) acc = add(acc, taylor(t, n));
            return acc;
          },
          [n](const node::Product& p) {
            std::vector<cplx> one(n + 1, cplx{});
            one[0] = 1.0;
            TruncatedSeries acc(std::move(one));
            for (const auto& f : p.factors) acc = cauchy_product(acc, taylor(f, n), n);
            return acc;
          },
          [n](const node::LinPow& p) {
            // generalized binomial series: binom(rho, k) (-a)^k
            std::vector<cplx> out(n + 1, cplx{});
            out[0] = 1.0;
            for (std::size_t k = 1; k <= n; ++k) {
              const double kk = static_cast<double>(k);
              out[k] = out[k - 1] * ((p.rho - kk + 1.0) / kk) * (-p.a);
            }
            return TruncatedSeries(std::move(out));
          },
          [n](const node::LinLog& l) {
            std::vector<cplx> out(n + 1, cplx{});
            cplx power = 1.0;
            for (std::size_t k = 1; k <= n; ++k) {
              power *= l.a;
              out[k] = power / static_cast<double>(k);
            }
            return TruncatedSeries(std::move(out));
          },
          [n](const node::Recip& r) {
            const TruncatedSeries u = taylor(r.child.front(), n);
            const cplx u0 = u[0];
            if (std::abs(u0) < kSingularModulus) {
              throw SingularityError("power-series division by a series with vanishing constant term");
            }
            std::vector<cplx> q(n + 1, cplx{});
            q[0] = 1.0 / u0;
            for (std::size_t k = 1; k <= n; ++k) {
              cplx acc{};
              for (std::size_t j = 1; j <= k; ++j) acc += u[j] * q[k - j];
              q[k] = -acc / u0;
            }
            return TruncatedSeries(std::move(q));
          },
      },
      e.node());
}

namespace {

void require_params(std::string_view name, const std::vector<cplx>& params, std::size_t lo,
                    std::size_t hi) {
  if (params.size() < lo || params.size() > hi) {
    std::ostringstream msg;
    msg << "catalog entry '" << name << "' takes " << lo;
    if (hi != lo) msg << ".." << hi;
    msg << " parameter(s), got " << params.size();
    throw ParseError(msg.str());
  }
}

double real_param(std::string_view name, cplx p) {
  if (p.imag() != 0.0) {
    throw ParseError("catalog entry '" + std::string(name) + "' needs a real parameter");
  }
  return p.real();
}

Expr z_power(std::size_t n) {
  if (n == 0) return Expr::constant(1.0);
  if (n == 1) return Expr::var();
  return Expr::product(std::vector<Expr>(n, Expr::var()));
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "g0",         "g0prime",    "z",          "const",         "monomial", "pow_witness",
      "ray_pow",    "e1_witness", "e1_fgprime", "propJ_witness", "gu_prime",
  };
  return names;
}

Expr catalog(std::string_view name, const std::vector<cplx>& params) {
  if (name == "g0") {
    require_params(name, params, 0, 0);
    return Expr::linlog(1.0);
  }
  if (name == "g0prime") {
    require_params(name, params, 0, 0);
    return Expr::linpow(1.0, -1.0);
  }
  if (name == "z") {
    require_params(name, params, 0, 0);
    return Expr::var();
  }
  if (name == "const") {
    require_params(name, params, 1, 1);
    return Expr::constant(params[0]);
  }
  if (name == "monomial") {
    require_params(name, params, 1, 1);
    const double n = real_param(name, params[0]);
    if (n < 0 || n != std::floor(n)) throw ParseError("monomial degree must be a non-negative integer");
    return z_power(static_cast<std::size_t>(n));
  }
  if (name == "pow_witness") {
    require_params(name, params, 1, 1);
    return Expr::linpow(1.0, -real_param(name, params[0]));
  }
  if (name == "ray_pow") {
    require_params(name, params, 2, 2);
    return Expr::linpow(std::conj(params[1]), -real_param(name, params[0]));
  }
  if (name == "e1_witness" || name == "e1_fgprime") {
    require_params(name, params, 1, 2);
    const double gamma = real_param(name, params[0]);
    const cplx w = params.size() == 2 ? params[1] : cplx{-1.0};
    if (std::abs(std::abs(w) - 1.0) > 1e-12) throw ParseError("witness direction w must satisfy |w| = 1");
    const Expr fgprime = Expr::linpow(std::conj(w), -(gamma + 1.0));
    if (name == "e1_fgprime") return fgprime;
    // f = 1 / (g0'(z) (1 - conj(w) z)^(gamma+1)) with 1/g0' = 1 - z
    return Expr::product({Expr::linpow(1.0, 1.0), fgprime});
  }
  if (name == "propJ_witness") {
    require_params(name, params, 1, 1);
    const double gamma = real_param(name, params[0]);
    return Expr::product({Expr::linpow(1.0, 1.0), Expr::linpow(-1.0, -(gamma + 0.5))});
  }
  if (name == "gu_prime") {
    require_params(name, params, 1, 1);
    if (std::abs(params[0]) == 0.0) throw ParseError("gu_prime needs u != 0");
    return Expr::linpow(std::conj(params[0]) / std::abs(params[0]), -1.0);
  }
  throw ParseError("unknown catalog entry '" + std::string(name) + "'");
}

namespace {

void render(std::ostream& os, const Expr& e) {
  auto put_c = [&os](cplx c) {
    if (c.imag() == 0.0) {
      os << c.real();
    } else {
      os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
  };
  std::visit(Overloaded{
                 [&](const node::Const& c) { put_c(c.value); },
                 [&](const node::Var&) { os << 'z'; },
                 [&](const node::Sum& s) {
                   os << '(';
                   for (std::size_t i = 0; i < s.terms.size(); ++i) {
                     if (i) os << " + ";
                     render(os, s.terms[i]);
                   }
                   os << ')';
                 },
                 [&](const node::Product& p) {
                   for (std::size_t i = 0; i < p.factors.size(); ++i) {
                     if (i) os << '*';
                     render(os, p.factors[i]);
                   }
                 },
                 [&](const node::LinPow& p) {
                   os << "(1-";
                   put_c(p.a);
                   os << "z)^(" << p.rho << ')';
                 },
                 [&](const node::LinLog& l) {
                   os << "-Log(1-";
                   put_c(l.a);
                   os << "z)";
                 },
                 [&](const node::Recip& r) {
                   os << "1/(";
                   render(os, r.child.front());
                   os << ')';
                 },
             },
             e.node());
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  os.precision(6);
  render(os, e);
  return os.str();
}

}  // namespace optdom
