#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "optdom/series.hpp"

namespace optdom {

class Expr;

/// Node kinds of the closed-form algebra. Every LinPow/LinLog factor has
/// |a| <= 1, so 1 - a z stays off the principal branch cut on the disc.
namespace node {

struct Const {
  cplx value;
};
/// The identity function z.
struct Var {};
struct Sum {
  std::vector<Expr> terms;
};
struct Product {
  std::vector<Expr> factors;
};
/// (1 - a z)^rho, principal branch.
struct LinPow {
  cplx a;
  double rho;
};
/// -Log(1 - a z), principal branch.
struct LinLog {
  cplx a;
};
/// 1 / child. Only evaluable when `nonvanishing` certifies the child is
/// zero-free on the disc.
struct Recip {
  std::vector<Expr> child;  // exactly one element
  bool nonvanishing;
};

}  // namespace node

using Node =
    std::variant<node::Const, node::Var, node::Sum, node::Product, node::LinPow, node::LinLog, node::Recip>;

/// Immutable closed-form analytic expression on the unit disc. Copies share
/// the underlying tree.
class Expr {
 public:
  /// The constant 0.
  Expr();

  static Expr constant(cplx c);
  static Expr var();
  /// Flattens nested sums and drops zero terms; a single term is returned as is.
  static Expr sum(std::vector<Expr> terms);
  /// Flattens nested products, folds constant factors and drops unit ones.
  static Expr product(std::vector<Expr> factors);
  /// Throws PreconditionError when |a| > 1 or rho is not finite.
  static Expr linpow(cplx a, double rho);
  static Expr linlog(cplx a);
  static Expr recip(Expr child, bool nonvanishing);

  const Node& node() const { return *node_; }

  /// Structural equality (exact parameter comparison).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(Node n);
  std::shared_ptr<const Node> node_;
};

/// Pointwise value with principal branches. Throws DomainError for |z| >= 1,
/// SingularityError when a reciprocal's argument has modulus below 1e-300 and
/// PreconditionError for an uncertified reciprocal.
cplx eval(const Expr& e, cplx z);

/// Symbolic derivative, closed over the node set.
Expr derivative(const Expr& e);

/// Taylor coefficients up to degree n (result degree is exactly n).
/// Reciprocals are expanded by power-series long division.
TruncatedSeries taylor(const Expr& e, std::size_t n);

/// Named witness and symbol functions. `params` are interpreted per name:
///   g0                       -Log(1-z)
///   g0prime                  1/(1-z)
///   z                        z
///   const(c)                 c
///   monomial(n)              z^n
///   pow_witness(alpha)       (1-z)^(-alpha)
///   ray_pow(alpha, w)        (1-conj(w) z)^(-alpha)
///   e1_witness(gamma, w)     (1-z)(1-conj(w) z)^(-(gamma+1)), w defaults to -1
///   e1_fgprime(gamma, w)     (1-conj(w) z)^(-(gamma+1)), w defaults to -1
///   propJ_witness(gamma)     (1-z)(1+z)^(-(gamma+1/2))
///   gu_prime(u)              1/(1 - conj(u)/|u| z)
/// Throws ParseError for an unknown name or a wrong parameter count.
Expr catalog(std::string_view name, const std::vector<cplx>& params = {});

/// Names accepted by catalog().
const std::vector<std::string>& catalog_names();

/// Short human-readable rendering, e.g. "(1-(1)z)^(-1)".
std::string to_string(const Expr& e);

}  // namespace optdom
