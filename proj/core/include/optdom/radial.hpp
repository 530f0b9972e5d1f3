#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "optdom/closed_form.hpp"
#include "optdom/series.hpp"

namespace optdom {

/// Anything evaluable at points of the open disc.
using PointFunction = std::function<cplx(cplx)>;

PointFunction as_function(const Expr& e);
PointFunction as_function(const TruncatedSeries& f);

/// v(r) = (1 - r)^gamma, gamma > 0.
struct PowerWeight {
  double gamma;
};

/// Continuous non-increasing radial weight with v(r) -> 0 as r -> 1.
class Weight {
 public:
  /// Throws PreconditionError unless gamma > 0.
  static Weight power(double gamma);

  double operator()(double r) const;
  /// Exponent of the power weight.
  double order() const;

 private:
  explicit Weight(std::variant<PowerWeight> kind) : kind_(kind) {}
  std::variant<PowerWeight> kind_;
};

/// Sampling lattice: coarse radii 0, 0.1, ..., 0.9 merged with the dyadic
/// tail r_k = 1 - 2^-k (k = 1..depth), and `angles` equally spaced angles
/// (or the single angle `ray`).
struct RadialGrid {
  int depth = 12;
  int angles = 720;
  std::optional<double> ray;

  /// Throws PreconditionError unless depth >= 4 and angles >= 8.
  void validate() const;
  RadialGrid with_depth(int d) const;
  RadialGrid along_ray(double theta) const;
};

struct ProfilePoint {
  double r;
  double maxmod;
  double weighted;
  /// k for the dyadic radius 1 - 2^-k, 0 for a coarse-only radius.
  int level;
};

/// Max-modulus samples ordered by strictly increasing radius.
struct RadialProfile {
  std::vector<ProfilePoint> points;

  /// The points with level > 0, in increasing order of level.
  std::vector<ProfilePoint> tail() const;
};

/// max over `angles` equally spaced angles (or just `ray`) of |f(r e^{i theta})|.
double max_modulus(const PointFunction& f, double r, int angles, std::optional<double> ray = {});

RadialProfile radial_profile(const PointFunction& f, const Weight& w, const RadialGrid& grid);

/// max over the grid of v(r) * max_modulus(f, r). A lower bound for the
/// weighted sup-norm; never decreases as the grid is refined.
double weighted_sup_estimate(const PointFunction& f, const Weight& w, const RadialGrid& grid);

/// Re-weights an existing profile: max over its radii of w(r) * maxmod,
/// restricted to dyadic levels <= max_level (coarse radii always count).
/// Lets one sampled profile serve several weights or grid depths.
double weighted_sup(const RadialProfile& p, const Weight& w, int max_level = std::numeric_limits<int>::max());

/// |e(0)| + sup (1 - |z|) |e'(z)| over the grid.
double bloch_norm_estimate(const Expr& e, const RadialGrid& grid);

struct GrowthFit {
  /// Least-squares slope of log(value) against -log(1 - r) = k log 2.
  double exponent;
  double intercept;
  /// Largest absolute deviation of log(value) from the fitted line.
  double residual;
  int window;
};

inline constexpr int kDefaultWindow = 6;

/// Fits the max-modulus column over the last `window` dyadic points.
/// Throws PreconditionError for window < 3 or too few tail points and
/// SingularityError for a non-positive sample.
GrowthFit growth_exponent(const RadialProfile& p, int window = kDefaultWindow);
/// Same fit on the weighted column.
GrowthFit weighted_growth_exponent(const RadialProfile& p, int window = kDefaultWindow);

enum class Membership { InA0, InA_NotA0, NotInA, Inconclusive };

std::string to_string(Membership m);

/// Cutoffs of the finite membership procedure.
struct ClassifyTolerances {
  /// Relative zero level for the decay test.
  double zero = 0.05;
  /// Relative half-width of the bounded-level band.
  double band = 0.2;
  /// Slope magnitude of log w_k per unit of k log 2 that counts as growth/decay.
  double slope = 0.2;
  /// Number of trailing dyadic levels examined.
  int window = kDefaultWindow;

  void validate() const;
};

struct Classification {
  Membership label;
  /// Weighted tail values w_k = (1 - r_k)^gamma maxmod(r_k) over the window.
  std::vector<ProfilePoint> tail;
  double slope;
};

/// Decides A^-gamma_0 / A^-gamma / outside from the weighted dyadic tail:
///   NotInA     slope >= tol.slope and (w_last > 10 w_first or the tail increases)
///   InA0       tail decreasing and (w_last < tol.zero * max_k w_k or slope <= -tol.slope)
///   InA_NotA0  all tail values within +-tol.band of their geometric mean
///   otherwise  Inconclusive
Classification classify_membership(const PointFunction& f, double gamma, const RadialGrid& grid,
                                   const ClassifyTolerances& tol = {});

enum class DomainVariant { Full, LittleOh };

struct DomainMembership {
  bool member;
  Classification classification;
};

/// f lies in the optimal domain of V_g into A^-gamma (Full) or A^-gamma_0
/// (LittleOh) iff f g' lies in A^-(gamma+1) (resp. its little-oh subspace).
DomainMembership odomain_membership(const Expr& gprime, const Expr& f, double gamma, DomainVariant variant,
                                    const RadialGrid& grid, const ClassifyTolerances& tol = {});

enum class NormMethod { PathIntegral, Proxy };

/// PathIntegral: weighted sup of |V_g f| computed by quadrature.
/// Proxy: weighted sup of |f g'| at order gamma + 1 (equivalent up to constants).
double odomain_norm_estimate(const Expr& gprime, const Expr& f, double gamma, const RadialGrid& grid,
                             NormMethod method);

}  // namespace optdom
