#include "optdom/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "optdom/errors.hpp"
#include "optdom/operators.hpp"

namespace optdom {

PointFunction as_function(const Expr& e) {
  return [e](cplx z) { return eval(e, z); };
}

PointFunction as_function(const TruncatedSeries& f) {
  return [f](cplx z) { return evaluate(f, z); };
}

Weight Weight::power(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw PreconditionError("power weight needs gamma > 0");
  return Weight(PowerWeight{gamma});
}

double Weight::operator()(double r) const {
  return std::pow(1.0 - r, std::get<PowerWeight>(kind_).gamma);
}

double Weight::order() const { return std::get<PowerWeight>(kind_).gamma; }

void RadialGrid::validate() const {
  if (depth < 4) throw PreconditionError("grid depth must be at least 4");
  if (angles < 8) throw PreconditionError("grid needs at least 8 angles");
  if (ray && !std::isfinite(*ray)) throw PreconditionError("ray angle must be finite");
}

RadialGrid RadialGrid::with_depth(int d) const {
  RadialGrid g = *this;
  g.depth = d;
  return g;
}

RadialGrid RadialGrid::along_ray(double theta) const {
  RadialGrid g = *this;
  g.ray = theta;
  return g;
}

std::vector<ProfilePoint> RadialProfile::tail() const {
  std::vector<ProfilePoint> out;
  for (const auto& p : points) {
    if (p.level > 0) out.push_back(p);
  }
  return out;
}

namespace {

struct Radius {
  double r;
  int level;
};

std::vector<Radius> grid_radii(const RadialGrid& grid) {
  std::vector<Radius> radii;
  for (int i = 0; i < 10; ++i) radii.push_back({i / 10.0, 0});
  for (int k = 1; k <= grid.depth; ++k) radii.push_back({1.0 - std::ldexp(1.0, -k), k});
  std::sort(radii.begin(), radii.end(), [](const Radius& a, const Radius& b) {
    return a.r < b.r || (a.r == b.r && a.level > b.level);
  });
  // 0.5 appears in both families; keep the dyadic label
  radii.erase(std::unique(radii.begin(), radii.end(), [](const Radius& a, const Radius& b) { return a.r == b.r; }),
              radii.end());
  return radii;
}

struct LineFit {
  double slope;
  double intercept;
  double residual;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double residual = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    residual = std::max(residual, std::abs(y[i] - (intercept + slope * x[i])));
  }
  return {slope, intercept, residual};
}

template <class Column>
GrowthFit fit_tail(const RadialProfile& p, int window, Column column) {
  if (window < 3) throw PreconditionError("growth fit needs a window of at least 3 points");
  const auto tail = p.tail();
  if (static_cast<int>(tail.size()) < window) {
    throw PreconditionError("profile has fewer dyadic points than the fit window");
  }
  std::vector<double> x, y;
  for (auto it = tail.end() - window; it != tail.end(); ++it) {
    const double v = column(*it);
    if (!(v > 0.0)) throw SingularityError("growth fit needs strictly positive profile values");
    x.push_back(it->level * std::numbers::ln2);
    y.push_back(std::log(v));
  }
  const LineFit fit = least_squares(x, y);
  return {fit.slope, fit.intercept, fit.residual, window};
}

}  // namespace

double max_modulus(const PointFunction& f, double r, int angles, std::optional<double> ray) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
  if (ray) return std::abs(f(std::polar(r, *ray)));
  if (r == 0.0) return std::abs(f(cplx{}));
  double best = 0.0;
  for (int j = 0; j < angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / angles;
    best = std::max(best, std::abs(f(std::polar(r, theta))));
  }
  return best;
}

RadialProfile radial_profile(const PointFunction& f, const Weight& w, const RadialGrid& grid) {
  grid.validate();
  RadialProfile profile;
  for (const auto& [r, level] : grid_radii(grid)) {
    const double m = max_modulus(f, r, grid.angles, grid.ray);
    if (!std::isfinite(m)) throw SingularityError("non-finite function value on the sampling grid");
    profile.points.push_back({r, m, w(r) * m, level});
  }
  return profile;
}

double weighted_sup_estimate(const PointFunction& f, const Weight& w, const RadialGrid& grid) {
  double best = 0.0;
  for (const auto& p : radial_profile(f, w, grid).points) best = std::max(best, p.weighted);
  return best;
}

double weighted_sup(const RadialProfile& p, const Weight& w, int max_level) {
  double best = 0.0;
  for (const auto& q : p.points) {
    if (q.level <= max_level) best = std::max(best, w(q.r) * q.maxmod);
  }
  return best;
}

double bloch_norm_estimate(const Expr& e, const RadialGrid& grid) {
  return std::abs(eval(e, 0.0)) + weighted_sup_estimate(as_function(derivative(e)), Weight::power(1.0), grid);
}

GrowthFit growth_exponent(const RadialProfile& p, int window) {
  return fit_tail(p, window, [](const ProfilePoint& q) { return q.maxmod; });
}

GrowthFit weighted_growth_exponent(const RadialProfile& p, int window) {
  return fit_tail(p, window, [](const ProfilePoint& q) { return q.weighted; });
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::InA0:
      return "InA0";
    case Membership::InA_NotA0:
      return "InA_NotA0";
    case Membership::NotInA:
      return "NotInA";
    case Membership::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

void ClassifyTolerances::validate() const {
  if (!(zero > 0.0) || !(band > 0.0 && band < 1.0) || !(slope > 0.0)) {
    throw PreconditionError("classification tolerances must be positive (band below 1)");
  }
  if (window < 3) throw PreconditionError("classification window must be at least 3");
}

Classification classify_membership(const PointFunction& f, double gamma, const RadialGrid& grid,
                                   const ClassifyTolerances& tol) {
  tol.validate();
  if (tol.window > grid.depth) throw PreconditionError("classification window exceeds the grid depth");
  const RadialProfile profile = radial_profile(f, Weight::power(gamma), grid);
  const auto all_tail = profile.tail();
  std::vector<ProfilePoint> tail(all_tail.end() - tol.window, all_tail.end());

  Classification out{Membership::Inconclusive, tail, 0.0};

  double peak = 0.0;
  for (const auto& p : all_tail) peak = std::max(peak, p.weighted);
  if (peak == 0.0) {
    out.label = Membership::InA0;
    return out;
  }
  if (std::any_of(tail.begin(), tail.end(), [](const ProfilePoint& p) { return !(p.weighted > 0.0); })) {
    return out;
  }

  out.slope = weighted_growth_exponent(profile, tol.window).exponent;

  constexpr double kMonotoneSlack = 1e-9;
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 1; i < tail.size(); ++i) {
    if (tail[i].weighted < tail[i - 1].weighted * (1.0 - kMonotoneSlack)) increasing = false;
    if (tail[i].weighted > tail[i - 1].weighted * (1.0 + kMonotoneSlack)) decreasing = false;
  }
  const double first = tail.front().weighted;
  const double last = tail.back().weighted;

  if (out.slope >= tol.slope && (last > 10.0 * first || increasing)) {
    out.label = Membership::NotInA;
    return out;
  }
  if (decreasing && (last < tol.zero * peak || out.slope <= -tol.slope)) {
    out.label = Membership::InA0;
    return out;
  }
  double log_mean = 0.0;
  for (const auto& p : tail) log_mean += std::log(p.weighted);
  const double level = std::exp(log_mean / static_cast<double>(tail.size()));
  const bool in_band = std::all_of(tail.begin(), tail.end(), [&](const ProfilePoint& p) {
    return std::abs(p.weighted - level) <= tol.band * level;
  });
  if (in_band) out.label = Membership::InA_NotA0;
  return out;
}

DomainMembership odomain_membership(const Expr& gprime, const Expr& f, double gamma, DomainVariant variant,
                                    const RadialGrid& grid, const ClassifyTolerances& tol) {
  const Expr fg = Expr::product({f, gprime});
  Classification c = classify_membership(as_function(fg), gamma + 1.0, grid, tol);
  const bool member = c.label == Membership::InA0 ||
                      (variant == DomainVariant::Full && c.label == Membership::InA_NotA0);
  return {member, std::move(c)};
}

double odomain_norm_estimate(const Expr& gprime, const Expr& f, double gamma, const RadialGrid& grid,
                             NormMethod method) {
  if (method == NormMethod::Proxy) {
    return weighted_sup_estimate(as_function(Expr::product({f, gprime})), Weight::power(gamma + 1.0), grid);
  }
  const PointFunction vf = [&](cplx z) { return path_integral_volterra(gprime, f, z); };
  return weighted_sup_estimate(vf, Weight::power(gamma), grid);
}

}  // namespace optdom
