#include "optdom/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "optdom/closed_form.hpp"
#include "optdom/errors.hpp"
#include "optdom/operators.hpp"

namespace optdom {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "Pass";
    case Status::Fail:
      return "Fail";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "Fail";
}

void SuiteConfig::validate() const {
  if (degree < 8) throw PreconditionError("truncation degree must be at least 8");
  grid.validate();
  tol.validate();
  if (tol.window > grid.depth) throw PreconditionError("classification window exceeds the grid depth");
  if (!(slack > 0.0) || !(slope_tol > 0.0)) throw PreconditionError("tolerances must be positive");
  if (samples < 1) throw PreconditionError("sample count must be positive");
}

double PolynomialSampler::uniform_pm1() {
  // 53 random bits mapped to [-1, 1); avoids implementation-defined distributions
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

TruncatedSeries PolynomialSampler::next(std::size_t max_degree) {
  return next_exact(static_cast<std::size_t>(rng_() % (max_degree + 1)));
}

TruncatedSeries PolynomialSampler::next_exact(std::size_t degree) {
  std::vector<cplx> coeffs(degree + 1);
  for (auto& c : coeffs) {
    const double re = uniform_pm1();
    c = cplx{re, uniform_pm1()};
  }
  return TruncatedSeries(std::move(coeffs));
}

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kUnitSupTol = 1.001;
constexpr std::size_t kSampleDegree = 64;

// Per-check offsets keep the random streams of different checks apart.
enum SeedOffset : std::uint64_t {
  kSeedCesaro = 101,
  kSeedJ = 202,
  kSeedMult = 303,
  kSeedBounded = 404,
  kSeedPugu = 505,
};

class Assertions {
 public:
  explicit Assertions(Verdict& v) : v_(v) {}

  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      v_.notes.push_back("failed: " + what);
    }
    return ok;
  }

  /// Classifier outcome check: Inconclusive labels make the verdict
  /// Inconclusive instead of failing it.
  bool expect_label(Membership got, std::initializer_list<Membership> wanted, const std::string& what) {
    if (got == Membership::Inconclusive) {
      inconclusive_ = true;
      v_.notes.push_back("inconclusive: " + what);
      return false;
    }
    const bool ok = std::find(wanted.begin(), wanted.end(), got) != wanted.end();
    return expect(ok, what + " (got " + to_string(got) + ")");
  }

  Status status() const {
    if (failed_) return Status::Fail;
    if (inconclusive_) return Status::Inconclusive;
    return Status::Pass;
  }

 private:
  Verdict& v_;
  bool failed_ = false;
  bool inconclusive_ = false;
};

Verdict start(std::string check, NamedValues params) {
  Verdict v;
  v.check = std::move(check);
  v.params = std::move(params);
  return v;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw PreconditionError(std::string(what) + " must be positive");
}

RadialProfile modulus_profile(const PointFunction& f, const RadialGrid& grid) {
  return radial_profile(f, Weight::power(1.0), grid);
}

bool is_zero(const TruncatedSeries& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](cplx c) { return c == cplx{}; });
}

// (n+1)(1-z)z^n
TruncatedSeries cesaro_preimage(std::size_t n) {
  std::vector<cplx> c(n + 2, cplx{});
  c[n] = static_cast<double>(n + 1);
  c[n + 1] = -static_cast<double>(n + 1);
  return TruncatedSeries(std::move(c));
}

Expr g0_prime() { return catalog("g0prime"); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

Verdict check_cesaro_inverse(int max_n, const SuiteConfig& cfg) {
  if (max_n < 1) throw PreconditionError("check_cesaro_inverse needs maxN >= 1");
  Verdict v = start("check_cesaro_inverse", {{"maxN", max_n}});
  Assertions a(v);
  const std::size_t cap = std::max<std::size_t>(kSampleDegree, static_cast<std::size_t>(max_n) + 1);

  double forward = 0.0;
  double inverse = 0.0;
  for (int n = 0; n <= max_n; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    forward = std::max(forward, max_abs_difference(cesaro(cesaro_preimage(nn), cap), TruncatedSeries::monomial(nn)));
    inverse = std::max(inverse, max_abs_difference(cesaro_inverse(TruncatedSeries::monomial(nn), cap),
                                                   cesaro_preimage(nn)));
  }
  PolynomialSampler sampler(cfg.seed + kSeedCesaro);
  double roundtrip = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const TruncatedSeries f = sampler.next_exact(kSampleDegree);
    roundtrip = std::max(roundtrip, max_abs_difference(cesaro_inverse(cesaro(f, kSampleDegree), kSampleDegree), f));
    roundtrip = std::max(roundtrip, max_abs_difference(cesaro(cesaro_inverse(f, kSampleDegree), kSampleDegree), f));
  }
  v.stats = {{"max_error_C_of_preimage", forward},
             {"max_error_Cinv_of_monomial", inverse},
             {"max_error_roundtrip", roundtrip},
             {"random_samples", cfg.samples},
             {"degree", static_cast<double>(cap)}};
  v.tolerances = {{"abs", kExactTol}};
  v.witnesses = {"(n+1)(1-z)z^n, n=0..maxN", "random polynomials of degree 64"};
  a.expect(forward <= kExactTol, "C((n+1)(1-z)z^n) = z^n");
  a.expect(inverse <= kExactTol, "C^-1(z^n) = (n+1)(1-z)z^n");
  a.expect(roundtrip <= kExactTol, "C^-1 C = C C^-1 = id on random polynomials");
  v.status = a.status();
  return v;
}

Verdict check_shift_identities(int samples, std::uint64_t seed, const SuiteConfig& cfg) {
  Verdict v = start("check_shift_identities", {{"samples", samples}, {"seed", static_cast<double>(seed)}});
  Assertions a(v);
  const std::size_t cap = std::max<std::size_t>(cfg.degree, 2 * kSampleDegree + 2);
  PolynomialSampler sampler(seed);
  double st = 0.0, ts = 0.0, v_st = 0.0, t_tv = 0.0;
  for (int i = 0; i < samples; ++i) {
    const TruncatedSeries f = sampler.next(kSampleDegree);
    TruncatedSeries gprime;
    switch (i % 3) {
      case 0:
        gprime = TruncatedSeries::ones(kSampleDegree);
        break;
      case 1:
        gprime = TruncatedSeries{1.0};
        break;
      default:
        gprime = sampler.next_exact(16);
        break;
    }
    const TruncatedSeries h = subtract(f, TruncatedSeries{f[0]});
    st = std::max(st, max_abs_difference(shift(backshift(h), cap), h));
    ts = std::max(ts, max_abs_difference(backshift(shift(f, cap)), f));
    v_st = std::max(v_st, max_abs_difference(volterra(gprime, f, cap), shift(averaged(gprime, f, cap), cap)));
    t_tv = std::max(t_tv, max_abs_difference(averaged(gprime, f, cap), backshift(volterra(gprime, f, cap))));
  }
  v.stats = {{"max_error_ST", st}, {"max_error_TS", ts}, {"max_error_V_eq_S_Tg", v_st},
             {"max_error_Tg_eq_T_V", t_tv}, {"samples", samples}};
  v.tolerances = {{"abs", kExactTol}};
  v.witnesses = {"random polynomials of degree <= 64", "g' in {all-ones, 1, random degree 16}"};
  a.expect(st <= kExactTol, "S T h = h for h(0) = 0");
  a.expect(ts <= kExactTol, "T S f = f");
  a.expect(v_st <= kExactTol, "V_g = S T_g");
  a.expect(t_tv <= kExactTol, "T_g = T V_g");
  v.status = a.status();
  return v;
}

Verdict check_j_norm_bound(const std::vector<double>& gammas, int samples, std::uint64_t seed,
                           const SuiteConfig& cfg) {
  for (double g : gammas) require_positive(g, "gamma");
  Verdict v = start("check_j_norm_bound", {{"samples", samples}, {"seed", static_cast<double>(seed)}});
  for (double g : gammas) v.params.emplace_back("gamma", g);
  Assertions a(v);
  PolynomialSampler sampler(seed);
  int violations = 0;
  double worst = 0.0;
  int used = 0;
  for (int i = 0; i < samples; ++i) {
    const TruncatedSeries f = sampler.next(kSampleDegree);
    if (is_zero(f)) continue;
    ++used;
    const RadialProfile pf = modulus_profile(as_function(f), cfg.grid);
    const RadialProfile pj = modulus_profile(as_function(integrate(f, kSampleDegree + 1)), cfg.grid);
    for (double g : gammas) {
      const double lhs = g * weighted_sup(pj, Weight::power(g));
      const double rhs = weighted_sup(pf, Weight::power(g + 1.0));
      worst = std::max(worst, lhs / rhs);
      if (lhs > cfg.slack * rhs) ++violations;
    }
  }
  v.stats = {{"violations", violations}, {"max_ratio", worst}, {"samples_used", used}};
  v.tolerances = {{"slack", cfg.slack}};
  v.witnesses = {"random polynomials of degree <= 64"};
  a.expect(violations == 0, "gamma ||Jf||_-gamma <= slack ||f||_-(gamma+1)");
  v.status = a.status();
  return v;
}

Verdict check_example_E1(double gamma, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  Verdict v = start("check_example_E1", {{"gamma", gamma}});
  Assertions a(v);
  const Expr f = catalog("e1_witness", {gamma, -1.0});
  const Expr fg = Expr::product({f, g0_prime()});
  const double sup_fg = weighted_sup_estimate(as_function(fg), Weight::power(gamma + 1.0), cfg.grid);
  const RadialProfile ray = radial_profile(as_function(f), Weight::power(gamma), cfg.grid.along_ray(std::numbers::pi));
  const GrowthFit fit = weighted_growth_exponent(ray, cfg.tol.window);
  v.stats = {{"sup_weighted_fgprime", sup_fg}, {"ray_slope", fit.exponent}, {"ray_fit_residual", fit.residual}};
  v.tolerances = {{"sup_bound", kUnitSupTol}, {"slope_target", 1.0}, {"slope_tol", cfg.slope_tol}};
  v.witnesses = {"e1_witness(" + fmt(gamma) + ", w=-1) = (1-z)(1+z)^-(gamma+1)", "g = g0"};
  a.expect(sup_fg <= kUnitSupTol, "f g0' in A^-(gamma+1), so f in [V_g0, A^-gamma]");
  a.expect(std::abs(fit.exponent - 1.0) <= cfg.slope_tol, "ray profile of f at theta=pi diverges with slope 1");
  v.status = a.status();
  return v;
}

Verdict e1_littleoh_diagnostic(double gamma, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  Verdict v = start("e1_littleoh_diagnostic", {{"gamma", gamma}});
  const Expr f0 = Expr::product({Expr::linpow(1.0, 0.5), catalog("e1_witness", {gamma, -1.0})});
  const Expr fg = Expr::product({f0, g0_prime()});
  const RadialProfile ray =
      radial_profile(as_function(fg), Weight::power(gamma + 1.0), cfg.grid.along_ray(std::numbers::pi));
  const GrowthFit fit = weighted_growth_exponent(ray, cfg.tol.window);
  v.stats = {{"last_weighted", ray.points.back().weighted}, {"ray_slope", fit.exponent}};
  v.witnesses = {"(1-z)^(1/2) e1_witness(" + fmt(gamma) + ", w=-1)", "g = g0"};
  v.notes = {"weighted order-(gamma+1) profile of f0 g0' along theta=pi; reported only"};
  v.status = Status::Inconclusive;
  return v;
}

Verdict check_prop_I(double gamma, double beta, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  if (!(beta > gamma)) throw PreconditionError("check_prop_I needs beta > gamma");
  Verdict v = start("check_prop_I", {{"gamma", gamma}, {"beta", beta}});
  Assertions a(v);
  const Expr f = catalog("pow_witness", {beta});
  const Classification own = classify_membership(as_function(f), beta, cfg.grid, cfg.tol);
  const DomainMembership dom = odomain_membership(g0_prime(), f, gamma, DomainVariant::Full, cfg.grid, cfg.tol);
  v.stats = {{"slope_f_order_beta", own.slope}, {"slope_fg0prime_order_gamma+1", dom.classification.slope}};
  v.witnesses = {"pow_witness(" + fmt(beta) + ")", "g = g0"};
  a.expect(own.label != Membership::NotInA, "f in A^-beta (got " + to_string(own.label) + ")");
  a.expect_label(dom.classification.label, {Membership::NotInA}, "f not in [C, A^-gamma]");
  v.status = a.status();
  return v;
}

Verdict check_prop_J(double gamma, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  Verdict v = start("check_prop_J", {{"gamma", gamma}});
  Assertions a(v);
  const Expr f1 = catalog("pow_witness", {gamma});
  const Classification f1_own = classify_membership(as_function(f1), gamma, cfg.grid, cfg.tol);
  const DomainMembership f1_dom = odomain_membership(g0_prime(), f1, gamma, DomainVariant::LittleOh, cfg.grid, cfg.tol);

  const Expr f2 = catalog("propJ_witness", {gamma});
  const DomainMembership f2_dom = odomain_membership(g0_prime(), f2, gamma, DomainVariant::LittleOh, cfg.grid, cfg.tol);
  const RadialProfile ray = radial_profile(as_function(f2), Weight::power(gamma), cfg.grid.along_ray(std::numbers::pi));
  const GrowthFit fit = weighted_growth_exponent(ray, cfg.tol.window);

  v.stats = {{"f1_slope", f1_own.slope},
             {"f1_g0prime_slope", f1_dom.classification.slope},
             {"f2_g0prime_slope", f2_dom.classification.slope},
             {"f2_ray_slope", fit.exponent}};
  v.tolerances = {{"ray_slope_target", 0.5}, {"slope_tol", cfg.slope_tol}};
  v.witnesses = {"pow_witness(" + fmt(gamma) + ")", "propJ_witness(" + fmt(gamma) + ") = (1-z)(1+z)^-(gamma+1/2)",
                 "g = g0"};
  a.expect_label(f1_own.label, {Membership::InA_NotA0}, "f1 in A^-gamma");
  a.expect_label(f1_dom.classification.label, {Membership::InA_NotA0}, "f1 g0' in A^-(gamma+1) but not little-oh");
  a.expect_label(f2_dom.classification.label, {Membership::InA0}, "f2 in [C, A0^-gamma]");
  a.expect(std::abs(fit.exponent - 0.5) <= cfg.slope_tol, "f2 ray profile at theta=pi diverges with slope 1/2");
  v.status = a.status();
  return v;
}

Verdict check_inclusion_proper(double gamma, double beta, double eps, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  if (!(beta > gamma)) throw PreconditionError("check_inclusion_proper needs gamma < beta");
  if (!(eps > 0.0 && eps < beta - gamma)) throw PreconditionError("check_inclusion_proper needs 0 < eps < beta - gamma");
  Verdict v = start("check_inclusion_proper", {{"gamma", gamma}, {"beta", beta}, {"eps", eps}});
  Assertions a(v);
  const Expr one = Expr::constant(1.0);
  const Expr f = catalog("pow_witness", {gamma + 1.0 + eps});
  const DomainMembership in_beta = odomain_membership(one, f, beta, DomainVariant::Full, cfg.grid, cfg.tol);
  const DomainMembership in_gamma = odomain_membership(one, f, gamma, DomainVariant::Full, cfg.grid, cfg.tol);
  v.stats = {{"slope_order_beta+1", in_beta.classification.slope},
             {"slope_order_gamma+1", in_gamma.classification.slope}};
  v.witnesses = {"pow_witness(" + fmt(gamma + 1.0 + eps) + ")", "g = z"};
  a.expect_label(in_beta.classification.label, {Membership::InA0, Membership::InA_NotA0}, "f in [V_z, A^-beta]");
  a.expect_label(in_gamma.classification.label, {Membership::NotInA}, "f not in [V_z, A^-gamma]");
  v.status = a.status();
  return v;
}

Verdict check_multiplier_PH(double gamma, double delta, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  if (!(delta > gamma)) throw PreconditionError("check_multiplier_PH needs gamma < delta");
  Verdict v = start("check_multiplier_PH", {{"gamma", gamma}, {"delta", delta}});
  Assertions a(v);
  const Expr f = catalog("pow_witness", {gamma});

  const Expr h_pos = catalog("pow_witness", {delta - gamma});
  const double sup_pos =
      weighted_sup_estimate(as_function(Expr::product({h_pos, f})), Weight::power(delta), cfg.grid);

  const Expr h_neg = catalog("pow_witness", {delta - gamma + 0.25});
  const GrowthFit neg = growth_exponent(modulus_profile(as_function(Expr::product({h_neg, f})), cfg.grid), cfg.tol.window);

  v.stats = {{"sup_hf_order_delta", sup_pos}, {"neg_growth_exponent", neg.exponent}};
  v.tolerances = {{"sup_bound", kUnitSupTol}, {"exponent_tol", cfg.slope_tol}};
  v.witnesses = {"h = pow_witness(" + fmt(delta - gamma) + ")", "h = pow_witness(" + fmt(delta - gamma + 0.25) + ")",
                 "f = pow_witness(" + fmt(gamma) + ")"};
  a.expect(sup_pos <= kUnitSupTol, "h in A^-(delta-gamma) maps f into A^-delta");
  a.expect(std::abs(neg.exponent - (delta + 0.25)) <= cfg.slope_tol, "h f grows with exponent delta + 1/4");

  if (delta - gamma > 0.25) {
    const Expr h_lm = catalog("pow_witness", {delta - gamma - 0.25});
    const Classification c = classify_membership(as_function(Expr::product({h_lm, f})), delta, cfg.grid, cfg.tol);
    v.stats.emplace_back("littleoh_slope", c.slope);
    v.witnesses.push_back("h = pow_witness(" + fmt(delta - gamma - 0.25) + ")");
    a.expect_label(c.label, {Membership::InA0}, "h in A0^-(delta-gamma) maps f into A0^-delta");
  } else {
    v.notes.push_back("part (c) skipped: delta - gamma <= 1/4");
  }
  v.status = a.status();
  return v;
}

Verdict check_mult_optimal_domain(double gamma, int samples, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  Verdict v = start("check_mult_optimal_domain", {{"gamma", gamma}, {"samples", samples}});
  Assertions a(v);

  // (a) h = z with g = z: ||h f g'||_-(gamma+1) <= ||h||_inf ||f g'||_-(gamma+1)
  PolynomialSampler sampler(cfg.seed + kSeedMult);
  const TruncatedSeries h = TruncatedSeries::monomial(1);
  int violations = 0;
  double worst = 0.0;
  const Weight w = Weight::power(gamma + 1.0);
  for (int i = 0; i < samples; ++i) {
    const TruncatedSeries f = sampler.next(kSampleDegree);
    if (is_zero(f)) continue;
    const double lhs = weighted_sup(modulus_profile(as_function(multiply(h, f, kSampleDegree + 1)), cfg.grid), w);
    const double rhs = weighted_sup(modulus_profile(as_function(f), cfg.grid), w);
    worst = std::max(worst, lhs / rhs);
    if (lhs > cfg.slack * rhs) ++violations;
  }

  // (b) unbounded h = (1-z)^(-1/4) pushes a member out of the domain
  const Expr one = Expr::constant(1.0);
  const Expr f = catalog("pow_witness", {gamma + 1.0});
  const Expr hf = Expr::product({catalog("pow_witness", {0.25}), f});
  const DomainMembership f_dom = odomain_membership(one, f, gamma, DomainVariant::Full, cfg.grid, cfg.tol);
  const DomainMembership hf_dom = odomain_membership(one, hf, gamma, DomainVariant::Full, cfg.grid, cfg.tol);
  const GrowthFit growth = growth_exponent(modulus_profile(as_function(hf), cfg.grid), cfg.tol.window);

  v.stats = {{"violations", violations}, {"max_ratio", worst}, {"hfg_growth_exponent", growth.exponent}};
  v.tolerances = {{"slack", cfg.slack}, {"exponent_tol", cfg.slope_tol}};
  v.witnesses = {"h = z", "random polynomials of degree <= 64", "h = pow_witness(0.25)",
                 "f = pow_witness(" + fmt(gamma + 1.0) + ")", "g = z"};
  a.expect(violations == 0, "||z f||_-(gamma+1) <= slack ||f||_-(gamma+1)");
  a.expect_label(f_dom.classification.label, {Membership::InA0, Membership::InA_NotA0}, "f in [V_z, A^-gamma]");
  a.expect(std::abs(growth.exponent - (gamma + 1.25)) <= cfg.slope_tol, "h f g' grows with exponent gamma + 5/4");
  a.expect_label(hf_dom.classification.label, {Membership::NotInA}, "h f not in [V_z, A^-gamma]");
  v.status = a.status();
  return v;
}

Verdict check_density_partial_sums(double gamma, const std::vector<std::size_t>& degrees, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  Verdict v = start("check_density_partial_sums", {{"gamma", gamma}});
  for (std::size_t n : degrees) v.params.emplace_back("N", static_cast<double>(n));
  Assertions a(v);
  const Expr f = catalog("propJ_witness", {gamma});
  const Expr gp = g0_prime();
  std::vector<double> dist;
  for (std::size_t n : degrees) {
    const TruncatedSeries s = taylor(f, n);
    const PointFunction err = [&](cplx z) { return (evaluate(s, z) - eval(f, z)) * eval(gp, z); };
    dist.push_back(weighted_sup_estimate(err, Weight::power(gamma + 1.0), cfg.grid));
    v.stats.emplace_back("d_" + std::to_string(n), dist.back());
  }
  v.witnesses = {"propJ_witness(" + fmt(gamma) + ")", "g = g0"};
  v.tolerances = {{"step_factor", 1.05}, {"overall_factor", 0.1}};
  if (dist.size() < 2) {
    v.notes.push_back("a single degree gives no measurable trend");
    v.status = Status::Inconclusive;
    return v;
  }
  for (std::size_t i = 1; i < dist.size(); ++i) {
    a.expect(dist[i] <= 1.05 * dist[i - 1], "d_N non-increasing at N=" + std::to_string(degrees[i]));
  }
  v.stats.emplace_back("ratio_last_first", dist.back() / dist.front());
  a.expect(dist.back() <= 0.1 * dist.front(), "d_last <= 0.1 d_first");
  v.status = a.status();
  return v;
}

Verdict check_volterra_boundedness(double gamma, int samples, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  Verdict v = start("check_volterra_boundedness", {{"gamma", gamma}, {"samples", samples}});
  Assertions a(v);
  const Weight w = Weight::power(gamma);
  const int k = cfg.grid.depth;
  const RadialGrid fine = cfg.grid.with_depth(k + 2);
  const std::vector<std::pair<std::string, TruncatedSeries>> symbols = {
      {"g0", TruncatedSeries::ones(cfg.degree)},
      {"z", TruncatedSeries{1.0}},
      {"z^2", TruncatedSeries{0.0, 2.0}},
  };
  for (const auto& [name, gprime] : symbols) {
    PolynomialSampler sampler(cfg.seed + kSeedBounded);
    double ratio_k = 0.0;
    double ratio_fine = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TruncatedSeries f = sampler.next(kSampleDegree);
      if (is_zero(f)) continue;
      const RadialProfile pf = modulus_profile(as_function(f), fine);
      const RadialProfile pv = modulus_profile(as_function(volterra(gprime, f, cfg.degree)), fine);
      ratio_k = std::max(ratio_k, weighted_sup(pv, w, k) / weighted_sup(pf, w, k));
      ratio_fine = std::max(ratio_fine, weighted_sup(pv, w) / weighted_sup(pf, w));
    }
    v.stats.emplace_back("max_ratio_" + name, ratio_k);
    v.stats.emplace_back("max_ratio_refined_" + name, ratio_fine);
    a.expect(std::isfinite(ratio_k) && std::abs(ratio_fine / ratio_k - 1.0) <= 0.1,
             "max ratio for g = " + name + " stable under K -> K+2");
  }
  v.tolerances = {{"refinement_band", 0.1}};
  v.witnesses = {"g in {g0, z, z^2}", "random polynomials of degree <= 64"};
  v.status = a.status();
  return v;
}

Verdict check_E2_iii(double gamma, int n, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  if (n < 1) throw PreconditionError("check_E2_iii needs n >= 1");
  Verdict v = start("check_E2_iii", {{"gamma", gamma}, {"n", n}});
  Assertions a(v);
  const Expr gprime =
      Expr::product({Expr::constant(static_cast<double>(n)), catalog("monomial", {static_cast<double>(n - 1)})});
  const Expr f_in = catalog("pow_witness", {gamma + 1.0});
  const Expr f_out = catalog("pow_witness", {gamma + 1.25});
  const DomainMembership in = odomain_membership(gprime, f_in, gamma, DomainVariant::Full, cfg.grid, cfg.tol);
  const DomainMembership out = odomain_membership(gprime, f_out, gamma, DomainVariant::Full, cfg.grid, cfg.tol);
  v.stats = {{"slope_in", in.classification.slope}, {"slope_out", out.classification.slope}};
  v.witnesses = {"g = z^" + std::to_string(n), "pow_witness(" + fmt(gamma + 1.0) + ")",
                 "pow_witness(" + fmt(gamma + 1.25) + ")"};
  a.expect_label(in.classification.label, {Membership::InA0, Membership::InA_NotA0},
                 "(1-z)^-(gamma+1) in [V_g, A^-gamma]");
  a.expect_label(out.classification.label, {Membership::NotInA}, "(1-z)^-(gamma+5/4) not in [V_g, A^-gamma]");
  v.status = a.status();
  return v;
}

Verdict check_pugu_equivalence(double gamma, int samples, const SuiteConfig& cfg) {
  require_positive(gamma, "gamma");
  Verdict v = start("check_pugu_equivalence", {{"gamma", gamma}, {"samples", samples}});
  Assertions a(v);
  const Weight w = Weight::power(gamma);
  // ||T h|| <= max{2, 2 v(0)/v(1/2)} ||h|| with v(r) = (1-r)^gamma
  const double t_bound = std::max(2.0, 2.0 * std::pow(2.0, gamma));
  const std::vector<std::pair<std::string, TruncatedSeries>> symbols = {
      {"g0", TruncatedSeries::ones(cfg.degree)},
      {"z", TruncatedSeries{1.0}},
  };
  for (const auto& [name, gprime] : symbols) {
    PolynomialSampler sampler(cfg.seed + kSeedPugu);
    int violations = 0;
    double worst_vt = 0.0;
    double worst_tv = 0.0;
    for (int i = 0; i < samples; ++i) {
      const TruncatedSeries f = sampler.next(kSampleDegree);
      if (is_zero(f)) continue;
      const double nv = weighted_sup(modulus_profile(as_function(volterra(gprime, f, cfg.degree)), cfg.grid), w);
      const double nt = weighted_sup(modulus_profile(as_function(averaged(gprime, f, cfg.degree)), cfg.grid), w);
      worst_vt = std::max(worst_vt, nv / nt);
      worst_tv = std::max(worst_tv, nt / nv);
      if (nv > cfg.slack * nt) ++violations;
      if (nt > cfg.slack * t_bound * nv) ++violations;
    }
    v.stats.emplace_back("violations_" + name, violations);
    v.stats.emplace_back("max_V_over_T_" + name, worst_vt);
    v.stats.emplace_back("max_T_over_V_" + name, worst_tv);
    a.expect(violations == 0, "norm equivalence band for g = " + name);
  }
  v.tolerances = {{"slack", cfg.slack}, {"T_bound", t_bound}};
  v.witnesses = {"g in {g0, z}", "random polynomials of degree <= 64"};
  v.status = a.status();
  return v;
}

namespace {

template <class F>
Verdict timed(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v = fn();
  v.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

std::vector<CheckEntry> build_registry() {
  using VList = std::vector<Verdict>;
  const std::vector<double> gammas = {0.5, 1.0, 2.0};
  std::vector<CheckEntry> r;
  r.push_back({"check_cesaro_inverse", "C^-1(z^n) = (n+1)(1-z)z^n and C C^-1 = id", false,
               [](const SuiteConfig& c) { return VList{timed([&] { return check_cesaro_inverse(50, c); })}; }});
  r.push_back({"check_shift_identities", "S T = id on f(0)=0, T S = id, V_g = S T_g, T_g = T V_g", false,
               [](const SuiteConfig& c) {
                 return VList{timed([&] { return check_shift_identities(c.samples, c.seed, c); })};
               }});
  r.push_back({"check_j_norm_bound", "||J||_{A^-(gamma+1) -> A^-gamma} <= 1/gamma on samples", false,
               [gammas](const SuiteConfig& c) {
                 return VList{timed([&] { return check_j_norm_bound(gammas, c.samples, c.seed + kSeedJ, c); })};
               }});
  r.push_back({"check_example_E1", "A^-gamma is a proper subspace of [V_g0, A^-gamma]", false,
               [gammas](const SuiteConfig& c) {
                 VList out;
                 for (double g : gammas) out.push_back(timed([&] { return check_example_E1(g, c); }));
                 return out;
               }});
  r.push_back({"check_prop_I", "A^-beta is not contained in [C, A^-gamma] for beta > gamma", false,
               [](const SuiteConfig& c) {
                 VList out;
                 for (double b : {1.5, 2.0}) out.push_back(timed([&] { return check_prop_I(1.0, b, c); }));
                 return out;
               }});
  r.push_back({"check_prop_J", "A^-gamma and [C, A0^-gamma] are non-comparable", false,
               [gammas](const SuiteConfig& c) {
                 VList out;
                 for (double g : gammas) out.push_back(timed([&] { return check_prop_J(g, c); }));
                 return out;
               }});
  r.push_back({"check_inclusion_proper", "[V_g, A^-gamma] is a proper subspace of [V_g, A^-beta]", false,
               [](const SuiteConfig& c) {
                 return VList{timed([&] { return check_inclusion_proper(1.0, 1.5, 0.25, c); }),
                              timed([&] { return check_inclusion_proper(0.5, 1.0, 0.25, c); })};
               }});
  r.push_back({"check_multiplier_PH", "M(A^-gamma, A^-delta) = A^-(delta-gamma) and the little-oh analogue", false,
               [](const SuiteConfig& c) {
                 VList out;
                 for (auto [g, d] : {std::pair{1.0, 2.0}, std::pair{0.5, 1.5}, std::pair{1.0, 1.2}}) {
                   out.push_back(timed([&] { return check_multiplier_PH(g, d, c); }));
                 }
                 return out;
               }});
  r.push_back({"check_mult_optimal_domain", "multipliers of [V_g, A^-gamma] are H^inf", false,
               [](const SuiteConfig& c) {
                 VList out;
                 for (double g : {1.0, 2.0}) out.push_back(timed([&] { return check_mult_optimal_domain(g, 100, c); }));
                 return out;
               }});
  r.push_back({"check_density_partial_sums", "partial sums approach f in [V_g0, A0^-gamma]", false,
               [](const SuiteConfig& c) {
                 const std::vector<std::size_t> ns = {16, 32, 64, 128, 256};
                 VList out;
                 for (double g : {1.0, 2.0}) out.push_back(timed([&] { return check_density_partial_sums(g, ns, c); }));
                 return out;
               }});
  r.push_back({"check_volterra_boundedness", "V_g bounded on A^-gamma for g in the Bloch space", false,
               [](const SuiteConfig& c) {
                 return VList{timed([&] { return check_volterra_boundedness(1.0, 100, c); })};
               }});
  r.push_back({"check_E2_iii", "[V_g, A^-gamma] = A^-(gamma+1) for g = z^n", false,
               [gammas](const SuiteConfig& c) {
                 VList out;
                 for (int n : {1, 2, 3}) {
                   for (double g : gammas) out.push_back(timed([&] { return check_E2_iii(g, n, c); }));
                 }
                 return out;
               }});
  r.push_back({"check_pugu_equivalence", "[V_g, A^-gamma] = [T_g, A^-gamma] with equivalent norms", false,
               [](const SuiteConfig& c) {
                 return VList{timed([&] { return check_pugu_equivalence(1.0, 100, c); })};
               }});
  r.push_back({"e1_littleoh_diagnostic", "theta=pi profile of (1-z)^(1/2) e1_witness (reported only)", true,
               [](const SuiteConfig& c) {
                 return VList{timed([&] { return e1_littleoh_diagnostic(1.0, c); })};
               }});
  return r;
}

}  // namespace

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> registry = build_registry();
  return registry;
}

const CheckEntry* find_check(const std::string& name) {
  for (const auto& e : check_registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<Verdict> run_checks(const std::vector<std::string>& names, const SuiteConfig& cfg) {
  std::vector<const CheckEntry*> selected;
  if (names.empty()) {
    for (const auto& e : check_registry()) {
      if (!e.diagnostic) selected.push_back(&e);
    }
  } else {
    for (const auto& n : names) {
      const CheckEntry* e = find_check(n);
      if (e == nullptr) throw ParseError("unknown check '" + n + "'");
      selected.push_back(e);
    }
  }
  std::vector<Verdict> out;
  for (const CheckEntry* e : selected) {
    try {
      for (auto& v : e->run(cfg)) out.push_back(std::move(v));
    } catch (const std::exception& ex) {
      Verdict v;
      v.check = e->name;
      v.status = Status::Fail;
      v.notes.push_back(std::string("error: ") + ex.what());
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Verdict> run_all(const SuiteConfig& cfg) { return run_checks({}, cfg); }

int aggregate_exit_code(const std::vector<Verdict>& verdicts) {
  bool inconclusive = false;
  for (const auto& v : verdicts) {
    if (v.status == Status::Fail) return 1;
    if (v.status == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v, bool with_runtime) {
  auto named = [](const NamedValues& values) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, x] : values) {
      if (obj.contains(k)) {
        if (!obj[k].is_array()) obj[k] = nlohmann::ordered_json::array({obj[k]});
        obj[k].push_back(x);
      } else {
        obj[k] = x;
      }
    }
    return obj;
  };
  nlohmann::ordered_json j;
  j["check"] = v.check;
  j["params"] = named(v.params);
  j["status"] = to_string(v.status);
  j["stats"] = named(v.stats);
  j["witnesses"] = v.witnesses;
  j["tolerances"] = named(v.tolerances);
  j["notes"] = v.notes;
  if (with_runtime) j["runtime_ms"] = v.runtime_ms;
  return j;
}

std::string verdict_table(const std::vector<Verdict>& verdicts, bool with_runtime) {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-13s %-58s %s\n", "STATUS", "CHECK", "STATISTICS");
  os << line;
  for (const auto& v : verdicts) {
    std::string label = v.check;
    if (!v.params.empty()) {
      label += '(';
      for (std::size_t i = 0; i < v.params.size(); ++i) {
        if (i) label += ", ";
        label += v.params[i].first + "=" + fmt(v.params[i].second);
      }
      label += ')';
    }
    std::string stats;
    for (std::size_t i = 0; i < v.stats.size(); ++i) {
      if (i) stats += "  ";
      stats += v.stats[i].first + "=" + fmt(v.stats[i].second);
    }
    if (with_runtime) stats += "  runtime_ms=" + fmt(v.runtime_ms);
    std::snprintf(line, sizeof line, "%-13s %-58s ", to_string(v.status).c_str(), label.c_str());
    os << line << stats << '\n';
    for (const auto& note : v.notes) os << "              " << note << '\n';
  }
  return os.str();
}

}  // namespace optdom
