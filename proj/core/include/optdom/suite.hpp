#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "optdom/radial.hpp"
#include "optdom/series.hpp"

namespace optdom {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

using NamedValues = std::vector<std::pair<std::string, double>>;

/// Outcome of one named check. Pass requires every sub-assertion to hold;
/// Inconclusive only comes from an Inconclusive classifier outcome (or a
/// diagnostic), never from a failed assertion.
struct Verdict {
  std::string check;
  NamedValues params;
  Status status = Status::Fail;
  NamedValues stats;
  std::vector<std::string> witnesses;
  NamedValues tolerances;
  std::vector<std::string> notes;
  double runtime_ms = 0.0;
};

/// Shared settings of the verification suite.
struct SuiteConfig {
  std::size_t degree = kDefaultDegree;
  RadialGrid grid{};
  ClassifyTolerances tol{};
  /// Multiplicative slack on inequalities between sampled (lower-bound) norms.
  double slack = 1.01;
  /// Half-width for fitted slopes and growth exponents.
  double slope_tol = 0.05;
  std::uint64_t seed = 7;
  int samples = 200;

  void validate() const;
};

/// Portable generator of random test polynomials: degree uniform in
/// [0, max_degree], real and imaginary parts uniform in [-1, 1].
class PolynomialSampler {
 public:
  explicit PolynomialSampler(std::uint64_t seed) : rng_(seed) {}
  TruncatedSeries next(std::size_t max_degree);
  /// Exactly `degree` (leading coefficient may still be small).
  TruncatedSeries next_exact(std::size_t degree);

 private:
  double uniform_pm1();
  std::mt19937_64 rng_;
};

Verdict check_cesaro_inverse(int max_n, const SuiteConfig& cfg = {});
Verdict check_shift_identities(int samples, std::uint64_t seed, const SuiteConfig& cfg = {});
Verdict check_j_norm_bound(const std::vector<double>& gammas, int samples, std::uint64_t seed,
                           const SuiteConfig& cfg = {});
Verdict check_example_E1(double gamma, const SuiteConfig& cfg = {});
/// Reports the theta = pi weighted profile of (1-z)^(1/2) e1_witness(gamma) times g0' at
/// order gamma + 1. Always Inconclusive.
Verdict e1_littleoh_diagnostic(double gamma, const SuiteConfig& cfg = {});
Verdict check_prop_I(double gamma, double beta, const SuiteConfig& cfg = {});
Verdict check_prop_J(double gamma, const SuiteConfig& cfg = {});
Verdict check_inclusion_proper(double gamma, double beta, double eps, const SuiteConfig& cfg = {});
Verdict check_multiplier_PH(double gamma, double delta, const SuiteConfig& cfg = {});
Verdict check_mult_optimal_domain(double gamma, int samples = 100, const SuiteConfig& cfg = {});
Verdict check_density_partial_sums(double gamma, const std::vector<std::size_t>& degrees,
                                   const SuiteConfig& cfg = {});
Verdict check_volterra_boundedness(double gamma, int samples, const SuiteConfig& cfg = {});
Verdict check_E2_iii(double gamma, int n, const SuiteConfig& cfg = {});
Verdict check_pugu_equivalence(double gamma, int samples, const SuiteConfig& cfg = {});

/// A check name with its default parametrizations.
struct CheckEntry {
  std::string name;
  std::string summary;
  /// Diagnostics are excluded from "all".
  bool diagnostic = false;
  std::function<std::vector<Verdict>(const SuiteConfig&)> run;
};

const std::vector<CheckEntry>& check_registry();
const CheckEntry* find_check(const std::string& name);

/// Runs the named entries (every non-diagnostic entry when `names` is empty)
/// in registry order. Exceptions become Fail verdicts carrying the message.
std::vector<Verdict> run_checks(const std::vector<std::string>& names, const SuiteConfig& cfg);
std::vector<Verdict> run_all(const SuiteConfig& cfg);

/// 0 when every verdict passes, 1 if any fails, 2 if the rest are Inconclusive.
int aggregate_exit_code(const std::vector<Verdict>& verdicts);

nlohmann::ordered_json verdict_to_json(const Verdict& v, bool with_runtime = false);
std::string verdict_table(const std::vector<Verdict>& verdicts, bool with_runtime = false);

}  // namespace optdom
