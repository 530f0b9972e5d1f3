#include "optdom/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "optdom/errors.hpp"

namespace optdom {

namespace {

void require_finite(const std::vector<cplx>& coeffs) {
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!std::isfinite(coeffs[n].real()) || !std::isfinite(coeffs[n].imag())) {
      throw PreconditionError("non-finite Taylor coefficient at index " + std::to_string(n));
    }
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries() : coeffs_(1, cplx{}) {}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    coeffs_.push_back(cplx{});
  }
  require_finite(coeffs_);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<cplx> coeffs)
    : TruncatedSeries(std::vector<cplx>(coeffs)) {}

TruncatedSeries TruncatedSeries::zeros(std::size_t degree) {
  return TruncatedSeries(std::vector<cplx>(degree + 1, cplx{}));
}

TruncatedSeries TruncatedSeries::ones(std::size_t degree) {
  return TruncatedSeries(std::vector<cplx>(degree + 1, cplx{1.0}));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t n, cplx c) {
  std::vector<cplx> coeffs(n + 1, cplx{});
  coeffs[n] = c;
  return TruncatedSeries(std::move(coeffs));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(i) != b.coeff(i)) return false;
  }
  return true;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t degree = std::max(a.degree(), b.degree());
  std::vector<cplx> out(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) out[n] = a.coeff(n) + b.coeff(n);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t degree = std::max(a.degree(), b.degree());
  std::vector<cplx> out(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) out[n] = a.coeff(n) - b.coeff(n);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(const TruncatedSeries& a, cplx factor) {
  std::vector<cplx> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= factor;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b,
                               std::size_t cap) {
  const std::size_t degree = std::min(cap, a.degree() + b.degree());
  std::vector<cplx> out(degree + 1, cplx{});
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size() && i <= degree; ++i) {
    if (ac[i] == cplx{}) continue;
    const std::size_t jmax = std::min(bc.size() - 1, degree - i);
    for (std::size_t j = 0; j <= jmax; ++j) out[i + j] += ac[i] * bc[j];
  }
  return TruncatedSeries(std::move(out));
}

cplx evaluate(const TruncatedSeries& f, cplx z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("series evaluation requires |z| < 1");
  }
  const auto c = f.coeffs();
  cplx acc{};
  for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
  return acc;
}

TruncatedSeries partial_sum(const TruncatedSeries& f, std::size_t m) {
  const auto c = f.coeffs();
  const std::size_t degree = std::min(m, f.degree());
  return TruncatedSeries(std::vector<cplx>(c.begin(), c.begin() + degree + 1));
}

double tail_bound(const TruncatedSeries& f, std::size_t m, double radius) {
  double sum = 0.0;
  double power = std::pow(radius, static_cast<double>(m + 1));
  for (std::size_t n = m + 1; n <= f.degree(); ++n) {
    sum += std::abs(f[n]) * power;
    power *= radius;
  }
  return sum;
}

double max_abs_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (std::size_t i = 0; i <= n; ++i) worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
  return worst;
}

TruncatedSeries trim_trailing_zeros(const TruncatedSeries& f, std::size_t keep_degree) {
  const auto c = f.coeffs();
  std::size_t last = f.degree();
  while (last > keep_degree && c[last] == cplx{}) --last;
  return TruncatedSeries(std::vector<cplx>(c.begin(), c.begin() + last + 1));
}

}  // namespace optdom
