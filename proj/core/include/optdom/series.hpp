#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace optdom {

using cplx = std::complex<double>;

/// Default truncation degree for every coefficient-domain operation.
inline constexpr std::size_t kDefaultDegree = 256;

/// Taylor coefficients c_0..c_N of an analytic function on the unit disc,
/// f(z) = sum c_n z^n. Immutable; always holds at least one coefficient and
/// every coefficient is finite.
class TruncatedSeries {
 public:
  /// The zero series of degree 0.
  TruncatedSeries();
  explicit TruncatedSeries(std::vector<cplx> coeffs);
  TruncatedSeries(std::initializer_list<cplx> coeffs);

  static TruncatedSeries zeros(std::size_t degree);
  /// 1 + z + ... + z^degree, the truncated Taylor series of 1/(1-z).
  static TruncatedSeries ones(std::size_t degree);
  static TruncatedSeries monomial(std::size_t n, cplx c = 1.0);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Coefficient n, or 0 beyond the degree.
  cplx coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }
  cplx operator[](std::size_t n) const { return coeffs_[n]; }

  /// Exact coefficientwise equality after implicit zero padding.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<cplx> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, cplx factor);

/// c_n = sum_{k<=n} a_k b_{n-k}; the result has degree min(cap, deg a + deg b).
TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b,
                               std::size_t cap = kDefaultDegree);

/// Horner evaluation. Throws DomainError when |z| >= 1.
cplx evaluate(const TruncatedSeries& f, cplx z);

/// S_M f: coefficients 0..min(M, N).
TruncatedSeries partial_sum(const TruncatedSeries& f, std::size_t m);

/// sum_{n>M} |c_n| |z|^n, the bound on |f(z) - S_M f(z)|.
double tail_bound(const TruncatedSeries& f, std::size_t m, double radius);

/// max_n |a_n - b_n| with zero padding.
double max_abs_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/// Drops exact trailing zeros above `keep_degree`.
TruncatedSeries trim_trailing_zeros(const TruncatedSeries& f, std::size_t keep_degree = 0);

}  // namespace optdom
