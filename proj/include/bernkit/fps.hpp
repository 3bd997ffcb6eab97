#pragma once

// Truncated power series over Rat. Storage is ordinary coefficients
// c_0..c_N of sum c_n t^n; egf(n) exposes the exponential view c_n * n!.
// Binary operations on series of different orders truncate to the smaller
// order.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernkit/rat.hpp"

namespace bernkit {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Egf {
 public:
  /// Zero series of the given order.
  explicit Egf(unsigned order) : coeffs_(order + 1, Rat(0)) {}
  /// Pads with zeros up to order; throws SeriesError if too many coefficients.
  Egf(unsigned order, std::vector<Rat> coeffs);

  /// Builds from EGF values a_n, storing a_n / n!.
  static Egf from_egf(unsigned order, std::span<const Rat> egf_values);
  static Egf constant(unsigned order, const Rat& c);
  /// The series t.
  static Egf t(unsigned order);
  /// e^{a t}
  static Egf exp_linear(unsigned order, const Rat& a);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rat& operator[](unsigned n) const { return coeffs_.at(n); }
  /// n-th EGF coefficient, c_n * n!.
  Rat egf(unsigned n) const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  Egf truncate(unsigned order) const;
  /// Divides by t^k; the first k coefficients must vanish. Order drops by k.
  Egf shift_down(unsigned k) const;

  friend bool operator==(const Egf& a, const Egf& b) = default;

 private:
  std::vector<Rat> coeffs_;
};

Egf add(const Egf& a, const Egf& b);
Egf sub(const Egf& a, const Egf& b);
Egf scale(const Egf& a, const Rat& c);
Egf mul(const Egf& a, const Egf& b);
/// 1/a; requires a nonzero constant term.
Egf reciprocal(const Egf& a);
Egf power(const Egf& a, unsigned k);

inline Egf operator+(const Egf& a, const Egf& b) { return add(a, b); }
inline Egf operator-(const Egf& a, const Egf& b) { return sub(a, b); }
inline Egf operator*(const Egf& a, const Egf& b) { return mul(a, b); }
inline Egf operator*(const Rat& c, const Egf& a) { return scale(a, c); }

/// exp(f) for f(0) = 0.
Egf exp_series(const Egf& f);
/// log(1 + f) for f(0) = 0.
Egf log1p_series(const Egf& f);
/// g(f(t)) for f(0) = 0, Horner over the coefficients of g.
Egf compose(const Egf& g, const Egf& f);
/// Li_p(f) = sum_{k>=1} f^k / k^p for f(0) = 0.
Egf polylog_series(unsigned p, const Egf& f);

/// (1 + f)^a for f(0) = 0 and rational a, via sum_k C(a,k) f^k.
Egf binomial_series(const Rat& a, const Egf& f);

/// Li_p(1 - e^{-t}) / (1 - e^{-t}) * e^{x t}: poly-Bernoulli polynomials
/// B_n^(p)(x) as EGF coefficients.
Egf poly_bernoulli_egf(unsigned p, const Rat& x, unsigned order);

struct SeriesParams {
  std::optional<unsigned> k;  // stirling2-egf
  std::optional<unsigned> p;  // polybern
  std::optional<Rat> x;       // euler-egf, polybern
};

/// Catalog of named generating functions:
///   stirling2-egf      (e^t - 1)^k / k!                     needs k
///   harmonic-ogf       -ln(1-t)/(1-t)
///   harmonic-sq-ogf    Li_2(t)/(1-t) + ln^2(1-t)/(1-t)
///   central-binomial-harmonic-ogf
///                      2/sqrt(1-4t) ln((1+sqrt(1-4t))/(2 sqrt(1-4t)))
///   euler-egf          2 e^{xt}/(e^t + 1)                    x defaults to 0
///   polybern           Li_p(1-e^{-t})/(1-e^{-t}) e^{xt}      needs p; x defaults to 0
///   hw-half-egf        2 e^t ln((e^t + 1)/2)
/// Throws SeriesError on an unknown name or a missing parameter.
Egf named_series(std::string_view name, unsigned order, const SeriesParams& params = {});
std::vector<std::string_view> series_names();

}  // namespace bernkit
