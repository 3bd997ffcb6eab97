#pragma once

#include <span>
#include <vector>

#include "bernkit/rat.hpp"

namespace bernkit {

/// Dense univariate polynomial over Rat; coeffs()[i] multiplies x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, unsigned degree);
  /// x(x-1)...(x-n+1)
  static Poly falling_factorial(unsigned n);

  std::span<const Rat> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero past the degree.
  Rat coeff(unsigned i) const;

  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  /// Exact integral over [a, b].
  Rat integrate(const Rat& a, const Rat& b) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace bernkit
