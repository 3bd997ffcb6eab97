#include "bernkit/poly.hpp"

#include <algorithm>

namespace bernkit {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(const Rat& c, unsigned degree) {
  std::vector<Rat> cs(degree + 1, Rat(0));
  cs[degree] = c;
  return Poly(std::move(cs));
}

Poly Poly::falling_factorial(unsigned n) {
  Poly out = constant(1);
  for (unsigned i = 0; i < n; ++i) out = out * Poly({Rat(-static_cast<long>(i)), Rat(1)});
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> cs(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(cs));
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
  std::vector<Rat> anti(coeffs_.size() + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) anti[i + 1] = coeffs_[i] / Rat(static_cast<unsigned long>(i + 1));
  Poly prim(std::move(anti));
  return prim(b) - prim(a);
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& v : coeffs_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(cs));
}

}  // namespace bernkit
