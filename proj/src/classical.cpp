#include "bernkit/classical.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "bernkit/seqcore.hpp"

namespace bernkit {

namespace {

class BernoulliCache {
 public:
  Rat get(unsigned n) {
    std::lock_guard lock(mu_);
    while (b_.size() <= n) {
      const unsigned m = static_cast<unsigned>(b_.size());
      Rat acc = 0;
      for (unsigned j = 0; j < m; ++j) acc += Rat(binom_int(m + 1, j)) * b_[j];
      b_.push_back(-acc / Rat(m + 1));
    }
    return b_[n];
  }

 private:
  std::mutex mu_;
  std::vector<Rat> b_{Rat(1)};
};

class EulerCache {
 public:
  Poly get(unsigned n) {
    std::lock_guard lock(mu_);
    while (e_.size() <= n) {
      const unsigned m = static_cast<unsigned>(e_.size());
      // 2 E_m(x) = 2 x^m - sum_{j<m} C(m,j) E_j(x)
      Poly acc = Poly::monomial(2, m);
      for (unsigned j = 0; j < m; ++j) acc -= e_[j] * Rat(binom_int(m, j));
      e_.push_back(acc * Rat(1, 2));
    }
    return e_[n];
  }

 private:
  std::mutex mu_;
  std::vector<Poly> e_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

EulerCache& euler_cache() {
  static EulerCache cache;
  return cache;
}

}  // namespace

Rat bernoulli(unsigned n) { return bernoulli_cache().get(n); }

Rat worpitzky_bernoulli(unsigned n) {
  if (n == 0) throw std::domain_error("worpitzky_bernoulli: n must be >= 1");
  Rat acc = 0;
  for (unsigned k = 1; k <= n; ++k) {
    Rat term(stirling2(n, k) * factorial(k), Int(k + 1));
    term.canonicalize();
    acc += sign_pow(k) * term;
  }
  return acc;
}

Poly bernoulli_poly(unsigned n) {
  std::vector<Rat> cs(n + 1);
  for (unsigned j = 0; j <= n; ++j) cs[n - j] = Rat(binom_int(n, j)) * bernoulli(j);
  return Poly(std::move(cs));
}

Rat bernoulli_poly_at(unsigned n, const Rat& x) { return bernoulli_poly(n)(x); }

Poly euler_poly(unsigned n) { return euler_cache().get(n); }

Rat euler_number(unsigned n) { return euler_poly(n).coeff(0); }

Rat euler_at_one(unsigned n) { return euler_poly(n)(Rat(1)); }

Rat cauchy1(unsigned k) {
  if (k == 0) return 1;
  Rat acc = 0;
  for (unsigned j = 1; j <= k; ++j) {
    Rat term(stirling1(k, j), Int(j + 1));
    term.canonicalize();
    acc += sign_pow(static_cast<long>(k) - j) * term;
  }
  return acc;
}

Rat hw(unsigned n, const Rat& x) {
  if (n == 0) throw std::domain_error("hw: n must be >= 1");
  Rat acc = 0;
  Rat falling = 1;  // x(x-1)...(x-k+1) = C(x,k) k!
  for (unsigned k = 1; k <= n; ++k) {
    falling *= x - (k - 1);
    acc += Rat(stirling2(n, k)) * falling * harmonic(k);
  }
  return acc;
}

Poly hw_poly(unsigned n) {
  if (n == 0) throw std::domain_error("hw_poly: n must be >= 1");
  Poly acc;
  for (unsigned k = 1; k <= n; ++k) acc += Poly::falling_factorial(k) * (Rat(stirling2(n, k)) * harmonic(k));
  return acc;
}

Rat hw_closed_integer(unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw std::domain_error("hw_closed_integer: n and m must be >= 1");
  Rat acc = harmonic(m) * Rat(ipow(Int(m), n));
  for (unsigned j = 1; j <= m; ++j) acc -= make_rat(ipow(Int(m - j), n), Int(j));
  return acc;
}

}  // namespace bernkit
