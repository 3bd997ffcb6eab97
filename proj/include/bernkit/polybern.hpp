#pragma once

// Poly-Bernoulli numbers and polynomials B_n^(p)(x), read off the
// generating function Li_p(1 - e^{-t})/(1 - e^{-t}) e^{xt}. Series are
// cached per (p, x) and regrown when a larger index is requested.

#include "bernkit/rat.hpp"

namespace bernkit {

struct PolyBernoulliValue {
  unsigned n;
  unsigned p;
  Rat x;
  Rat value;
};

/// Requires p >= 1.
Rat poly_bernoulli(unsigned n, unsigned p, const Rat& x = Rat(0));
PolyBernoulliValue poly_bernoulli_value(unsigned n, unsigned p, const Rat& x = Rat(0));

/// B_n^(2)
Rat dibernoulli(unsigned n);
/// B_n^(2)(1)
Rat dibernoulli_at_one(unsigned n);

}  // namespace bernkit
