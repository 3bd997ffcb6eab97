#pragma once

// Bernoulli numbers and polynomials, Euler polynomials, Cauchy numbers of the
// first kind and the harmonic-weighted Stirling transform hw(n, x).
//
// Convention: B_1 = -1/2 everywhere.

#include "bernkit/poly.hpp"
#include "bernkit/rat.hpp"

namespace bernkit {

/// B_n from sum_{j=0}^{n} C(n+1,j) B_j = 0 (n >= 1), memoized.
Rat bernoulli(unsigned n);

/// sum_{k=1}^{n} (-1)^k {n;k} k!/(k+1). Requires n >= 1.
Rat worpitzky_bernoulli(unsigned n);

/// B_n(x) = sum_j C(n,j) B_j x^{n-j}
Poly bernoulli_poly(unsigned n);
Rat bernoulli_poly_at(unsigned n, const Rat& x);

/// E_n(x) from E_n(x) + sum_{j=0}^{n} C(n,j) E_j(x) = 2 x^n, memoized.
Poly euler_poly(unsigned n);
/// E_n(0). Note 2^n E_n is an integer.
Rat euler_number(unsigned n);
/// E_n(1)
Rat euler_at_one(unsigned n);

/// c_k = sum_{j=1}^{k} [k;j] (-1)^{k-j}/(j+1), c_0 = 1.
Rat cauchy1(unsigned k);

/// sum_{k=1}^{n} {n;k} C(x,k) k! H_k. Requires n >= 1.
Rat hw(unsigned n, const Rat& x);
/// The same quantity as a polynomial in x.
Poly hw_poly(unsigned n);
/// H_m m^n - sum_{j=1}^{m} (m-j)^n / j; equals hw(n, m) for integers m >= 1.
Rat hw_closed_integer(unsigned n, unsigned m);

}  // namespace bernkit
