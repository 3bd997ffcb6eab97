#include "bernkit/classical.hpp"
#include "bernkit/fps.hpp"
#include "bernkit/seqcore.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bernkit;

TEST_SUITE("classical") {
  TEST_CASE("bernoulli numbers, B_1 = -1/2") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rat(-1, 2));
    CHECK(bernoulli(2) == make_rat(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == make_rat(-1, 30));
    CHECK(bernoulli(7) == 0);
    CHECK(bernoulli(12) == make_rat(-691, 2730));
    for (unsigned n = 1; n <= 40; ++n) CHECK(bernoulli(2 * n + 1) == 0);
  }

  TEST_CASE("bernoulli agrees with the generating function t/(e^t - 1)") {
    const unsigned order = 30;
    // (e^t - 1)/t, then invert
    const Egf e1 = Egf::exp_linear(order + 1, 1) - Egf::constant(order + 1, 1);
    const Egf gen = reciprocal(e1.shift_down(1));
    for (unsigned n = 0; n <= order; ++n) CHECK(gen.egf(n) == bernoulli(n));
  }

  TEST_CASE("defining recurrence holds") {
    for (unsigned n = 1; n <= 60; ++n) {
      Rat acc = 0;
      for (unsigned j = 0; j <= n; ++j) acc += Rat(binom_int(n + 1, j)) * bernoulli(j);
      CHECK(acc == 0);
    }
  }

  TEST_CASE("worpitzky route") {
    CHECK(worpitzky_bernoulli(1) == make_rat(-1, 2));
    CHECK(worpitzky_bernoulli(2) == make_rat(1, 6));
    CHECK(worpitzky_bernoulli(3) == 0);
    for (unsigned n = 1; n <= 100; ++n) CHECK(worpitzky_bernoulli(n) == bernoulli(n));
    CHECK_THROWS_AS(worpitzky_bernoulli(0), std::domain_error);
  }

  TEST_CASE("bernoulli polynomials") {
    const Poly b2 = bernoulli_poly(2);
    CHECK(b2 == Poly({make_rat(1, 6), Rat(-1), Rat(1)}));
    CHECK(b2(Rat(1)) == make_rat(1, 6));
    for (unsigned n = 0; n <= 40; ++n) CHECK(bernoulli_poly_at(n, 0) == bernoulli(n));
    // (-1)^n B_n(-x) = B_n(x) + n x^{n-1}
    CHECK(-bernoulli_poly_at(3, -2) == bernoulli_poly_at(3, 2) + 12);
    for (unsigned n = 1; n <= 25; ++n) {
      for (const Rat& x : oracle::sample_rationals(n, 4)) {
        CHECK(sign_pow(n) * bernoulli_poly_at(n, -x) == bernoulli_poly_at(n, x) + Rat(n) * ipow(x, n - 1));
      }
    }
  }

  TEST_CASE("euler numbers and polynomials") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(1) == make_rat(-1, 2));
    CHECK(euler_number(2) == 0);
    CHECK(euler_number(3) == make_rat(1, 4));
    CHECK(euler_number(7) == make_rat(17, 8));
    CHECK(euler_number(9) == make_rat(-31, 2));
    CHECK(euler_number(0) + euler_number(1) + euler_number(2) + euler_number(3) == make_rat(3, 4));
    CHECK(euler_at_one(1) == make_rat(1, 2));
    CHECK(euler_at_one(3) == make_rat(-1, 4));
    for (unsigned m = 1; m <= 30; ++m) CHECK(euler_number(2 * m) == 0);
  }

  TEST_CASE("euler polynomials agree with the series 2e^{xt}/(e^t+1)") {
    const unsigned order = 24;
    for (const Rat& x : {Rat(0), Rat(1), make_rat(1, 3), make_rat(-5, 2)}) {
      const Egf gen = named_series("euler-egf", order, {.x = x});
      for (unsigned n = 0; n <= order; ++n) CHECK(gen.egf(n) == euler_poly(n)(x));
    }
    CHECK(euler_poly(3)(make_rat(1, 3)) == make_rat(13, 108));
  }

  TEST_CASE("euler values at 1 against bernoulli numbers") {
    for (unsigned k = 0; k <= 40; ++k) {
      const Rat via_b = 2 * Rat(ipow(Int(2), k + 1) - 1) * bernoulli(k + 1) / (k + 1);
      CHECK(-euler_number(k) == via_b);
      if (k >= 1) CHECK(euler_at_one(k) == -euler_number(k));
    }
    // E_0(1) = E_0(0) = 1: the sign relation starts at k = 1.
    CHECK(euler_at_one(0) == 1);
  }

  TEST_CASE("2^m E_m is an integer") {
    for (unsigned m = 0; m <= 60; ++m) CHECK(is_integer(euler_number(m) * Rat(ipow(Int(2), m))));
  }

  TEST_CASE("cauchy numbers of the first kind") {
    CHECK(cauchy1(0) == 1);
    CHECK(cauchy1(1) == make_rat(1, 2));
    CHECK(cauchy1(2) == make_rat(-1, 6));
    CHECK(cauchy1(3) == make_rat(1, 4));
    CHECK(cauchy1(4) == make_rat(-19, 30));
    CHECK(cauchy1(6) == make_rat(-863, 84));
    for (unsigned k = 0; k <= 40; ++k) CHECK(cauchy1(k) == oracle::cauchy_by_integral(k));
  }

  TEST_CASE("hw by direct summation") {
    for (unsigned n = 1; n <= 12; ++n) CHECK(hw(n, 1) == 1);
    CHECK(hw(2, 2) == 5);
    CHECK(hw(3, 2) == 11);
    CHECK(hw(2, make_rat(-1, 2)) == make_rat(5, 8));
    CHECK(hw(4, make_rat(1, 3)) == make_rat(4, 243));
    CHECK(hw(5, -3) == -737);
    CHECK_THROWS_AS(hw(0, 1), std::domain_error);
  }

  TEST_CASE("hw closed form at positive integers") {
    CHECK(hw_closed_integer(5, 1) == 1);
    CHECK(hw_closed_integer(2, 2) == 5);
    CHECK(hw_closed_integer(3, 2) == 11);
    for (unsigned n = 1; n <= 25; ++n) {
      for (unsigned m = 1; m <= 12; ++m) CHECK(hw_closed_integer(n, m) == hw(n, m));
    }
  }

  TEST_CASE("hw polynomial matches pointwise evaluation") {
    for (unsigned n = 1; n <= 15; ++n) {
      const Poly p = hw_poly(n);
      for (const Rat& x : oracle::sample_rationals(100 + n, 5)) CHECK(p(x) == hw(n, x));
    }
  }

  TEST_CASE("Agoh's binomial-harmonic polynomial identity") {
    for (unsigned m = 1; m <= 20; ++m) {
      for (const Rat& z : oracle::sample_rationals(200 + m, 10)) {
        Rat lhs = 0;
        for (unsigned k = 1; k <= m; ++k) lhs += Rat(binom_int(m, k)) * harmonic(k) * ipow(z - 1, k);
        Rat rhs = harmonic(m) * ipow(z, m);
        for (unsigned k = 0; k < m; ++k) rhs -= ipow(z, k) / (m - k);
        CHECK(lhs == rhs);
      }
    }
  }
}
