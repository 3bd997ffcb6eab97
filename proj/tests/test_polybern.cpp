#include "bernkit/classical.hpp"
#include "bernkit/fps.hpp"
#include "bernkit/polybern.hpp"
#include "bernkit/seqcore.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bernkit;

using oracle::poly_bernoulli_stirling_sum;

TEST_SUITE("polybern") {
  TEST_CASE("low-order values") {
    CHECK(poly_bernoulli(0, 1) == 1);
    CHECK(poly_bernoulli(0, 2) == 1);
    CHECK(poly_bernoulli(0, 5) == 1);
    CHECK(dibernoulli(0) == 1);
    CHECK(dibernoulli(1) == make_rat(1, 4));
    CHECK(dibernoulli(2) == make_rat(-1, 36));
    CHECK(dibernoulli(3) == make_rat(-1, 24));
    CHECK(dibernoulli(4) == make_rat(7, 450));
    CHECK(dibernoulli_at_one(2) == make_rat(53, 36));
    CHECK(dibernoulli_at_one(4) == make_rat(757, 450));
    CHECK(poly_bernoulli(2, 3) == make_rat(-11, 216));
    CHECK(poly_bernoulli(4, 3) == make_rat(1243, 54000));
    CHECK_THROWS_AS(poly_bernoulli(1, 0), SeriesError);
  }

  TEST_CASE("stirling-sum oracle is itself consistent with the series before use") {
    // Validate the closed form against an independent series computation:
    // Li_p(u)/u as sum_k u^{k-1}/k^p with u = 1 - e^{-t}.
    const unsigned order = 12;
    for (unsigned p = 1; p <= 3; ++p) {
      const Egf u = Egf::constant(order, 1) - Egf::exp_linear(order, -1);
      Egf acc(order);
      Egf upow = Egf::constant(order, 1);
      for (unsigned k = 1; k <= order + 1; ++k) {
        acc = acc + scale(upow, Rat(1, ipow(Int(k), p)));
        upow = upow * u;
      }
      for (unsigned n = 0; n <= order; ++n) CHECK(acc.egf(n) == poly_bernoulli_stirling_sum(n, p));
    }
  }

  TEST_CASE("series route equals stirling-sum oracle") {
    for (unsigned p = 1; p <= 3; ++p) {
      for (unsigned n = 0; n <= 40; ++n) CHECK(poly_bernoulli(n, p) == poly_bernoulli_stirling_sum(n, p));
    }
  }

  TEST_CASE("p = 1 collapses to B_n(x + 1)") {
    CHECK(poly_bernoulli(2, 1, 0) == make_rat(1, 6));
    for (const Rat& x : {Rat(0), Rat(1), Rat(-1), make_rat(1, 2)}) {
      for (unsigned n = 0; n <= 30; ++n) CHECK(poly_bernoulli(n, 1, x) == bernoulli_poly_at(n, x + 1));
    }
  }

  TEST_CASE("cache regrowth keeps earlier values") {
    const Rat x = make_rat(2, 7);
    const Rat small = poly_bernoulli(3, 2, x);
    const Rat big = poly_bernoulli(70, 2, x);
    CHECK(poly_bernoulli(3, 2, x) == small);
    CHECK(poly_bernoulli_value(70, 2, x).value == big);
  }

  TEST_CASE("di-Bernoulli bridge and cumulative sum") {
    for (unsigned n = 1; n <= 30; ++n) {
      Rat lhs = 0;
      for (unsigned k = 1; k <= n; ++k) {
        const Rat h = harmonic(k);
        lhs += sign_pow(static_cast<long>(n) - k) * Rat(stirling2(n, k) * factorial(k)) * h * h;
      }
      CHECK(lhs == dibernoulli_at_one(n) - dibernoulli(n) + Rat(n * (n - 1)));
    }
    const Rat sum2 = bernoulli(0) + bernoulli(1) + bernoulli(2);
    CHECK(sum2 == make_rat(2, 3));
    CHECK(sum2 == dibernoulli_at_one(2) + bernoulli(2) - dibernoulli(2) - 1);
  }
}
