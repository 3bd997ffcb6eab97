#include <thread>

#include "bernkit/seqcore.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bernkit;

TEST_SUITE("seqcore") {
  TEST_CASE("stirling2 matches set-partition enumeration") {
    for (unsigned n = 0; n <= 9; ++n) {
      for (unsigned k = 0; k <= n + 1; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(stirling2(n, k) == Int(oracle::count_set_partitions(n, k)));
      }
    }
  }

  TEST_CASE("stirling2 spot values") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(7, 7) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(5, 3) % 5 == 0);
    CHECK(stirling2(3, 5) == 0);
    CHECK(stirling2(10, 5) == 42525);
    CHECK(stirling2(20, 10) == Int("5917584964655"));
  }

  TEST_CASE("stirling1 matches cycle enumeration") {
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned k = 0; k <= n + 1; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(stirling1(n, k) == Int(oracle::count_permutations_by_cycles(n, k)));
      }
    }
  }

  TEST_CASE("stirling1 spot values") {
    CHECK(stirling1(4, 1) == 6);
    CHECK(stirling1(3, 2) == 3);
    CHECK(stirling1(9, 9) == 1);
    CHECK(stirling1(10, 5) == 269325);
    CHECK(stirling1(2, 4) == 0);
  }

  TEST_CASE("table invariants") {
    for (unsigned n = 1; n <= 40; ++n) {
      CHECK(stirling2(n, n) == 1);
      CHECK(stirling2(n, 1) == 1);
      CHECK(stirling1(n, n) == 1);
      CHECK(stirling2(n, 0) == 0);
      CHECK(stirling1(n, 0) == 0);
      Int row = 0;
      for (unsigned k = 0; k <= n; ++k) row += stirling1(n, k);
      CHECK(row == oracle::factorial_direct(n));
    }
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling2(0, 0) == 1);
  }

  TEST_CASE("rising factorial expands in unsigned first-kind numbers") {
    const auto xs = oracle::sample_rationals(11, 20);
    for (unsigned n = 1; n <= 20; ++n) {
      for (const Rat& x : xs) {
        Rat expanded = 0;
        for (unsigned k = 0; k <= n; ++k) expanded += Rat(stirling1(n, k)) * ipow(x, k);
        Rat direct = 1;
        for (unsigned i = 0; i < n; ++i) direct *= x + i;
        CHECK(expanded == direct);
      }
    }
  }

  TEST_CASE("powers expand in rising factorials with second-kind numbers") {
    const auto xs = oracle::sample_rationals(12, 10);
    for (unsigned n = 1; n <= 15; ++n) {
      for (const Rat& x : xs) {
        Rat expanded = 0;
        for (unsigned k = 0; k <= n; ++k) {
          expanded += sign_pow(static_cast<long>(n) - k) * Rat(stirling2(n, k)) * rising_factorial(x, k);
        }
        CHECK(expanded == ipow(x, n));
      }
    }
  }

  TEST_CASE("first-kind columns 1 and 2 against factorial and harmonic") {
    for (unsigned k = 1; k <= 40; ++k) {
      CHECK(stirling1(k, 1) == oracle::factorial_direct(k - 1));
      CHECK(Rat(stirling1(k, 2)) == Rat(oracle::factorial_direct(k - 1)) * oracle::harmonic_direct(k - 1));
    }
  }

  TEST_CASE("first-kind column 3 against generalized harmonic numbers") {
    for (unsigned k = 3; k <= 40; ++k) {
      const Rat h = oracle::harmonic_direct(k - 1);
      const Rat expected = Rat(1, 2) * Rat(oracle::factorial_direct(k - 1)) * (h * h - oracle::harmonic_direct(k - 1, 2));
      CHECK(Rat(stirling1(k, 3)) == expected);
    }
  }

  TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(2) == make_rat(3, 2));
    CHECK(harmonic(3) == make_rat(11, 6));
    for (unsigned n = 1; n <= 60; ++n) {
      CHECK(harmonic(n) - harmonic(n - 1) == Rat(1, n));
      CHECK(harmonic(n) == oracle::harmonic_direct(n));
    }
  }

  TEST_CASE("generalized harmonic numbers") {
    CHECK(harmonic_gen(3, 1) == make_rat(11, 6));
    CHECK(harmonic_gen(2, 2) == make_rat(5, 4));
    CHECK(harmonic_gen(0, 3) == 0);
    for (unsigned n = 0; n <= 20; ++n) {
      CHECK(harmonic_gen(n, 1) == harmonic(n));
      CHECK(harmonic_gen(n, 3) == oracle::harmonic_direct(n, 3));
    }
    CHECK_THROWS_AS(harmonic_gen(3, 0), std::domain_error);
  }

  TEST_CASE("binomials with rational and negative upper argument") {
    CHECK(binom(make_rat(-1, 2), 2) == make_rat(3, 8));
    CHECK(binom(make_rat(7, 3), 0) == 1);
    CHECK(binom(Rat(5), 2) == 10);
    for (unsigned k = 0; k <= 20; ++k) {
      // C(-1/2, k) = (-1)^k C(2k,k) / 4^k
      const Rat expected = sign_pow(k) * make_rat(binom_int(2 * k, k), ipow(Int(4), k));
      CHECK(binom(make_rat(-1, 2), k) == expected);
    }
    for (long n = -6; n <= 12; ++n) {
      for (unsigned k = 0; k <= 8; ++k) CHECK(Rat(binom_int(n, k)) == binom(Rat(n), k));
    }
  }

  TEST_CASE("hockey stick sum") {
    for (long n = 1; n <= 40; ++n) {
      for (long j = 1; j <= n; ++j) {
        Int acc = 0;
        for (long k = 0; k <= j - 1; ++k) acc += binom_int(n - k, static_cast<unsigned>(j - k));
        CHECK(acc == binom_int(n + 1, static_cast<unsigned>(j)) - 1);
      }
    }
  }

  TEST_CASE("factorials are cached with the tables") {
    for (unsigned n = 0; n <= 30; ++n) CHECK(factorial(n) == oracle::factorial_direct(n));
  }

  TEST_CASE("concurrent growth yields identical tables") {
    StirlingTables tables;
    std::vector<Int> seen(8);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < seen.size(); ++t) {
      pool.emplace_back([&, t] { seen[t] = tables.second_kind(60 + t % 3, 30) + tables.first_kind(50, 20 + t % 2); });
    }
    for (auto& th : pool) th.join();
    for (unsigned t = 0; t < seen.size(); ++t) {
      CHECK(seen[t] == stirling2(60 + t % 3, 30) + stirling1(50, 20 + t % 2));
    }
  }
}
