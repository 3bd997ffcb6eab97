#pragma once

// Exact base sequences: Stirling numbers of both kinds, factorials,
// harmonic numbers and binomial coefficients.
//
// Every table here is filled row by row on demand and each cell is written
// exactly once. Growth happens under an internal mutex, so the process-wide
// instances may be read from several threads. Accessors return values, never
// references into the tables.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "bernkit/rat.hpp"

namespace bernkit {

class StirlingTables {
 public:
  /// {n;k}: partitions of an n-set into k nonempty blocks. Zero for k > n.
  Int second_kind(unsigned n, unsigned k);
  /// Unsigned [n;k]: coefficient of x^k in x(x+1)...(x+n-1). Zero for k > n.
  Int first_kind(unsigned n, unsigned k);
  Int factorial(unsigned n);

  /// Number of rows currently materialized (rows 0..rows()-1).
  unsigned rows() const;

 private:
  void grow_to(unsigned n);  // requires mu_ held

  mutable std::mutex mu_;
  std::vector<std::vector<Int>> s1_;
  std::vector<std::vector<Int>> s2_;
  std::vector<Int> fact_;
};

class HarmonicCache {
 public:
  Rat harmonic(unsigned n);
  Rat generalized(unsigned n, unsigned m);

 private:
  mutable std::mutex mu_;
  std::vector<Rat> h_{Rat(0)};
  std::map<std::pair<unsigned, unsigned>, Rat> hm_;
};

StirlingTables& stirling_tables();
HarmonicCache& harmonic_cache();

Int stirling2(unsigned n, unsigned k);
Int stirling1(unsigned n, unsigned k);
Int factorial(unsigned n);

/// H_n, with H_0 = 0.
Rat harmonic(unsigned n);
/// H_n^(m) = sum_{i<=n} 1/i^m. Requires m >= 1.
Rat harmonic_gen(unsigned n, unsigned m);

/// x(x-1)...(x-k+1)/k!, exact for any rational x.
Rat binom(const Rat& x, unsigned k);
/// Integer binomial with the same extension to negative n as binom().
Int binom_int(long n, unsigned k);

/// x(x+1)...(x+n-1)
Rat rising_factorial(const Rat& x, unsigned n);
/// x(x-1)...(x-n+1)
Rat falling_factorial(const Rat& x, unsigned n);

}  // namespace bernkit
