#include "bernkit/seqcore.hpp"

#include <stdexcept>

namespace bernkit {

void StirlingTables::grow_to(unsigned n) {
  if (s1_.empty()) {
    s1_.push_back({Int(1)});
    s2_.push_back({Int(1)});
    fact_.push_back(Int(1));
  }
  while (s1_.size() <= n) {
    const unsigned r = static_cast<unsigned>(s1_.size());  // row being built
    const std::vector<Int>& p1 = s1_.back();
    const std::vector<Int>& p2 = s2_.back();
    std::vector<Int> row1(r + 1), row2(r + 1);
    row1[0] = 0;
    row2[0] = 0;
    for (unsigned k = 1; k <= r; ++k) {
      const Int prev_k1 = k < r ? p1[k] : Int(0);
      const Int prev_k2 = k < r ? p2[k] : Int(0);
      // [r;k] = (r-1)[r-1;k] + [r-1;k-1],  {r;k} = k{r-1;k} + {r-1;k-1}
      row1[k] = (r - 1) * prev_k1 + p1[k - 1];
      row2[k] = k * prev_k2 + p2[k - 1];
    }
    s1_.push_back(std::move(row1));
    s2_.push_back(std::move(row2));
    fact_.push_back(fact_.back() * r);
  }
}

Int StirlingTables::second_kind(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::lock_guard lock(mu_);
  grow_to(n);
  return s2_[n][k];
}

Int StirlingTables::first_kind(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::lock_guard lock(mu_);
  grow_to(n);
  return s1_[n][k];
}

Int StirlingTables::factorial(unsigned n) {
  std::lock_guard lock(mu_);
  grow_to(n);
  return fact_[n];
}

unsigned StirlingTables::rows() const {
  std::lock_guard lock(mu_);
  return static_cast<unsigned>(s1_.size());
}

Rat HarmonicCache::harmonic(unsigned n) {
  std::lock_guard lock(mu_);
  while (h_.size() <= n) {
    Rat next = h_.back() + Rat(1, static_cast<unsigned long>(h_.size()));
    h_.push_back(std::move(next));
  }
  return h_[n];
}

Rat HarmonicCache::generalized(unsigned n, unsigned m) {
  if (m == 0) throw std::domain_error("harmonic_gen: order m must be >= 1");
  if (m == 1) return harmonic(n);
  std::lock_guard lock(mu_);
  auto it = hm_.find({n, m});
  if (it != hm_.end()) return it->second;
  Rat sum = 0;
  for (unsigned i = 1; i <= n; ++i) sum += Rat(1, ipow(Int(i), m));
  hm_.emplace(std::make_pair(n, m), sum);
  return sum;
}

StirlingTables& stirling_tables() {
  static StirlingTables tables;
  return tables;
}

HarmonicCache& harmonic_cache() {
  static HarmonicCache cache;
  return cache;
}

Int stirling2(unsigned n, unsigned k) { return stirling_tables().second_kind(n, k); }
Int stirling1(unsigned n, unsigned k) { return stirling_tables().first_kind(n, k); }
Int factorial(unsigned n) { return stirling_tables().factorial(n); }

Rat harmonic(unsigned n) { return harmonic_cache().harmonic(n); }
Rat harmonic_gen(unsigned n, unsigned m) { return harmonic_cache().generalized(n, m); }

Rat falling_factorial(const Rat& x, unsigned n) {
  Rat out = 1;
  for (unsigned i = 0; i < n; ++i) out *= x - i;
  return out;
}

Rat rising_factorial(const Rat& x, unsigned n) {
  Rat out = 1;
  for (unsigned i = 0; i < n; ++i) out *= x + i;
  return out;
}

Rat binom(const Rat& x, unsigned k) {
  Rat out = falling_factorial(x, k);
  out /= factorial(k);
  return out;
}

Int binom_int(long n, unsigned k) {
  Int out;
  mpz_bin_ui(out.get_mpz_t(), Int(n).get_mpz_t(), k);
  return out;
}

}  // namespace bernkit
