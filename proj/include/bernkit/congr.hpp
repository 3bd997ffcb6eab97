#pragma once

// Reduction of exact rationals modulo p and p^2, and a catalog of prime
// congruences for sums of Bernoulli, Euler and Cauchy numbers. Every
// expression is summed exactly in Rat before it is reduced.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernkit/rat.hpp"

namespace bernkit {

struct Residue {
  Int value;    // 0 <= value < modulus
  Int modulus;  // p or p^2

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// The reduced denominator shares the factor p with the modulus, so the
/// congruence is not defined for this value.
class DenominatorDivisibleByP : public std::domain_error {
 public:
  DenominatorDivisibleByP(std::string term, const Rat& value)
      : std::domain_error("denominator divisible by p in " + term + " = " + to_string(value)),
        term_(std::move(term)) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

class UnknownCongruence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(unsigned long n);
/// Odd primes 3 <= p <= bound, by sieve.
std::vector<unsigned> odd_primes_up_to(unsigned bound);

/// num * den^{-1} mod modulus, where modulus is p or p^2 and p an odd prime.
/// `term` names the expression in the DenominatorDivisibleByP message.
Residue rational_mod(const Rat& r, const Int& modulus, unsigned long p, std::string_view term = "value");

struct CongruenceCheck {
  std::string label;
  Rat lhs_exact;
  Rat rhs_exact;
  Residue lhs;
  Residue rhs;
  bool pass = false;
};

struct CongruenceResult {
  std::string id;
  unsigned p = 0;
  bool skipped = false;
  std::string skip_reason;
  /// Set when a DenominatorDivisibleByP was raised during a sweep.
  std::string error;
  std::vector<CongruenceCheck> checks;

  bool pass() const;
};

std::vector<std::string_view> congruence_ids();
std::string_view congruence_statement(std::string_view id);
/// Smallest prime the entry applies to (3 or 5).
unsigned congruence_min_prime(std::string_view id);

/// Throws UnknownCongruence, std::invalid_argument when p is not an odd
/// prime, and propagates DenominatorDivisibleByP. Below the entry's lower
/// bound the result is marked skipped.
CongruenceResult check_congruence(std::string_view id, unsigned p);

struct PrimeSweepReport {
  unsigned p_max = 0;
  std::vector<CongruenceResult> results;  // ordered by (catalog id, p)
  std::vector<std::string> notes;

  std::size_t cases() const;
  std::size_t failure_count() const;
  bool pass() const { return failure_count() == 0; }
};

/// Runs the selected ids over every odd prime <= p_max. Never throws for
/// failures; ill-posed reductions are recorded on the result.
PrimeSweepReport prime_sweep(std::span<const std::string> ids, unsigned p_max);

}  // namespace bernkit
