#pragma once

// Catalog of Bernoulli/Stirling/harmonic identities, each stored as a pair of
// exact evaluators together with an explicit domain predicate, plus a sweep
// harness that records every counterexample it meets.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernkit/rat.hpp"

namespace bernkit {

/// Named parameters of one identity instance. Keys x and z carry rationals;
/// every other key (n, j, m, k, r, deg) is an integer.
using Params = std::map<std::string, Rat>;

struct IdentityCase {
  std::string id;
  Params params;
};

struct SidePair {
  Rat lhs;
  Rat rhs;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IdentityDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for MAIN at j = n, where the right side is 0 * B_0/0.
class IndeterminateRhs : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Sweep {
  unsigned n_max = 40;
  std::optional<unsigned> j_min;
  std::optional<unsigned> j_max;
  unsigned m_max = 20;
  /// Random rationals drawn per n (POLYX) or per m (AGOH_EQ11).
  unsigned samples = 10;
  std::uint64_t seed = 20240917;
  /// Also run MAIN at j = n and report each as a failure.
  bool include_j_equals_n = false;
  /// Bound for the GEN_WORPITZKY n - j = 1 convention probe.
  unsigned edge_n_max = 30;
  /// Mutation hook: the identity with this id has 1 added to its LHS.
  std::optional<std::string> fault;
};

struct Failure {
  std::string id;
  Params params;
  Rat lhs;
  /// Empty when the right side is indeterminate.
  std::optional<Rat> rhs;
};

struct IdentityReport {
  std::string id;
  std::string domain;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool pass() const { return failures.empty(); }
};

/// Brute-force look at GEN_WORPITZKY on n - j = 1, 2 <= n <= n_max, under
/// both conventions for B_1.
struct ConventionFinding {
  unsigned n_max = 0;
  unsigned cases = 0;
  unsigned closed_minus_half = 0;  // cases where LHS == RHS with B_1 = -1/2
  unsigned closed_plus_half = 0;   // cases where LHS == RHS with B_1 = +1/2
  std::vector<Rat> lhs_values;     // LHS for n = 2..n_max
  std::string summary;
};

std::vector<std::string_view> identity_ids();
std::string_view identity_statement(std::string_view id);
std::string_view identity_domain(std::string_view id);
bool in_domain(const IdentityCase& c);

/// Throws UnknownIdentity, IdentityDomainError or IndeterminateRhs.
SidePair eval_identity(const IdentityCase& c);

/// Runs every domain point of the sweep; never stops at the first failure.
IdentityReport verify_identity(std::string_view id, const Sweep& sweep);

ConventionFinding probe_gen_worpitzky_edge(unsigned n_max);

}  // namespace bernkit
