#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bernkit {

using Int = mpz_class;
// mpq_class keeps num/den in lowest terms with den > 0 after every
// arithmetic operation; make_rat and parse_rat canonicalize explicitly.
using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

/// "num/den" in lowest terms, integers as "p/1".
std::string to_string(const Rat& r);

/// Accepts "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input and std::domain_error on a zero denominator.
Rat parse_rat(std::string_view text);

Rat ipow(const Rat& base, unsigned exp);
Int ipow(const Int& base, unsigned exp);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// (-1)^e as a small integer.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace bernkit
