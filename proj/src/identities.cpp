#include "bernkit/identities.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <utility>

#include "bernkit/classical.hpp"
#include "bernkit/poly.hpp"
#include "bernkit/polybern.hpp"
#include "bernkit/seqcore.hpp"

namespace bernkit {

namespace {

using Side = std::function<Rat(const Params&)>;
using Predicate = std::function<bool(const Params&)>;

enum class Grid { N, NJ, NM, NX, MZ, KR };

struct Entry {
  std::string_view id;
  std::string_view statement;
  std::string_view domain;
  Grid grid;
  Predicate in_domain;
  Side lhs;
  Side rhs;
};

bool has(const Params& p, const char* key) { return p.count(key) != 0; }

long geti(const Params& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) throw IdentityDomainError(std::string("missing parameter ") + key);
  if (!is_integer(it->second)) throw IdentityDomainError(std::string("parameter must be an integer: ") + key);
  return it->second.get_num().get_si();
}

const Rat& getr(const Params& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) throw IdentityDomainError(std::string("missing parameter ") + key);
  return it->second;
}

unsigned u(long v) { return static_cast<unsigned>(v); }

Rat ratio(const Int& num, const Int& den) { return make_rat(num, den); }

// sum_{k=j}^{n} (-1)^{k-j} {n;k} [k;j] H_k
Rat stirling_harmonic_convolution(unsigned n, unsigned j) {
  Rat acc = 0;
  for (unsigned k = j; k <= n; ++k) {
    acc += sign_pow(static_cast<long>(k) - j) * Rat(stirling2(n, k) * stirling1(k, j)) * harmonic(k);
  }
  return acc;
}

// sum_{j=1}^{n} (C(n,j) - 1) B_j/j x^{n-j}
Poly agoh_left_poly(unsigned n) {
  std::vector<Rat> cs(n + 1, Rat(0));
  for (unsigned j = 1; j <= n; ++j) cs[n - j] = Rat(binom_int(n, j) - 1) * bernoulli(j) / j;
  return Poly(std::move(cs));
}

// Both sides of POLYX as polynomials in x, scaled by the lcm of all their
// denominators so the comparison is between integer coefficients.
struct ClearedPolys {
  std::vector<Int> lhs;
  std::vector<Int> rhs;
};

const ClearedPolys& cleared_polyx(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, ClearedPolys> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  const Poly left = agoh_left_poly(n);
  const Poly right = hw_poly(n) - Poly::monomial(harmonic(n), n);
  Int lcm = 1;
  for (const Rat& c : left.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const Rat& c : right.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ClearedPolys out;
  for (unsigned i = 0; i <= n; ++i) {
    Rat l = left.coeff(i) * lcm;
    Rat r = right.coeff(i) * lcm;
    out.lhs.push_back(l.get_num());
    out.rhs.push_back(r.get_num());
  }
  return memo.emplace(n, std::move(out)).first->second;
}

// sum_{k=1}^{n} (-1)^{n-k} {n;k} k! H_k^2
Rat stirling_harmonic_square(unsigned n) {
  Rat acc = 0;
  for (unsigned k = 1; k <= n; ++k) {
    const Rat h = harmonic(k);
    acc += sign_pow(static_cast<long>(n) - k) * Rat(stirling2(n, k) * factorial(k)) * h * h;
  }
  return acc;
}

Rat bernoulli_prefix_sum(unsigned n) {
  Rat acc = 0;
  for (unsigned j = 0; j <= n; ++j) acc += bernoulli(j);
  return acc;
}

// Sum of B_{n-j}/(n-j) with the binomial weight; n > j required.
Rat bernoulli_over_index(unsigned idx) { return bernoulli(idx) / idx; }

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      {"MAIN", "sum_{k=j}^{n} (-1)^{k-j} {n;k}[k;j] H_k = (C(n,j)-1) B_{n-j}/(n-j)",
       "n >= 1, 0 <= j <= n-1", Grid::NJ,
       [](const Params& p) -> bool {
         const long n = geti(p, "n"), j = geti(p, "j");
         return n >= 1 && j >= 0 && j <= n - 1;
       },
       [](const Params& p) -> Rat { return stirling_harmonic_convolution(u(geti(p, "n")), u(geti(p, "j"))); },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n")), j = u(geti(p, "j"));
         return Rat(binom_int(n, j) - 1) * bernoulli_over_index(n - j);
       }},

      {"WORPITZKY", "sum_{k=1}^{n} (-1)^k {n;k} k!/(k+1) = B_n", "n >= 1", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned k = 1; k <= n; ++k) acc += sign_pow(k) * ratio(stirling2(n, k) * factorial(k), Int(k + 1));
         return acc;
       },
       [](const Params& p) -> Rat { return bernoulli(u(geti(p, "n"))); }},

      {"GEN_WORPITZKY", "sum_{k=j}^{n} (-1)^{k-j}/k {n;k}[k;j] = C(n-1,j) B_{n-j}/(n-j)",
       "1 <= j, n - j >= 2 (n - j = 1 is probed separately)", Grid::NJ,
       [](const Params& p) -> bool {
         const long n = geti(p, "n"), j = geti(p, "j");
         return j >= 1 && n - j >= 2;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n")), j = u(geti(p, "j"));
         Rat acc = 0;
         for (unsigned k = j; k <= n; ++k) {
           acc += sign_pow(static_cast<long>(k) - j) * ratio(stirling2(n, k) * stirling1(k, j), Int(k));
         }
         return acc;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n")), j = u(geti(p, "j"));
         return Rat(binom_int(n - 1, j)) * bernoulli_over_index(n - j);
       }},

      {"H1", "sum_{k=1}^{n} (-1)^{k-1} {n;k} (k-1)! H_k = B_{n-1}", "n >= 2", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 2; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned k = 1; k <= n; ++k) acc += sign_pow(k - 1) * Rat(stirling2(n, k) * factorial(k - 1)) * harmonic(k);
         return acc;
       },
       [](const Params& p) -> Rat { return bernoulli(u(geti(p, "n") - 1)); }},

      {"H2", "sum_{k=2}^{n} (-1)^k {n;k} (k-1)! H_{k-1} H_k = (n+1)/2 B_{n-2}", "n >= 2", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 2; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned k = 2; k <= n; ++k) {
           acc += sign_pow(k) * Rat(stirling2(n, k) * factorial(k - 1)) * harmonic(k - 1) * harmonic(k);
         }
         return acc;
       },
       [](const Params& p) -> Rat {
         const long n = geti(p, "n");
         return make_rat(n + 1, 2) * bernoulli(u(n - 2));
       }},

      {"K3SPECIAL",
       "sum_{k=3}^{n} (-1)^{k-1} {n;k} (k-1)! ((H_{k-1})^2 - H_{k-1}^(2)) H_k = (n^2+2)/3 B_{n-3}", "n >= 4",
       Grid::N, [](const Params& p) -> bool { return geti(p, "n") >= 4; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned k = 3; k <= n; ++k) {
           const Rat h = harmonic(k - 1);
           acc += sign_pow(k - 1) * Rat(stirling2(n, k) * factorial(k - 1)) * (h * h - harmonic_gen(k - 1, 2)) *
                  harmonic(k);
         }
         return acc;
       },
       [](const Params& p) -> Rat {
         const long n = geti(p, "n");
         return make_rat(n * n + 2, 3) * bernoulli(u(n - 3));
       }},

      {"POLYX", "sum_{j=1}^{n} (C(n,j)-1) B_j/j x^{n-j} = hw(n,x) - H_n x^n",
       "n >= 1 and either x != 0, or deg in [0, n] comparing cleared coefficients of x^deg", Grid::NX,
       [](const Params& p) -> bool {
         const long n = geti(p, "n");
         if (n < 1) return false;
         if (has(p, "x") == has(p, "deg")) return false;
         if (has(p, "x")) return getr(p, "x") != 0;
         const long d = geti(p, "deg");
         return d >= 0 && d <= n;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         if (has(p, "deg")) return Rat(cleared_polyx(n).lhs[u(geti(p, "deg"))]);
         return agoh_left_poly(n)(getr(p, "x"));
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         if (has(p, "deg")) return Rat(cleared_polyx(n).rhs[u(geti(p, "deg"))]);
         const Rat& x = getr(p, "x");
         return hw(n, x) - harmonic(n) * ipow(x, n);
       }},

      {"AGOH", "sum_{j=1}^{n} (C(n,j)-1) B_j/j m^{n-j} = m^n (H_m - H_n) - sum_{j=1}^{m} (m-j)^n/j",
       "n >= 1, m >= 1", Grid::NM,
       [](const Params& p) -> bool { return geti(p, "n") >= 1 && geti(p, "m") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         const Int m(geti(p, "m"));
         Rat acc = 0;
         for (unsigned j = 1; j <= n; ++j) acc += Rat(binom_int(n, j) - 1) * bernoulli(j) / j * Rat(ipow(m, n - j));
         return acc;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n")), m = u(geti(p, "m"));
         Rat acc = Rat(ipow(Int(m), n)) * (harmonic(m) - harmonic(n));
         for (unsigned j = 1; j <= m; ++j) acc -= ratio(ipow(Int(m - j), n), Int(j));
         return acc;
       }},

      {"AGOH_ALT",
       "sum_{j=1}^{n} (-1)^j (C(n,j)-1) B_j/j m^{n-j} = m^n (H_m - H_n + (n-1)/m) - sum_{j=1}^{m} (m-j)^n/j",
       "n >= 1, m >= 1", Grid::NM,
       [](const Params& p) -> bool { return geti(p, "n") >= 1 && geti(p, "m") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         const Int m(geti(p, "m"));
         Rat acc = 0;
         for (unsigned j = 1; j <= n; ++j) {
           acc += sign_pow(j) * Rat(binom_int(n, j) - 1) * bernoulli(j) / j * Rat(ipow(m, n - j));
         }
         return acc;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n")), m = u(geti(p, "m"));
         Rat acc = Rat(ipow(Int(m), n)) * (harmonic(m) - harmonic(n) + make_rat(long(n) - 1, long(m)));
         for (unsigned j = 1; j <= m; ++j) acc -= ratio(ipow(Int(m - j), n), Int(j));
         return acc;
       }},

      {"AGOH_M1", "sum_{j=1}^{n} (-1)^j (C(n,j)-1) B_j/j = n - H_n", "n >= 1", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned j = 1; j <= n; ++j) acc += sign_pow(j) * Rat(binom_int(n, j) - 1) * bernoulli(j) / j;
         return acc;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         return Rat(n) - harmonic(n);
       }},

      {"AGOH_COMBINE", "sum_{j=1}^{n} (C(n,j)-1) B_j/j (1 - 2^{-j}) = (1 - 2^{n-1})/2^n", "n >= 1", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned j = 1; j <= n; ++j) {
           acc += Rat(binom_int(n, j) - 1) * bernoulli(j) / j * (1 - Rat(1, ipow(Int(2), j)));
         }
         return acc;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         return ratio(1 - ipow(Int(2), n - 1), ipow(Int(2), n));
       }},

      {"REC16", "sum_{j=1}^{n} (C(n,j)+1) B_j/j (1 - 2^j) = 1", "n >= 1", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned j = 1; j <= n; ++j) acc += Rat(binom_int(n, j) + 1) * bernoulli(j) / j * Rat(1 - ipow(Int(2), j));
         return acc;
       },
       [](const Params&) -> Rat { return Rat(1); }},

      {"REC16_EULER", "sum_{j=1}^{n} (C(n,j)+1) E_{j-1}/2 = 1", "n >= 1", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned j = 1; j <= n; ++j) acc += Rat(binom_int(n, j) + 1) * euler_number(j - 1) / 2;
         return acc;
       },
       [](const Params&) -> Rat { return Rat(1); }},

      {"AGOH_EQ11", "sum_{k=1}^{m} C(m,k) H_k (z-1)^k = H_m z^m - sum_{k=0}^{m-1} z^k/(m-k)", "m >= 1, any rational z",
       Grid::MZ, [](const Params& p) -> bool { return geti(p, "m") >= 1 && has(p, "z"); },
       [](const Params& p) -> Rat {
         const unsigned m = u(geti(p, "m"));
         const Rat zm1 = getr(p, "z") - 1;
         Rat acc = 0;
         for (unsigned k = 1; k <= m; ++k) acc += Rat(binom_int(m, k)) * harmonic(k) * ipow(zm1, k);
         return acc;
       },
       [](const Params& p) -> Rat {
         const unsigned m = u(geti(p, "m"));
         const Rat& z = getr(p, "z");
         Rat acc = harmonic(m) * ipow(z, m);
         for (unsigned k = 0; k < m; ++k) acc -= ipow(z, k) / (m - k);
         return acc;
       }},

      {"CUMSUM", "sum_{j=0}^{n} B_j = BB_n^(2)(1) + B_n - BB_n^(2) - 1", "n >= 2", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 2; },
       [](const Params& p) -> Rat { return bernoulli_prefix_sum(u(geti(p, "n"))); },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         return dibernoulli_at_one(n) + bernoulli(n) - dibernoulli(n) - 1;
       }},

      {"EQ14", "sum_{j=0}^{n} B_j = sum_{k=1}^{n} (-1)^{n-k} {n;k} k! H_k^2 + B_n(1) + n - n^2 - 1", "n >= 1",
       Grid::N, [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat { return bernoulli_prefix_sum(u(geti(p, "n"))); },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         return stirling_harmonic_square(n) + bernoulli_poly_at(n, 1) + Rat(long(n) - long(n) * long(n) - 1);
       }},

      {"HSQ_BRIDGE", "sum_{k=1}^{n} (-1)^{n-k} {n;k} k! H_k^2 = BB_n^(2)(1) - BB_n^(2) + n(n-1)", "n >= 1",
       Grid::N, [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat { return stirling_harmonic_square(u(geti(p, "n"))); },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         return dibernoulli_at_one(n) - dibernoulli(n) + Rat(long(n) * (long(n) - 1));
       }},

      {"HOCKEY", "sum_{k=0}^{j-1} C(n-k, j-k) = C(n+1, j) - 1", "1 <= j <= n", Grid::NJ,
       [](const Params& p) -> bool {
         const long n = geti(p, "n"), j = geti(p, "j");
         return j >= 1 && j <= n;
       },
       [](const Params& p) -> Rat {
         const long n = geti(p, "n"), j = geti(p, "j");
         Int acc = 0;
         for (long k = 0; k <= j - 1; ++k) acc += binom_int(n - k, u(j - k));
         return Rat(acc);
       },
       [](const Params& p) -> Rat { return Rat(binom_int(geti(p, "n") + 1, u(geti(p, "j"))) - 1); }},

      {"REDUCTION", "S(n+1,j) = S(n,j-1) + C(n,j) B_{n+1-j}/(n+1-j), S(n,j) = sum_{k=j}^{n} (-1)^{k-j} {n;k}[k;j] H_k",
       "1 <= j <= n", Grid::NJ,
       [](const Params& p) -> bool {
         const long n = geti(p, "n"), j = geti(p, "j");
         return j >= 1 && j <= n;
       },
       [](const Params& p) -> Rat { return stirling_harmonic_convolution(u(geti(p, "n") + 1), u(geti(p, "j"))); },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n")), j = u(geti(p, "j"));
         return stirling_harmonic_convolution(n, j - 1) + Rat(binom_int(n, j)) * bernoulli_over_index(n + 1 - j);
       }},

      {"STIRL20", "[k;1] = (k-1)! (r = 1) and [k;2] = (k-1)! H_{k-1} (r = 2)", "k >= 1, r in {1, 2}", Grid::KR,
       [](const Params& p) -> bool {
         const long r = geti(p, "r");
         return geti(p, "k") >= 1 && (r == 1 || r == 2);
       },
       [](const Params& p) -> Rat { return Rat(stirling1(u(geti(p, "k")), u(geti(p, "r")))); },
       [](const Params& p) -> Rat {
         const unsigned k = u(geti(p, "k"));
         const Rat f(factorial(k - 1));
         return geti(p, "r") == 1 ? f : f * harmonic(k - 1);
       }},

      {"BPINT", "sum_{j=0}^{n} C(n,j) B_j/(n-j+1) = integral_0^1 B_n(x) dx = 0", "n >= 2", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 2; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned j = 0; j <= n; ++j) acc += Rat(binom_int(n, j)) * bernoulli(j) / (n - j + 1);
         return acc;
       },
       [](const Params& p) -> Rat { return bernoulli_poly(u(geti(p, "n"))).integrate(0, 1); }},

      {"HW_CAUCHY", "sum_{j=0}^{n} B_j/(n-j+1) = 1 - (n+1) sum_{k=1}^{n} {n;k} c_k H_k", "n >= 1", Grid::N,
       [](const Params& p) -> bool { return geti(p, "n") >= 1; },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned j = 0; j <= n; ++j) acc += bernoulli(j) / (n - j + 1);
         return acc;
       },
       [](const Params& p) -> Rat {
         const unsigned n = u(geti(p, "n"));
         Rat acc = 0;
         for (unsigned k = 1; k <= n; ++k) acc += Rat(stirling2(n, k)) * cauchy1(k) * harmonic(k);
         return 1 - Rat(n + 1) * acc;
       }},
  };
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : catalog()) {
    if (e.id == id) return e;
  }
  throw UnknownIdentity("unknown identity: " + std::string(id));
}

Params make_params(std::initializer_list<std::pair<const char*, Rat>> kv) {
  Params p;
  for (const auto& [k, v] : kv) p.emplace(k, v);
  return p;
}

// FNV-1a; std::hash is not stable across implementations.
std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Rat> random_rationals(std::uint64_t seed, std::string_view id, unsigned index, unsigned count,
                                  bool nonzero) {
  std::mt19937_64 rng(seed ^ stable_hash(id) ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rat> out;
  while (out.size() < count) {
    const long a = num(rng), b = den(rng);
    if (nonzero && a == 0) continue;
    out.push_back(make_rat(a, b));
  }
  return out;
}

std::vector<Params> candidates(const Entry& e, const Sweep& sweep) {
  std::vector<Params> out;
  const unsigned n_max = sweep.n_max;
  switch (e.grid) {
    case Grid::N:
      for (unsigned n = 0; n <= n_max; ++n) out.push_back(make_params({{"n", Rat(n)}}));
      break;
    case Grid::NJ: {
      const unsigned j_lo = sweep.j_min.value_or(0);
      const unsigned j_hi = std::min(sweep.j_max.value_or(n_max), n_max);
      for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned j = j_lo; j <= j_hi; ++j) out.push_back(make_params({{"n", Rat(n)}, {"j", Rat(j)}}));
      }
      break;
    }
    case Grid::NM:
      for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned m = 0; m <= sweep.m_max; ++m) out.push_back(make_params({{"n", Rat(n)}, {"m", Rat(m)}}));
      }
      break;
    case Grid::NX:
      for (unsigned n = 0; n <= n_max; ++n) {
        for (const Rat& x : random_rationals(sweep.seed, e.id, n, sweep.samples, true)) {
          out.push_back(make_params({{"n", Rat(n)}, {"x", x}}));
        }
        for (unsigned d = 0; d <= n; ++d) out.push_back(make_params({{"n", Rat(n)}, {"deg", Rat(d)}}));
      }
      break;
    case Grid::MZ:
      for (unsigned m = 0; m <= sweep.m_max; ++m) {
        for (const Rat& z : random_rationals(sweep.seed, e.id, m, sweep.samples, false)) {
          out.push_back(make_params({{"m", Rat(m)}, {"z", z}}));
        }
      }
      break;
    case Grid::KR:
      for (unsigned k = 0; k <= n_max; ++k) {
        for (unsigned r = 1; r <= 2; ++r) out.push_back(make_params({{"k", Rat(k)}, {"r", Rat(r)}}));
      }
      break;
  }
  return out;
}

std::string describe(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ", ";
    s += k + "=" + (is_integer(v) ? v.get_num().get_str() : to_string(v));
  }
  return s;
}

}  // namespace

std::vector<std::string_view> identity_ids() {
  std::vector<std::string_view> ids;
  for (const Entry& e : catalog()) ids.push_back(e.id);
  return ids;
}

std::string_view identity_statement(std::string_view id) { return find_entry(id).statement; }
std::string_view identity_domain(std::string_view id) { return find_entry(id).domain; }

bool in_domain(const IdentityCase& c) {
  const Entry& e = find_entry(c.id);
  try {
    return e.in_domain(c.params);
  } catch (const IdentityDomainError&) {
    return false;
  }
}

SidePair eval_identity(const IdentityCase& c) {
  const Entry& e = find_entry(c.id);
  if (e.id == "MAIN" && has(c.params, "n") && has(c.params, "j")) {
    const long n = geti(c.params, "n"), j = geti(c.params, "j");
    if (n >= 0 && j == n) {
      throw IndeterminateRhs("MAIN at j = n: right side (C(n,n)-1) B_0/0 is indeterminate");
    }
  }
  if (!e.in_domain(c.params)) {
    throw IdentityDomainError(std::string(e.id) + ": parameters outside domain (" + std::string(e.domain) +
                              "): " + describe(c.params));
  }
  return {e.lhs(c.params), e.rhs(c.params)};
}

IdentityReport verify_identity(std::string_view id, const Sweep& sweep) {
  const Entry& e = find_entry(id);
  IdentityReport report;
  report.id = std::string(e.id);
  report.domain = std::string(e.domain);
  const bool faulty = sweep.fault && *sweep.fault == e.id;

  for (const Params& params : candidates(e, sweep)) {
    if (!e.in_domain(params)) continue;
    ++report.cases;
    Rat lhs = e.lhs(params);
    if (faulty) lhs += 1;
    Rat rhs = e.rhs(params);
    if (lhs != rhs) report.failures.push_back({report.id, params, std::move(lhs), std::move(rhs)});
  }

  if (e.id == "MAIN") {
    report.notes.push_back(
        "j = n is excluded from the domain: the right side (C(n,n)-1) B_0/0 is 0 * infinity while the left side "
        "equals H_n");
    if (sweep.include_j_equals_n) {
      for (unsigned n = 1; n <= sweep.n_max; ++n) {
        if (sweep.j_min && n < *sweep.j_min) continue;
        if (sweep.j_max && n > *sweep.j_max) continue;
        ++report.cases;
        Rat lhs = stirling_harmonic_convolution(n, n);
        if (faulty) lhs += 1;
        report.failures.push_back({report.id, make_params({{"j", Rat(n)}, {"n", Rat(n)}}), std::move(lhs), {}});
      }
      report.notes.push_back("--include-j-equals-n: each j = n case is reported as a failure with an "
                             "indeterminate right side");
    }
  }
  if (e.id == "GEN_WORPITZKY") {
    report.notes.push_back(probe_gen_worpitzky_edge(std::min(sweep.n_max, sweep.edge_n_max)).summary);
  }
  if (e.id == "POLYX") {
    report.notes.push_back("checked at " + std::to_string(sweep.samples) + " nonzero random rationals x per n (seed " +
                           std::to_string(sweep.seed) +
                           ") and coefficientwise in x after scaling both sides by the lcm of their denominators");
  }
  if (e.id == "AGOH_EQ11") {
    report.notes.push_back("checked at " + std::to_string(sweep.samples) + " random rationals z per m (seed " +
                           std::to_string(sweep.seed) + ")");
  }
  if (faulty) report.notes.push_back("fault injected: left side shifted by +1");

  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const Failure& a, const Failure& b) { return a.params < b.params; });
  return report;
}

ConventionFinding probe_gen_worpitzky_edge(unsigned n_max) {
  const Entry& e = find_entry("GEN_WORPITZKY");
  ConventionFinding f;
  f.n_max = n_max;
  const Rat minus_half = make_rat(-1, 2), plus_half = make_rat(1, 2);
  for (unsigned n = 2; n <= n_max; ++n) {
    const unsigned j = n - 1;
    const Rat lhs = e.lhs(make_params({{"n", Rat(n)}, {"j", Rat(j)}}));
    // Right side at n - j = 1 is C(n-1, n-1) B_1 / 1 = B_1.
    ++f.cases;
    if (lhs == minus_half) ++f.closed_minus_half;
    if (lhs == plus_half) ++f.closed_plus_half;
    f.lhs_values.push_back(lhs);
  }
  std::string verdict;
  if (f.cases == 0) {
    verdict = "no cases in range";
  } else if (f.closed_plus_half == f.cases && f.closed_minus_half == 0) {
    verdict = "the identity closes only with B_1 = +1/2";
  } else if (f.closed_minus_half == f.cases && f.closed_plus_half == 0) {
    verdict = "the identity closes with B_1 = -1/2";
  } else {
    verdict = "neither convention closes every case";
  }
  f.summary = "n - j = 1 probe over 2 <= n <= " + std::to_string(n_max) + ": " + std::to_string(f.cases) +
              " cases; closed under B_1 = -1/2: " + std::to_string(f.closed_minus_half) +
              ", closed under B_1 = +1/2: " + std::to_string(f.closed_plus_half) + "; " + verdict;
  return f;
}

}  // namespace bernkit
