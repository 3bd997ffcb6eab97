#include "bernkit/congr.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "bernkit/classical.hpp"
#include "bernkit/seqcore.hpp"

namespace bernkit {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> odd_primes_up_to(unsigned bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned> out;
  for (unsigned i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    if (i != 2) out.push_back(i);
    for (unsigned long m = static_cast<unsigned long>(i) * i; m <= bound; m += i) composite[m] = true;
  }
  return out;
}

Residue rational_mod(const Rat& r, const Int& modulus, unsigned long p, std::string_view term) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("rational_mod: p must be an odd prime");
  const Int pz(p);
  if (modulus != pz && modulus != pz * pz) throw std::invalid_argument("rational_mod: modulus must be p or p^2");
  if (r.get_den() % pz == 0) throw DenominatorDivisibleByP(std::string(term), r);
  Int inv;
  mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), modulus.get_mpz_t());
  Int v = r.get_num() * inv;
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return {v, modulus};
}

bool CongruenceResult::pass() const {
  if (skipped) return true;
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CongruenceCheck& c) { return c.pass; });
}

std::size_t PrimeSweepReport::cases() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CongruenceResult& r) { return !r.skipped; }));
}

std::size_t PrimeSweepReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CongruenceResult& r) { return !r.pass(); }));
}

namespace {

struct Builder {
  unsigned p;
  CongruenceResult& out;

  void check(std::string label, const Rat& lhs, const Rat& rhs, bool square) {
    const Int pz(p);
    const Int modulus = square ? Int(pz * pz) : pz;
    CongruenceCheck c;
    c.lhs = rational_mod(lhs, modulus, p, out.id + " " + label + " lhs");
    c.rhs = rational_mod(rhs, modulus, p, out.id + " " + label + " rhs");
    c.label = std::move(label);
    c.lhs_exact = lhs;
    c.rhs_exact = rhs;
    c.pass = c.lhs == c.rhs;
    out.checks.push_back(std::move(c));
  }
};

Rat sum_p_bernoulli(unsigned p) {
  Rat acc = 0;
  for (unsigned j = 0; j <= p; ++j) acc += bernoulli(j);
  return acc * p;
}

Rat p_weighted_tail(unsigned p) {
  Rat acc = 0;
  for (unsigned j = 0; j <= p; ++j) acc += bernoulli(j) / (p - j + 1);
  return acc * p;
}

struct Entry {
  std::string_view id;
  std::string_view statement;
  unsigned min_prime;
  std::function<void(Builder&)> run;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      {"C1", "sum_{j=0}^{p} p B_j == -1 (mod p)", 3,
       [](Builder& b) { b.check("sum", sum_p_bernoulli(b.p), -1, false); }},
      {"C2", "sum_{j=0}^{p} E_j == 3/2 (mod p)", 3,
       [](Builder& b) {
         Rat acc = 0;
         for (unsigned j = 0; j <= b.p; ++j) acc += euler_number(j);
         b.check("sum", acc, make_rat(3, 2), false);
       }},
      {"C3", "p sum_{j=0}^{p} B_j/(p-j+1) == -1 (mod p)", 3,
       [](Builder& b) { b.check("sum", p_weighted_tail(b.p), -1, false); }},
      {"C4", "sum_{j=0}^{p-3} B_j == -1 (mod p), p >= 5", 5,
       [](Builder& b) {
         Rat acc = 0;
         for (unsigned j = 0; j + 3 <= b.p; ++j) acc += bernoulli(j);
         b.check("sum", acc, -1, false);
       }},
      {"C1SQ", "sum_{j=0}^{p} p B_j == (p-1)! (mod p^2)", 3,
       [](Builder& b) {
         const Rat lhs = sum_p_bernoulli(b.p);
         b.check("sum", lhs, Rat(factorial(b.p - 1)), true);
         // Reducing the p^2 statement mod p must reproduce C1.
         const Residue sq = b.out.checks.back().lhs;
         Rat reduced(sq.value);
         b.check("mod p implies C1", reduced, -1, false);
       }},
      {"C3SQ", "p sum_{j=0}^{p} B_j/(p-j+1) == -p/2 - c_p (mod p^2)", 3,
       [](Builder& b) { b.check("sum", p_weighted_tail(b.p), make_rat(-long(b.p), 2) - cauchy1(b.p), true); }},
      {"GLAISHER", "(p-1)! == -p + p B_{p-1} (mod p^2)", 3,
       [](Builder& b) {
         b.check("factorial", Rat(factorial(b.p - 1)), Rat(-long(b.p)) + b.p * bernoulli(b.p - 1), true);
       }},
      {"BABBAGE", "H_{p-1} == 0 (mod p)", 3, [](Builder& b) { b.check("H", harmonic(b.p - 1), 0, false); }},
      {"VSC", "p B_{2j} == -1 (mod p) if (p-1) | 2j, else 0, for 1 <= j <= p-1", 3,
       [](Builder& b) {
         for (unsigned j = 1; j <= b.p - 1; ++j) {
           const bool divides = (2 * j) % (b.p - 1) == 0;
           b.check("j=" + std::to_string(j), b.p * bernoulli(2 * j), divides ? -1 : 0, false);
         }
       }},
      {"CP1", "c_p == 1 (mod p) and p c_{p-1} == 1 (mod p)", 3,
       [](Builder& b) {
         b.check("c_p", cauchy1(b.p), 1, false);
         b.check("p c_{p-1}", b.p * cauchy1(b.p - 1), 1, false);
       }},
      {"STIRP", "{p;k} == 0 (mod p) for 2 <= k <= p-1", 3,
       [](Builder& b) {
         for (unsigned k = 2; k <= b.p - 1; ++k) b.check("k=" + std::to_string(k), Rat(stirling2(b.p, k)), 0, false);
       }},
  };
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : catalog()) {
    if (e.id == id) return e;
  }
  throw UnknownCongruence("unknown congruence: " + std::string(id));
}

}  // namespace

std::vector<std::string_view> congruence_ids() {
  std::vector<std::string_view> ids;
  for (const Entry& e : catalog()) ids.push_back(e.id);
  return ids;
}

std::string_view congruence_statement(std::string_view id) { return find_entry(id).statement; }
unsigned congruence_min_prime(std::string_view id) { return find_entry(id).min_prime; }

CongruenceResult check_congruence(std::string_view id, unsigned p) {
  const Entry& e = find_entry(id);
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("check_congruence: p must be an odd prime");
  CongruenceResult out;
  out.id = std::string(e.id);
  out.p = p;
  if (p < e.min_prime) {
    out.skipped = true;
    out.skip_reason = "requires p >= " + std::to_string(e.min_prime);
    return out;
  }
  Builder b{p, out};
  e.run(b);
  return out;
}

PrimeSweepReport prime_sweep(std::span<const std::string> ids, unsigned p_max) {
  PrimeSweepReport report;
  report.p_max = p_max;
  const std::vector<unsigned> primes = odd_primes_up_to(p_max);
  for (const std::string& id : ids) {
    const Entry& e = find_entry(id);
    for (unsigned p : primes) {
      try {
        report.results.push_back(check_congruence(e.id, p));
      } catch (const DenominatorDivisibleByP& err) {
        CongruenceResult r;
        r.id = std::string(e.id);
        r.p = p;
        r.error = err.what();
        report.results.push_back(std::move(r));
      }
    }
  }
  std::stable_sort(report.results.begin(), report.results.end(), [](const CongruenceResult& a, const CongruenceResult& b) {
    const auto ids = congruence_ids();
    const auto ia = std::find(ids.begin(), ids.end(), a.id) - ids.begin();
    const auto ib = std::find(ids.begin(), ids.end(), b.id) - ids.begin();
    return ia != ib ? ia < ib : a.p < b.p;
  });
  if (std::find(ids.begin(), ids.end(), "C2") != ids.end() && p_max >= 3) {
    report.notes.push_back("C2 at p = 3: E_0 + E_1 + E_2 + E_3 = 3/4, and 3/4 == 0 == 3/2 (mod 3)");
  }
  if (std::find(ids.begin(), ids.end(), "C4") != ids.end() && p_max >= 3) {
    report.notes.push_back("C4 is skipped at p = 3 (requires p >= 5)");
  }
  if (std::find(ids.begin(), ids.end(), "CP1") != ids.end()) {
    report.notes.push_back("CP1 is checked directly on c_p and c_{p-1}; the degenerate family c_k(lambda) is not built");
  }
  return report;
}

}  // namespace bernkit
