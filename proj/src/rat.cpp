#include "bernkit/rat.hpp"

#include <stdexcept>

namespace bernkit {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Int parse_int(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: " + std::string(s));
  }
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Int(buf, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("denominator must be unsigned: " + std::string(text));
  }
  return make_rat(num, parse_int(den_text));
}

Int ipow(const Int& base, unsigned exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rat ipow(const Rat& base, unsigned exp) {
  Rat out(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  // Powers of a reduced fraction stay reduced; only the sign needs care.
  out.canonicalize();
  return out;
}

}  // namespace bernkit
