#include "bernkit/fps.hpp"

#include <algorithm>
#include <array>

#include "bernkit/seqcore.hpp"

namespace bernkit {

namespace {

void require_zero_constant(const Egf& f, const char* what) {
  if (f[0] != 0) throw SeriesError(std::string(what) + ": inner series must have zero constant term");
}

}  // namespace

Egf::Egf(unsigned order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1) throw SeriesError("more coefficients than order + 1");
  coeffs_.resize(order + 1, Rat(0));
}

Egf Egf::from_egf(unsigned order, std::span<const Rat> egf_values) {
  if (egf_values.size() > order + 1) throw SeriesError("more coefficients than order + 1");
  std::vector<Rat> cs(egf_values.begin(), egf_values.end());
  for (unsigned n = 0; n < cs.size(); ++n) cs[n] /= factorial(n);
  return Egf(order, std::move(cs));
}

Egf Egf::constant(unsigned order, const Rat& c) { return Egf(order, {c}); }

Egf Egf::t(unsigned order) {
  Egf out(order);
  if (order >= 1) out.coeffs_[1] = 1;
  return out;
}

Egf Egf::exp_linear(unsigned order, const Rat& a) {
  Egf out(order);
  Rat term = 1;
  for (unsigned n = 0; n <= order; ++n) {
    out.coeffs_[n] = term;
    term *= a;
    term /= n + 1;
  }
  return out;
}

Rat Egf::egf(unsigned n) const { return coeffs_.at(n) * factorial(n); }

Egf Egf::truncate(unsigned order) const {
  Egf out(order);
  const unsigned top = std::min(order, this->order());
  std::copy_n(coeffs_.begin(), top + 1, out.coeffs_.begin());
  return out;
}

Egf Egf::shift_down(unsigned k) const {
  if (k > order()) throw SeriesError("shift_down past the order");
  for (unsigned i = 0; i < k; ++i) {
    if (coeffs_[i] != 0) throw SeriesError("shift_down: leading coefficients must vanish");
  }
  return Egf(order() - k, std::vector<Rat>(coeffs_.begin() + k, coeffs_.end()));
}

Egf add(const Egf& a, const Egf& b) {
  const unsigned n = std::min(a.order(), b.order());
  std::vector<Rat> cs(n + 1);
  for (unsigned i = 0; i <= n; ++i) cs[i] = a[i] + b[i];
  return Egf(n, std::move(cs));
}

Egf sub(const Egf& a, const Egf& b) {
  const unsigned n = std::min(a.order(), b.order());
  std::vector<Rat> cs(n + 1);
  for (unsigned i = 0; i <= n; ++i) cs[i] = a[i] - b[i];
  return Egf(n, std::move(cs));
}

Egf scale(const Egf& a, const Rat& c) {
  std::vector<Rat> cs(a.coeffs().begin(), a.coeffs().end());
  for (Rat& v : cs) v *= c;
  return Egf(a.order(), std::move(cs));
}

Egf mul(const Egf& a, const Egf& b) {
  const unsigned n = std::min(a.order(), b.order());
  std::vector<Rat> cs(n + 1, Rat(0));
  for (unsigned i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) cs[i + j] += a[i] * b[j];
  }
  return Egf(n, std::move(cs));
}

Egf reciprocal(const Egf& a) {
  if (a[0] == 0) throw SeriesError("reciprocal: constant term must be nonzero");
  const unsigned n = a.order();
  std::vector<Rat> inv(n + 1, Rat(0));
  const Rat a0_inv = 1 / a[0];
  inv[0] = a0_inv;
  for (unsigned k = 1; k <= n; ++k) {
    Rat acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc += a[i] * inv[k - i];
    inv[k] = -acc * a0_inv;
  }
  return Egf(n, std::move(inv));
}

Egf power(const Egf& a, unsigned k) {
  Egf out = Egf::constant(a.order(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

Egf exp_series(const Egf& f) {
  require_zero_constant(f, "exp_series");
  const unsigned n = f.order();
  // g' = f' g  =>  m g_m = sum_{k=1}^{m} k f_k g_{m-k}
  std::vector<Rat> g(n + 1, Rat(0));
  g[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (unsigned k = 1; k <= m; ++k) acc += k * f[k] * g[m - k];
    g[m] = acc / m;
  }
  return Egf(n, std::move(g));
}

Egf log1p_series(const Egf& f) {
  require_zero_constant(f, "log1p_series");
  const unsigned n = f.order();
  // (1 + f) h' = f'  =>  m h_m = m f_m - sum_{k=1}^{m-1} k h_k f_{m-k}
  std::vector<Rat> h(n + 1, Rat(0));
  for (unsigned m = 1; m <= n; ++m) {
    Rat acc = m * f[m];
    for (unsigned k = 1; k < m; ++k) acc -= k * h[k] * f[m - k];
    h[m] = acc / m;
  }
  return Egf(n, std::move(h));
}

Egf compose(const Egf& g, const Egf& f) {
  require_zero_constant(f, "compose");
  const unsigned n = std::min(g.order(), f.order());
  Egf acc = Egf::constant(n, g[n]);
  const Egf inner = f.truncate(n);
  for (unsigned i = n; i-- > 0;) {
    acc = acc * inner;
    std::vector<Rat> cs(acc.coeffs().begin(), acc.coeffs().end());
    cs[0] += g[i];
    acc = Egf(n, std::move(cs));
  }
  return acc;
}

Egf polylog_series(unsigned p, const Egf& f) {
  require_zero_constant(f, "polylog_series");
  const unsigned n = f.order();
  std::vector<Rat> g(n + 1, Rat(0));
  for (unsigned k = 1; k <= n; ++k) g[k] = Rat(1, ipow(Int(k), p));
  return compose(Egf(n, std::move(g)), f);
}

Egf binomial_series(const Rat& a, const Egf& f) {
  require_zero_constant(f, "binomial_series");
  const unsigned n = f.order();
  std::vector<Rat> g(n + 1);
  for (unsigned k = 0; k <= n; ++k) g[k] = binom(a, k);
  return compose(Egf(n, std::move(g)), f);
}

Egf poly_bernoulli_egf(unsigned p, const Rat& x, unsigned order) {
  if (p == 0) throw SeriesError("poly_bernoulli_egf: polylog order must be >= 1");
  // Li_p(u)/u with u = 1 - e^{-t}; both vanish at 0, so build at order + 1
  // and cancel one power of t from numerator and denominator.
  const unsigned n = order + 1;
  const Egf u = Egf::constant(n, 1) - Egf::exp_linear(n, -1);
  const Egf ratio = polylog_series(p, u).shift_down(1) * reciprocal(u.shift_down(1));
  return ratio * Egf::exp_linear(order, x);
}

namespace {

constexpr std::array<std::string_view, 7> kSeriesNames = {
    "stirling2-egf", "harmonic-ogf", "harmonic-sq-ogf", "central-binomial-harmonic-ogf",
    "euler-egf",     "polybern",     "hw-half-egf",
};

// 1/(1 - t)
Egf geometric(unsigned order) { return Egf(order, std::vector<Rat>(order + 1, Rat(1))); }

// -ln(1 - t)
Egf neg_log_one_minus(unsigned order) { return scale(log1p_series(scale(Egf::t(order), -1)), -1); }

}  // namespace

std::vector<std::string_view> series_names() { return {kSeriesNames.begin(), kSeriesNames.end()}; }

Egf named_series(std::string_view name, unsigned order, const SeriesParams& params) {
  if (order == 0) throw SeriesError("series order must be >= 1");
  if (name == "stirling2-egf") {
    if (!params.k) throw SeriesError("stirling2-egf requires k");
    const Egf e1 = Egf::exp_linear(order, 1) - Egf::constant(order, 1);
    return scale(power(e1, *params.k), Rat(1) / Rat(factorial(*params.k)));
  }
  if (name == "harmonic-ogf") {
    return neg_log_one_minus(order) * geometric(order);
  }
  if (name == "harmonic-sq-ogf") {
    const Egf geo = geometric(order);
    const Egf l = neg_log_one_minus(order);
    return polylog_series(2, Egf::t(order)) * geo + l * l * geo;
  }
  if (name == "central-binomial-harmonic-ogf") {
    const Egf s = binomial_series(Rat(1, 2), scale(Egf::t(order), -4));  // sqrt(1 - 4t)
    const Egf s_inv = reciprocal(s);
    // (1 + s)/(2 s) - 1 has zero constant term
    const Egf arg = scale((Egf::constant(order, 1) + s) * s_inv, Rat(1, 2)) - Egf::constant(order, 1);
    return scale(s_inv * log1p_series(arg), 2);
  }
  if (name == "euler-egf") {
    const Rat x = params.x.value_or(Rat(0));
    const Egf denom = Egf::exp_linear(order, 1) + Egf::constant(order, 1);
    return scale(Egf::exp_linear(order, x) * reciprocal(denom), 2);
  }
  if (name == "polybern") {
    if (!params.p) throw SeriesError("polybern requires p");
    return poly_bernoulli_egf(*params.p, params.x.value_or(Rat(0)), order);
  }
  if (name == "hw-half-egf") {
    const Egf half = scale(Egf::exp_linear(order, 1) - Egf::constant(order, 1), Rat(1, 2));
    return scale(Egf::exp_linear(order, 1) * log1p_series(half), 2);
  }
  throw SeriesError("unknown series: " + std::string(name));
}

}  // namespace bernkit
