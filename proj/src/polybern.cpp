#include "bernkit/polybern.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "bernkit/fps.hpp"

namespace bernkit {

namespace {

class PolyBernoulliCache {
 public:
  Rat get(unsigned n, unsigned p, const Rat& x) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(p, to_string(x));
    auto it = series_.find(key);
    if (it == series_.end() || it->second.order() < n) {
      const unsigned old = it == series_.end() ? 0 : it->second.order();
      const unsigned order = std::max({n, 2 * old, 16u});
      it = series_.insert_or_assign(key, poly_bernoulli_egf(p, x, order)).first;
    }
    return it->second.egf(n);
  }

 private:
  std::mutex mu_;
  std::map<std::pair<unsigned, std::string>, Egf> series_;
};

PolyBernoulliCache& cache() {
  static PolyBernoulliCache c;
  return c;
}

}  // namespace

Rat poly_bernoulli(unsigned n, unsigned p, const Rat& x) {
  if (p == 0) throw SeriesError("poly_bernoulli: p must be >= 1");
  return cache().get(n, p, x);
}

PolyBernoulliValue poly_bernoulli_value(unsigned n, unsigned p, const Rat& x) {
  return {n, p, x, poly_bernoulli(n, p, x)};
}

Rat dibernoulli(unsigned n) { return poly_bernoulli(n, 2, Rat(0)); }
Rat dibernoulli_at_one(unsigned n) { return poly_bernoulli(n, 2, Rat(1)); }

}  // namespace bernkit
