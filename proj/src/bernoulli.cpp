#include "fanohs/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace fanohs {

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational bernoulli_plus(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache{rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    // C(m+1,m) B_m = (m+1) - sum_{k<m} C(m+1,k) B_k
    Rational acc(static_cast<long>(m) + 1);
    for (unsigned k = 0; k < m; ++k) acc -= binomial(m + 1, k) * cache[k];
    cache.push_back(Rational(acc / Rational(static_cast<long>(m) + 1)));
  }
  return cache[n];
}

}  // namespace fanohs
