#pragma once

#include <array>
#include <cstdint>

#include "fanohs/rational.hpp"

namespace fanohs {

// Deterministic splitmix64 stream; all randomized sampling (evaluation
// points, line directions) goes through this so runs are reproducible from
// a seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Small-height coordinate palette used for exact identity checks.
  Rational sample_coordinate() {
    static const std::array<std::pair<long, long>, 10> palette = {{
        {1, 2}, {-1, 2}, {2, 1}, {-2, 1}, {3, 1},
        {-3, 1}, {1, 3}, {-1, 3}, {5, 2}, {-5, 2},
    }};
    auto [n, d] = palette[next() % palette.size()];
    return rat(n, d);
  }

  QVec sample_point(int m) {
    QVec out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out.push_back(sample_coordinate());
    return out;
  }

  // Nonzero integer in [-bound, bound].
  std::int64_t small_nonzero(std::int64_t bound = 5) {
    std::int64_t v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }

  // Rational of small height, numerator in [-num_bound, num_bound].
  Rational small_rational(long num_bound = 8, long den_bound = 6) {
    long den = static_cast<long>(uniform(1, den_bound));
    long num = static_cast<long>(uniform(-num_bound, num_bound));
    return rat(num, den);
  }

private:
  std::uint64_t state_;
};

}  // namespace fanohs
