#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coiso/ring/polynomial.hpp"

namespace coiso {

// Seeded generator with platform-independent draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(int percent) { return uniform(0, 99) < percent; }
  Rational small_rational(long max_num = 3, long max_den = 2);
  // Random polynomial in `vars` with total degree <= max_degree; each monomial
  // is present with probability density_percent.
  Polynomial polynomial(const std::vector<int>& vars, int max_degree, int density_percent = 40,
                        long max_num = 3, long max_den = 2);

 private:
  std::mt19937_64 engine_;
};

}  // namespace coiso
