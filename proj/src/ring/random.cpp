#include "coiso/ring/random.hpp"

#include <functional>

namespace coiso {

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::small_rational(long max_num, long max_den) {
  long num = 0;
  while (num == 0) num = uniform(-max_num, max_num);
  return make_rational(num, uniform(1, max_den));
}

Polynomial Rng::polynomial(const std::vector<int>& vars, int max_degree, int density_percent, long max_num,
                           long max_den) {
  std::vector<Term> terms;
  Monomial m;
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int budget) {
    if (i == vars.size()) {
      if (chance(density_percent)) terms.push_back({m, small_rational(max_num, max_den)});
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      m.set_exponent(vars[i], e);
      walk(i + 1, budget - e);
    }
    m.set_exponent(vars[i], 0);
  };
  if (max_degree >= 0) walk(0, max_degree);
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace coiso
