#pragma once

#include <string>
#include <vector>

#include "coiso/presymplectic/presymplectic.hpp"
#include "coiso/ring/random.hpp"

namespace coiso::testing {

// n leaf coordinates, d = 2, W = w (du1 ^ du2) and G of degree <= 1. With `exact` the entry w is a
// nonzero constant; otherwise w is affine and the reference point is drawn where w != 0.
inline PreSympData random_presymplectic(int n, Rng& rng, bool exact) {
  std::vector<std::string> x;
  for (int i = 0; i < n; ++i) x.push_back("x" + std::to_string(i + 1));
  std::vector<int> vars(n + 2);
  for (int k = 0; k < n + 2; ++k) vars[k] = k;
  Rational w0 = 0;
  while (w0 == 0) w0 = rng.small_rational(3, 2);
  Polynomial w(w0);
  while (!exact && w.is_constant())
    for (int v : vars)
      if (rng.chance(50)) w += rng.small_rational(2, 1) * Polynomial::variable(v);
  std::vector<std::vector<Polynomial>> G(n, std::vector<Polynomial>(2));
  for (auto& row : G)
    for (auto& g : row) g = rng.polynomial(vars, 1, 60);
  std::vector<Rational> ref(n + 2, Rational(0));
  if (!exact) {
    while (true) {
      for (auto& r : ref) r = make_rational(rng.uniform(-2, 2), 2);
      std::vector<std::optional<Polynomial>> at(2 * n + 2);
      for (int k = 0; k < n + 2; ++k) at[k] = Polynomial(ref[k]);
      if (!w.substitute(at).is_zero()) break;
    }
  }
  PolyMatrix W{{Polynomial(), w}, {-w, Polynomial()}};
  return make_presymplectic(x, {"u1", "u2"}, W, G, ref);
}

// d^m/dp_idx of the truncated Neumann series sum_{j<=m} (-W^{-1} p.F)^j W^{-1}, at p = 0.
inline PolyMatrix neumann_jet(const PreSympData& data, const IndexTuple& idx) {
  const PolyMatrix winv = w_inverse(data).inverse;
  const auto F = curvature_F(data);
  PolyMatrix pF = zero_matrix(data.d, data.d);
  for (int i = 0; i < data.n; ++i) {
    PolyMatrix term = F[i];
    for (auto& row : term)
      for (auto& e : row) e *= Polynomial::variable(data.p(i));
    pF = add(pF, term);
  }
  const PolyMatrix step = scale(multiply(winv, pF), -1);
  PolyMatrix power = identity_matrix(data.d), series = zero_matrix(data.d, data.d);
  for (std::size_t j = 0; j <= idx.size(); ++j) {
    series = add(series, multiply(power, winv));
    power = multiply(power, step);
  }
  for (int i : idx)
    for (auto& row : series)
      for (auto& e : row) e = e.derivative(data.p(i));
  return substitute(series, [&] {
    std::vector<std::optional<Polynomial>> at(data.patch->dim());
    for (int i = 0; i < data.n; ++i) at[data.p(i)] = Polynomial();
    return at;
  }());
}

// True when every component has no terms of fiber degree <= order.
inline bool vanishes_through(const MultiOperator& op, int order) {
  const VarMask fiber = op.patch()->fiber_mask();
  for (const auto* t : {&op.X(), &op.G()})
    for (const auto& [idx, c] : t->entries())
      if (!c.truncate(fiber, order).is_zero()) return false;
  return true;
}

// Generator tuples of arity 1..max_arity: leafwise differentials and random functions of (x, u),
// with at most two functions and at least one sample for every (forms, functions) split.
inline std::vector<std::vector<NormalMultiSection>> generator_tuples(const PreSympData& data, int max_arity, Rng& rng) {
  std::vector<int> base(data.n + data.d);
  for (int k = 0; k < data.n + data.d; ++k) base[k] = k;
  std::vector<std::vector<NormalMultiSection>> out;
  for (int arity = 1; arity <= max_arity; ++arity)
    for (int r = 0; r <= std::min(arity, 2); ++r)
      for (int sample = 0; sample < 2; ++sample) {
        std::vector<NormalMultiSection> args;
        for (int k = 0; k < arity - r; ++k) args.push_back(NormalMultiSection::delta(data.patch, rng.uniform(0, data.n - 1)));
        for (int k = 0; k < r; ++k) {
          Polynomial f;
          while (f.is_zero()) f = rng.polynomial(base, 2, 60);
          args.push_back(NormalMultiSection::section(data.patch, f));
        }
        for (std::size_t k = args.size(); k > 1; --k) std::swap(args[k - 1], args[rng.uniform(0, static_cast<long>(k) - 1)]);
        out.push_back(std::move(args));
      }
  return out;
}

}  // namespace coiso::testing
