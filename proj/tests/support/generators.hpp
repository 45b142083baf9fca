#pragma once

#include <numeric>
#include <vector>

#include "coiso/operators/multi_operator.hpp"
#include "coiso/vdata/vdata.hpp"
#include "coiso/ring/random.hpp"

namespace coiso::testing {

inline std::vector<int> patch_vars(const Patch& p) {
  std::vector<int> v(p.dim());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline std::vector<int> base_vars(const Patch& p) {
  std::vector<int> v(p.n());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline std::vector<int> fiber_vars(const Patch& p) {
  std::vector<int> v(p.d());
  std::iota(v.begin(), v.end(), p.n());
  return v;
}

// Random operator whose components have degree <= max_degree; roughly `density` percent of
// the component slots are nonzero.
inline MultiOperator random_operator(const PatchPtr& patch, int arity, Rng& rng, int max_degree = 2,
                                     int density = 50) {
  MultiOperator op(patch, arity);
  const auto vars = patch_vars(*patch);
  if (arity == 0) {
    op.X().set({}, rng.polynomial(vars, max_degree, 50));
    return op;
  }
  for (const IndexTuple& t : increasing_tuples(patch->dim(), arity))
    if (rng.chance(density)) op.X().set(t, rng.polynomial(vars, max_degree, 35));
  for (const IndexTuple& t : increasing_tuples(patch->dim(), arity - 1))
    if (rng.chance(density)) op.G().set(t, rng.polynomial(vars, max_degree, 35));
  return op;
}

inline std::vector<Polynomial> random_sections(const Patch& patch, int count, Rng& rng, int max_degree = 2) {
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) out.push_back(rng.polynomial(patch_vars(patch), max_degree, 50));
  return out;
}

inline NormalMultiSection random_normal(const PatchPtr& patch, int degree, Rng& rng, int max_degree = 2,
                                        int density = 70) {
  NormalMultiSection xi(patch, degree);
  const auto vars = base_vars(*patch);
  for (const IndexTuple& t : increasing_tuples(patch->d(), degree))
    if (rng.chance(density)) xi.set(t, rng.polynomial(vars, max_degree, 50));
  return xi;
}

}  // namespace coiso::testing
