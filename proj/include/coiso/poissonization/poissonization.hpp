#pragma once

#include <string>
#include <vector>

#include "coiso/operators/jacobi.hpp"
#include "coiso/poissonization/multivector.hpp"

namespace coiso {

// Coordinates of the patch followed by the homogeneity coordinate t at index patch.dim().
int t_index(const Patch& patch);
VariableContext tilde_context(const Patch& patch);

// Homogeneous multivector with box~(t f_1, .., t f_k) = t box(f_1, .., f_k):
// k! X^I t^{1-k} on d_I and (k-1)! G^I t^{2-k} on d_I ^ d_t; a section f maps to t f.
MultiVector tilde_op(const MultiOperator& op);

// Bivector with Pi(d(t f), d(t g)) = t J(f, g), solved from evaluations on t and t z^a.
MultiVector poissonize(const JacobiStructure& J);

// Euler field t d_t.
MultiVector euler_field(const Patch& patch);

// Evaluates a homogeneous multivector on the functions t f_i and divides by t.
Polynomial untilde_apply(const MultiVector& m, const Patch& patch, const std::vector<Polynomial>& f);

// Pure-fiber entries restricted to y = 0 (the normal part along pr^{-1}(S)).
MultiVector normal_part(const MultiVector& m, const Patch& patch);

struct PoissonizationReport {
  bool homogeneous = false;
  bool poisson = false;
  bool jacobi = false;
  bool consistent() const { return poisson == jacobi; }
  bool base_coisotropic = false;
  bool lift_coisotropic = false;
  std::vector<std::string> witness;
};
PoissonizationReport poissonization_report(const JacobiStructure& J);

}  // namespace coiso
