#include "coiso/operators/jacobi.hpp"
#include "coiso/poissonization/multivector.hpp"

namespace coiso {

ClassicalJacobiCheck classical_jacobi_check(const JacobiStructure& J) {
  const Patch& patch = *J.patch();
  const int n = patch.dim();
  const int t = n;  // no homogeneity variable on the patch itself
  MultiVector lambda(n, 2, t), gamma(n, 1, t);
  for (const auto& [idx, c] : J.op().X().entries()) lambda.set(idx, LaurentPolynomial(t, c * Rational(2)));
  for (const auto& [idx, c] : J.op().G().entries()) gamma.set(idx, LaurentPolynomial(t, -c));

  ClassicalJacobiCheck r;
  MultiVector lie = sn_bracket(gamma, lambda);
  MultiVector defect = sn_bracket(lambda, lambda) + Rational(2) * wedge(gamma, lambda);
  r.gamma_preserves_lambda = lie.is_zero();
  r.lambda_square_matches = defect.is_zero();
  for (const std::string& s : lie.describe(patch.context())) r.witness.push_back("[Gamma,Lambda] " + s);
  for (const std::string& s : defect.describe(patch.context())) r.witness.push_back("[Lambda,Lambda]+2 Gamma^Lambda " + s);
  return r;
}

}  // namespace coiso
