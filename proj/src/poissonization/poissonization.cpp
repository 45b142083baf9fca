#include "coiso/poissonization/poissonization.hpp"

#include "coiso/vdata/vdata.hpp"

namespace coiso {

int t_index(const Patch& patch) { return patch.dim(); }

VariableContext tilde_context(const Patch& patch) {
  std::vector<std::string> names = patch.base();
  names.insert(names.end(), patch.fiber().begin(), patch.fiber().end());
  std::string t = "t";
  for (int i = 1; patch.context().find(t); ++i) t = "t" + std::to_string(i);
  names.push_back(t);
  return VariableContext(names);
}

MultiVector tilde_op(const MultiOperator& op) {
  const Patch& patch = *op.patch();
  const int t = t_index(patch);
  const int k = op.arity();
  MultiVector out(patch.dim() + 1, k, t);
  if (k == 0) {
    out.set({}, LaurentPolynomial(t, op.section_coeff(), 1));
    return out;
  }
  const Rational kf = factorial(k), kf1 = factorial(k - 1);
  for (const auto& [idx, c] : op.X().entries()) out.add(idx, LaurentPolynomial(t, c * kf, 1 - k));
  for (const auto& [idx, c] : op.G().entries()) {
    IndexTuple full = idx;
    full.push_back(t);
    out.add(full, LaurentPolynomial(t, c * kf1, 2 - k));
  }
  return out;
}

MultiVector poissonize(const JacobiStructure& J) {
  const Patch& patch = *J.patch();
  const int N = patch.dim(), t = t_index(patch);
  const MultiOperator& op = J.op();
  MultiVector out(N + 1, 2, t);
  std::vector<Polynomial> pt(N);
  for (int b = 0; b < N; ++b) {
    pt[b] = op.apply({Polynomial(1), Polynomial::variable(b)});
    out.set({b, t}, LaurentPolynomial(t, -pt[b]));
  }
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      // Pi^{at} = -Pi^{ta}
      Polynomial num = op.apply({Polynomial::variable(a), Polynomial::variable(b)}) +
                       Polynomial::variable(b) * pt[a] - Polynomial::variable(a) * pt[b];
      out.set({a, b}, LaurentPolynomial(t, num, -1));
    }
  return out;
}

MultiVector euler_field(const Patch& patch) {
  const int t = t_index(patch);
  MultiVector e(patch.dim() + 1, 1, t);
  e.set({t}, LaurentPolynomial(t, Polynomial::variable(t)));
  return e;
}

Polynomial untilde_apply(const MultiVector& m, const Patch& patch, const std::vector<Polynomial>& f) {
  const int t = t_index(patch);
  std::vector<LaurentPolynomial> lifted;
  for (const Polynomial& p : f) lifted.emplace_back(t, p, 1);
  return (evaluate(m, lifted) * LaurentPolynomial(t, Polynomial(1), -1)).to_polynomial();
}

MultiVector normal_part(const MultiVector& m, const Patch& patch) {
  MultiVector out(m.dim(), m.rank(), m.t_var());
  const int n = patch.n();
  for (const auto& [idx, c] : m.tensor().entries()) {
    bool pure = true;
    for (int i : idx) pure = pure && i >= n && i < patch.dim();
    if (!pure) continue;
    LaurentPolynomial r(m.t_var(), c.numerator().restrict_zero(patch.fiber_mask()), -c.shift());
    out.set(idx, r);
  }
  return out;
}

PoissonizationReport poissonization_report(const JacobiStructure& J) {
  const Patch& patch = *J.patch();
  const VariableContext ctx = tilde_context(patch);
  PoissonizationReport r;
  const MultiVector pi = poissonize(J);
  const MultiVector homogeneity = sn_bracket(pi, euler_field(patch)) - pi;
  r.homogeneous = homogeneity.is_zero();
  for (const auto& s : homogeneity.describe(ctx)) r.witness.push_back("[Pi,E] - Pi: " + s);
  const MultiVector square = sn_bracket(pi, pi);
  r.poisson = square.is_zero();
  for (const auto& s : square.describe(ctx)) r.witness.push_back("[Pi,Pi]: " + s);
  r.jacobi = jacobi_check(J).holds;
  r.base_coisotropic = project_P(J.op()).is_zero();
  const MultiVector normal = normal_part(pi, patch);
  r.lift_coisotropic = normal.is_zero();
  for (const auto& s : normal.describe(ctx)) r.witness.push_back("normal part: " + s);
  return r;
}

}  // namespace coiso
