#include "coiso/operators/jacobi.hpp"

namespace coiso {

JacobiStructure::JacobiStructure(MultiOperator op) : op_(std::move(op)) {
  if (op_.arity() != 2) throw std::invalid_argument("a Jacobi structure has arity 2");
}

Polynomial JacobiStructure::J_ab(int a, int b) const {
  const int n = patch()->n();
  return op_.X().at({n + a, n + b});
}
Polynomial JacobiStructure::J_ai(int a, int i) const { return op_.X().at({patch()->n() + a, i}); }
Polynomial JacobiStructure::J_ij(int i, int j) const { return op_.X().at({i, j}); }
Polynomial JacobiStructure::J_a(int a) const { return op_.G().at({patch()->n() + a}); }
Polynomial JacobiStructure::J_i(int i) const { return op_.G().at({i}); }

JacobiCheckResult jacobi_check(const JacobiStructure& J) {
  JacobiCheckResult r;
  r.self_bracket = sj_bracket(J.op(), J.op());
  r.holds = r.self_bracket.is_zero();
  r.witness = r.self_bracket.describe();
  r.classical = classical_jacobi_check(J);
  return r;
}

AntisymTensor bi_symbol(const JacobiStructure& J) { return J.op().X(); }

std::vector<Polynomial> lambda_sharp(const JacobiStructure& J, const Polynomial& f, const Section& lambda) {
  require_same_patch(J.patch(), lambda.patch);
  const int n = J.patch()->dim();
  std::vector<Polynomial> out(n);
  for (int b = 0; b < n; ++b) {
    PolynomialAccumulator acc;
    for (int a = 0; a < n; ++a) {
      if (a == b) continue;
      acc.add_product(J.op().X().at({a, b}), f.derivative(a), 2);
    }
    out[b] = acc.take() * lambda.coeff;
  }
  return out;
}

std::vector<Polynomial> symbol(const MultiOperator& arity_one) {
  if (arity_one.arity() != 1) throw std::invalid_argument("symbol of a non-derivation");
  std::vector<Polynomial> out(arity_one.patch()->dim());
  for (int a = 0; a < static_cast<int>(out.size()); ++a) out[a] = arity_one.X().at({a});
  return out;
}

Hamiltonian hamiltonian(const JacobiStructure& J, const Section& lambda) {
  require_same_patch(J.patch(), lambda.patch);
  Hamiltonian h;
  h.derivation = -sj_bracket(J.op(), MultiOperator::section(J.patch(), lambda.coeff));
  h.symbol = symbol(h.derivation);
  return h;
}

bool is_jacobi_derivation(const JacobiStructure& J, const MultiOperator& delta) {
  if (delta.arity() != 1) throw std::invalid_argument("derivation must have arity 1");
  return sj_bracket(J.op(), delta).is_zero();
}

}  // namespace coiso
