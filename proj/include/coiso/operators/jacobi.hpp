#pragma once

#include <string>
#include <vector>

#include "coiso/operators/multi_operator.hpp"

namespace coiso {

// Arity-2 operator with block accessors for the base/fiber split:
// J^{ab}, J^{ai}, J^{ij} (X-tensor) and J^a, J^i (G-tensor); a, b fiber and i, j base positions.
class JacobiStructure {
 public:
  JacobiStructure() = default;
  explicit JacobiStructure(MultiOperator op);

  const MultiOperator& op() const { return op_; }
  const PatchPtr& patch() const { return op_.patch(); }

  Polynomial J_ab(int a, int b) const;
  Polynomial J_ai(int a, int i) const;
  Polynomial J_ij(int i, int j) const;
  Polynomial J_a(int a) const;
  Polynomial J_i(int i) const;

 private:
  MultiOperator op_;
};

// The pair (Lambda, Gamma) with {f,g} = Lambda(df,dg) + f Gamma(g) - g Gamma(f):
// Lambda = 2 X and Gamma = -G. The equations are [Gamma,Lambda] = 0 and
// [Lambda,Lambda] = -2 Gamma ^ Lambda for the Schouten-Nijenhuis bracket.
struct ClassicalJacobiCheck {
  bool gamma_preserves_lambda = false;
  bool lambda_square_matches = false;
  bool holds() const { return gamma_preserves_lambda && lambda_square_matches; }
  std::vector<std::string> witness;
};

struct JacobiCheckResult {
  bool holds = false;
  MultiOperator self_bracket;
  std::vector<std::string> witness;
  ClassicalJacobiCheck classical;
};

JacobiCheckResult jacobi_check(const JacobiStructure& J);
ClassicalJacobiCheck classical_jacobi_check(const JacobiStructure& J);

AntisymTensor bi_symbol(const JacobiStructure& J);
// Components of Lambda^#(df (x) h mu) = 2 h X^{ab} d_a f d_b.
std::vector<Polynomial> lambda_sharp(const JacobiStructure& J, const Polynomial& f, const Section& lambda);

struct Hamiltonian {
  MultiOperator derivation;
  std::vector<Polynomial> symbol;
};
// Delta_lambda = -[J, lambda].
Hamiltonian hamiltonian(const JacobiStructure& J, const Section& lambda);
std::vector<Polynomial> symbol(const MultiOperator& arity_one);

bool is_jacobi_derivation(const JacobiStructure& J, const MultiOperator& delta);

}  // namespace coiso
