#pragma once

#include <string>
#include <vector>

#include "coiso/operators/jacobi.hpp"

namespace coiso {

// xi in Gamma(^p N (x) l) written as xi^{a_1..a_p} delta_{a_1} ^ .. ^ delta_{a_p} (x) mu,
// summed over all fiber index tuples; entries depend on base variables only.
class NormalMultiSection {
 public:
  NormalMultiSection() = default;
  NormalMultiSection(PatchPtr patch, int degree);

  static NormalMultiSection section(PatchPtr patch, const Polynomial& f);
  static NormalMultiSection vector(PatchPtr patch, const std::vector<Polynomial>& components);
  // The constant generator delta_a.
  static NormalMultiSection delta(PatchPtr patch, int a);

  const PatchPtr& patch() const { return patch_; }
  int degree() const { return tensor_.rank(); }
  int shifted_degree() const { return degree() - 1; }
  const AntisymTensor& tensor() const { return tensor_; }
  Polynomial at(const IndexTuple& fiber_indices) const { return tensor_.at(fiber_indices); }
  void set(const IndexTuple& fiber_indices, const Polynomial& value);
  bool is_zero() const { return tensor_.is_zero(); }
  // Components as a vector (degree 1 only).
  std::vector<Polynomial> components() const;

  NormalMultiSection operator-() const;
  NormalMultiSection& operator+=(const NormalMultiSection& o);
  NormalMultiSection& operator-=(const NormalMultiSection& o);
  friend NormalMultiSection operator+(NormalMultiSection a, const NormalMultiSection& b) { return a += b; }
  friend NormalMultiSection operator-(NormalMultiSection a, const NormalMultiSection& b) { return a -= b; }
  friend NormalMultiSection operator*(const Rational& c, const NormalMultiSection& a);
  bool operator==(const NormalMultiSection& o) const;
  bool operator!=(const NormalMultiSection& o) const { return !(*this == o); }

  std::vector<std::string> describe() const;

 private:
  PatchPtr patch_;
  AntisymTensor tensor_;
};

struct VData {
  JacobiStructure J;
  const PatchPtr& patch() const { return J.patch(); }
};

NormalMultiSection project_P(const MultiOperator& op);
MultiOperator include_I(const NormalMultiSection& xi);

// P[B, I xi], evaluated on the pure-fiber components only.
NormalMultiSection project_bracket(const MultiOperator& B, const NormalMultiSection& xi);

// m_k(xi_1..xi_k) = P[..[[J, I xi_1], I xi_2] .., I xi_k].
NormalMultiSection derived_mk(const VData& V, const std::vector<NormalMultiSection>& args);

// Closed coordinate formulas. Arguments must have degree <= 1. When every degree-1 argument is a
// constant generator delta_a and every degree-0 argument is a section, the displayed generator
// formulas are used; otherwise the bracket is unfolded along the connection recursion
// B_0 = J, B_i(a, b) = B_{i-1}(D_i a, b) + B_{i-1}(a, D_i b) - D_i B_{i-1}(a, b).
NormalMultiSection oracle_mk(const VData& V, const std::vector<NormalMultiSection>& args);
NormalMultiSection generator_formula_mk(const VData& V, const std::vector<NormalMultiSection>& args);
NormalMultiSection recursion_mk(const VData& V, const std::vector<NormalMultiSection>& args);

struct CoisotropyReport {
  bool p_vanishes = false;
  bool tangent = false;
  bool consistent() const { return p_vanishes == tangent; }
  bool coisotropic() const { return p_vanishes && tangent; }
  std::vector<std::string> witness;
};
CoisotropyReport is_coisotropic_submanifold(const VData& V);
bool is_coisotropic_section(const VData& V, const std::vector<Polynomial>& s);

// Left side of the homotopy Jacobi identity of total arity n = args.size():
// sum_i sum_{sigma in Sh(i, n-i)} eps(sigma) m_{n-i+1}(m_i(xi_sigma(1..i)), xi_sigma(i+1..n)).
NormalMultiSection homotopy_jacobi(const VData& V, const std::vector<NormalMultiSection>& args);

}  // namespace coiso
