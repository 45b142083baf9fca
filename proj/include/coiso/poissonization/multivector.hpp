#pragma once

#include <string>
#include <vector>

#include "coiso/ring/antisym_tensor.hpp"
#include "coiso/ring/laurent.hpp"

namespace coiso {

// Multivector field sum_{I increasing} P^I d_{I_1} ^ .. ^ d_{I_k} on coordinates z^0..z^{dim-1};
// coefficients are Laurent in the variable `t_var` (which may lie outside the coordinate range).
class MultiVector {
 public:
  MultiVector() = default;
  MultiVector(int dim, int rank, int t_var);

  static MultiVector function(int dim, int t_var, const LaurentPolynomial& f);

  int dim() const { return tensor_.index_range(); }
  int rank() const { return tensor_.rank(); }
  int t_var() const { return t_var_; }
  const AntisymTensorT<LaurentPolynomial>& tensor() const { return tensor_; }
  LaurentPolynomial at(const IndexTuple& idx) const { return tensor_.at(idx); }
  void set(const IndexTuple& idx, const LaurentPolynomial& v) { tensor_.set(idx, v); }
  void add(const IndexTuple& idx, const LaurentPolynomial& v) { tensor_.add(idx, v); }
  bool is_zero() const { return tensor_.is_zero(); }

  MultiVector operator-() const;
  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(const Rational& c, const MultiVector& a);
  bool operator==(const MultiVector& o) const;
  bool operator!=(const MultiVector& o) const { return !(*this == o); }

  std::vector<std::string> describe(const VariableContext& ctx) const;

 private:
  int t_var_ = 0;
  AntisymTensorT<LaurentPolynomial> tensor_;
};

MultiVector wedge(const MultiVector& a, const MultiVector& b);
// Coefficient-wise partial derivative along z^v.
MultiVector partial(const MultiVector& a, int v);
// Right and left derivatives with respect to the odd generator dual to d_v.
MultiVector right_odd_derivative(const MultiVector& a, int v);
MultiVector left_odd_derivative(const MultiVector& a, int v);

// Schouten-Nijenhuis bracket normalized by [X, f] = X(f) and [X, Y] = Lie bracket.
MultiVector sn_bracket(const MultiVector& a, const MultiVector& b);

// P(dF_1, .., dF_k) = sum_{I increasing} P^I det[d_{I_j} F_i].
LaurentPolynomial evaluate(const MultiVector& p, const std::vector<LaurentPolynomial>& functions);

}  // namespace coiso
