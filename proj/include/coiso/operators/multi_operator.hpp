#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coiso/operators/patch.hpp"
#include "coiso/ring/antisym_tensor.hpp"

namespace coiso {

// Section f*mu of the trivialized line bundle.
struct Section {
  PatchPtr patch;
  Polynomial coeff;
};

// First-order alternating k-ary multi-differential operator in normal form
//   X^{a_1..a_k} D_{a_1} ^ .. ^ D_{a_k} (x) mu + g^{a_1..a_{k-1}} D_{a_1} ^ .. ^ D_{a_{k-1}} ^ id,
// both sums running over all index tuples. Arity 0 is a section stored as the rank-0 X entry.
class MultiOperator {
 public:
  MultiOperator() = default;
  MultiOperator(PatchPtr patch, int arity);

  static MultiOperator section(PatchPtr patch, const Polynomial& f);
  static MultiOperator identity(PatchPtr patch);

  const PatchPtr& patch() const { return patch_; }
  int arity() const { return arity_; }
  int degree() const { return arity_ - 1; }
  const AntisymTensor& X() const { return x_; }
  const AntisymTensor& G() const { return g_; }
  AntisymTensor& X() { return x_; }
  AntisymTensor& G() { return g_; }

  Polynomial section_coeff() const;

  // Action on coefficient polynomials; arguments may involve auxiliary variables beyond the
  // patch, only patch coordinates are differentiated.
  Polynomial apply(const std::vector<Polynomial>& args) const;
  Section apply(const std::vector<Section>& args) const;
  bool is_zero() const { return x_.is_zero() && g_.is_zero(); }

  MultiOperator operator-() const;
  MultiOperator& operator+=(const MultiOperator& o);
  MultiOperator& operator-=(const MultiOperator& o);
  MultiOperator& operator*=(const Rational& c);
  friend MultiOperator operator+(MultiOperator a, const MultiOperator& b) { return a += b; }
  friend MultiOperator operator-(MultiOperator a, const MultiOperator& b) { return a -= b; }
  friend MultiOperator operator*(const Rational& c, MultiOperator a) { return a *= c; }

  bool operator==(const MultiOperator& o) const;
  bool operator!=(const MultiOperator& o) const { return !(*this == o); }

  // Human-readable listing of nonzero components, e.g. "X[x,p] = 1/2".
  std::vector<std::string> describe() const;

 private:
  void same_shape(const MultiOperator& o) const;

  PatchPtr patch_;
  int arity_ = 0;
  AntisymTensor x_;
  AntisymTensor g_;
};

class NotFirstOrderAlternating : public std::runtime_error {
 public:
  NotFirstOrderAlternating() : std::runtime_error("evaluator not first-order alternating") {}
};

// Multilinear map on coefficient polynomials.
using Evaluator = std::function<Polynomial(const std::vector<Polynomial>&)>;

// Reconstructs the operator from its action; `probe_seed` drives the randomized round-trip check.
MultiOperator extract_components(const Evaluator& evaluator, const PatchPtr& patch, int arity,
                                 bool verify = true, std::uint64_t probe_seed = 0x5eed);

// Gerstenhaber composition (outer o inner) evaluated on arity(outer)+arity(inner)-1 arguments.
// Re-expresses op on `target`, matching coordinates by name; every coordinate of op's patch must
// occur in target.
MultiOperator transplant(const MultiOperator& op, const PatchPtr& target);
// Index map from the coordinates of `from` to those of `to`, by name.
std::vector<int> coordinate_map(const Patch& from, const Patch& to);

Polynomial compose_apply(const MultiOperator& outer, const MultiOperator& inner, const std::vector<Polynomial>& args);
// Action of the Schouten-Jacobi bracket without reconstructing it.
Polynomial sj_bracket_apply(const MultiOperator& a, const MultiOperator& b, const std::vector<Polynomial>& args);

MultiOperator sj_bracket(const MultiOperator& a, const MultiOperator& b);

}  // namespace coiso
