#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coiso/ring/monomial.hpp"
#include "coiso/ring/rational.hpp"

namespace coiso {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial over Q in the universal variables z_0 .. z_{kMaxVars-1}.
// Names are attached by a VariableContext when parsing or printing.
// Terms are kept in descending graded-lex order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(int v);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  // Takes arbitrary (unsorted, possibly repeated) terms and canonicalizes them.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(VarMask mask) const;
  VarMask support() const;
  bool depends_on(VarMask mask) const { return (support() & mask) != 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned n) const;
  Polynomial derivative(int v) const;
  // Simultaneous substitution; variables without an image are kept.
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& images) const;
  // Sets the variables in `mask` to zero.
  Polynomial restrict_zero(VarMask mask) const;
  // Drops terms whose degree in `mask` exceeds `max_degree`.
  Polynomial truncate(VarMask mask, int max_degree) const;
  // Coefficient of the monomial `m` (supported in `mask`) viewed as a polynomial in the mask variables.
  Polynomial coefficient(VarMask mask, const Monomial& m) const;
  // Renames z_i to z_{map[i]}; map must be injective on the support.
  Polynomial remap(const std::vector<int>& map) const;
  // Divides by z_v^k; every term must be divisible.
  Polynomial divide_by_power(int v, int k) const;

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

// Accumulates sums of products without intermediate canonicalization.
class PolynomialAccumulator {
 public:
  void add(const Polynomial& p, const Rational& scale = 1);
  void add_product(const Polynomial& a, const Polynomial& b, const Rational& scale = 1);
  void add_term(const Monomial& m, const Rational& c) { pending_.push_back({m, c}); }
  Polynomial take();

 private:
  std::vector<Term> pending_;
};

// Ordered variable names; the position of a name is its universal index.
class VariableContext {
 public:
  VariableContext() = default;
  explicit VariableContext(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  int size() const { return static_cast<int>(names_.size()); }
  std::optional<int> find(const std::string& name) const;
  int index(const std::string& name) const;  // throws on unknown names
  const std::string& name(int i) const { return names_.at(i); }

 private:
  std::vector<std::string> names_;
};

std::string to_string(const Polynomial& p, const VariableContext& ctx);

}  // namespace coiso
