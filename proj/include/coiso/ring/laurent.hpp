#pragma once

#include <string>

#include "coiso/ring/polynomial.hpp"

namespace coiso {

// Polynomial in which one designated variable t may carry negative exponents,
// stored as t^{-shift} * numerator with the shift minimal.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int t_var, Polynomial numerator, int t_power = 0);

  static LaurentPolynomial zero(int t_var) { return LaurentPolynomial(t_var, Polynomial()); }

  int t_var() const { return t_var_; }
  const Polynomial& numerator() const { return numerator_; }
  int shift() const { return shift_; }
  bool is_zero() const { return numerator_.is_zero(); }
  // Lowest and highest power of t present (0, 0 for zero).
  int min_t_power() const;
  int max_t_power() const;
  // The polynomial with t^{-shift} multiplied out; throws if a negative power remains.
  Polynomial to_polynomial() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const Rational& c);

  LaurentPolynomial derivative(int v) const;
  bool operator==(const LaurentPolynomial& o) const;
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

 private:
  void normalize();
  LaurentPolynomial with_shift(int s) const;

  int t_var_ = 0;
  Polynomial numerator_;
  int shift_ = 0;
};

std::string to_string(const LaurentPolynomial& p, const VariableContext& ctx);

}  // namespace coiso
