#include "coiso/ring/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace coiso {

LaurentPolynomial::LaurentPolynomial(int t_var, Polynomial numerator, int t_power)
    : t_var_(t_var), numerator_(std::move(numerator)) {
  if (t_power >= 0) {
    numerator_ *= Polynomial::monomial(Monomial::variable(t_var_, t_power));
  } else {
    shift_ = -t_power;
  }
  normalize();
}

void LaurentPolynomial::normalize() {
  if (numerator_.is_zero()) {
    shift_ = 0;
    return;
  }
  if (shift_ == 0) return;
  int common = shift_;
  for (const Term& t : numerator_.terms()) common = std::min(common, t.mono.exponent(t_var_));
  if (common > 0) {
    numerator_ = numerator_.divide_by_power(t_var_, common);
    shift_ -= common;
  }
}

int LaurentPolynomial::min_t_power() const {
  if (is_zero()) return 0;
  int m = 1 << 20;
  for (const Term& t : numerator_.terms()) m = std::min(m, t.mono.exponent(t_var_));
  return m - shift_;
}

int LaurentPolynomial::max_t_power() const {
  if (is_zero()) return 0;
  int m = -(1 << 20);
  for (const Term& t : numerator_.terms()) m = std::max(m, t.mono.exponent(t_var_));
  return m - shift_;
}

Polynomial LaurentPolynomial::to_polynomial() const {
  if (shift_ > 0) throw std::domain_error("negative power of the homogeneity variable");
  return numerator_;
}

LaurentPolynomial LaurentPolynomial::with_shift(int s) const {
  LaurentPolynomial r = *this;
  if (s > shift_) {
    r.numerator_ *= Polynomial::monomial(Monomial::variable(t_var_, s - shift_));
    r.shift_ = s;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  r.numerator_ = -r.numerator_;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (t_var_ != o.t_var_) throw std::invalid_argument("Laurent variable mismatch");
  const int s = std::max(shift_, o.shift_);
  LaurentPolynomial a = with_shift(s);
  a.numerator_ += o.with_shift(s).numerator_;
  a.normalize();
  return *this = std::move(a);
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPolynomial::zero(a.t_var_);
  if (a.t_var_ != b.t_var_) throw std::invalid_argument("Laurent variable mismatch");
  LaurentPolynomial r;
  r.t_var_ = a.t_var_;
  r.numerator_ = a.numerator_ * b.numerator_;
  r.shift_ = a.shift_ + b.shift_;
  r.normalize();
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const Rational& c) {
  LaurentPolynomial r = a;
  r.numerator_ *= c;
  r.normalize();
  return r;
}

LaurentPolynomial LaurentPolynomial::derivative(int v) const {
  LaurentPolynomial r;
  r.t_var_ = t_var_;
  if (v != t_var_ || shift_ == 0) {
    r.numerator_ = numerator_.derivative(v);
    r.shift_ = shift_;
  } else {
    // d/dt (t^{-s} p) = t^{-s-1} (t dp/dt - s p)
    r.numerator_ = Polynomial::variable(t_var_) * numerator_.derivative(v) - numerator_ * Rational(shift_);
    r.shift_ = shift_ + 1;
  }
  r.normalize();
  return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return t_var_ == o.t_var_ && shift_ == o.shift_ && numerator_ == o.numerator_;
}

std::string to_string(const LaurentPolynomial& p, const VariableContext& ctx) {
  if (p.shift() == 0) return to_string(p.numerator(), ctx);
  std::string num = to_string(p.numerator(), ctx);
  const std::string& t = ctx.name(p.t_var());
  std::string den = p.shift() == 1 ? t : t + "^" + std::to_string(p.shift());
  return "(" + num + ")/" + den;
}

}  // namespace coiso
