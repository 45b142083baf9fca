#include "coiso/ring/monomial.hpp"

#include <stdexcept>

namespace coiso {

VarMask var_range(int first, int count) {
  VarMask m = 0;
  for (int i = 0; i < count; ++i) m |= var_bit(first + i);
  return m;
}

Monomial Monomial::variable(int v, int power) {
  Monomial m;
  m.set_exponent(v, power);
  return m;
}

void Monomial::set_exponent(int v, int e) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("variable index exceeds supported count");
  if (e < 0 || e > 255) throw std::overflow_error("exponent out of range");
  const int shift = 56 - 8 * (v % 8);
  std::uint64_t& w = words_[v / 8];
  const int old = static_cast<int>((w >> shift) & 0xffu);
  w &= ~(std::uint64_t{0xff} << shift);
  w |= static_cast<std::uint64_t>(e) << shift;
  degree_ = static_cast<std::uint16_t>(degree_ - old + e);
}

int Monomial::degree_in(VarMask mask) const {
  int d = 0;
  while (mask) {
    const int v = __builtin_ctz(mask);
    d += exponent(v);
    mask &= mask - 1;
  }
  return d;
}

VarMask Monomial::support() const {
  VarMask m = 0;
  if (degree_ == 0) return m;
  for (int v = 0; v < kMaxVars; ++v)
    if (exponent(v)) m |= var_bit(v);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  if (degree_ + other.degree_ <= 255) {
    for (int i = 0; i < 3; ++i) r.words_[i] = words_[i] + other.words_[i];
    r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
    return r;
  }
  for (int v = 0; v < kMaxVars; ++v) {
    const int e = exponent(v) + other.exponent(v);
    if (e) r.set_exponent(v, e);
  }
  return r;
}

Monomial Monomial::without(VarMask mask) const {
  Monomial r = *this;
  while (mask) {
    const int v = __builtin_ctz(mask);
    if (r.exponent(v)) r.set_exponent(v, 0);
    mask &= mask - 1;
  }
  return r;
}

Monomial Monomial::only(VarMask mask) const {
  Monomial r;
  while (mask) {
    const int v = __builtin_ctz(mask);
    if (const int e = exponent(v)) r.set_exponent(v, e);
    mask &= mask - 1;
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace coiso
