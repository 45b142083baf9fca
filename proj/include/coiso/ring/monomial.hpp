#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace coiso {

constexpr int kMaxVars = 24;

// Bit set over variable indices.
using VarMask = std::uint32_t;

inline VarMask var_bit(int v) { return VarMask{1} << v; }
VarMask var_range(int first, int count);

// Exponent vector over the universal variable set z_0 .. z_{kMaxVars-1}.
// Exponents are packed eight per word with z_0 in the most significant byte,
// so comparing words lexicographically compares exponent vectors lexicographically.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int v, int power = 1);

  int exponent(int v) const {
    return static_cast<int>((words_[v / 8] >> (56 - 8 * (v % 8))) & 0xffu);
  }
  void set_exponent(int v, int e);
  int degree() const { return degree_; }
  int degree_in(VarMask mask) const;
  VarMask support() const;
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  // Exponent vector with the variables of `mask` zeroed.
  Monomial without(VarMask mask) const;
  Monomial only(VarMask mask) const;

  bool operator==(const Monomial& o) const {
    return words_[0] == o.words_[0] && words_[1] == o.words_[1] && words_[2] == o.words_[2];
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Graded lexicographic comparison; true when *this is strictly larger.
  bool grlex_greater(const Monomial& o) const {
    if (degree_ != o.degree_) return degree_ > o.degree_;
    if (words_[0] != o.words_[0]) return words_[0] > o.words_[0];
    if (words_[1] != o.words_[1]) return words_[1] > o.words_[1];
    return words_[2] > o.words_[2];
  }

  std::size_t hash() const;

 private:
  std::array<std::uint64_t, 3> words_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace coiso
