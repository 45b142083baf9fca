#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "coiso/ring/combinatorics.hpp"
#include "coiso/ring/polynomial.hpp"

namespace coiso {

// Totally antisymmetric tensor stored on strictly increasing index tuples.
// Only nonzero entries are kept.
template <class Coeff>
class AntisymTensorT {
 public:
  AntisymTensorT() = default;
  AntisymTensorT(int rank, int index_range) : rank_(rank), range_(index_range) {
    if (rank < 0 || index_range < 0) throw std::invalid_argument("negative tensor shape");
  }

  int rank() const { return rank_; }
  int index_range() const { return range_; }
  const std::map<IndexTuple, Coeff>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Coeff at(const IndexTuple& indices) const {
    check(indices);
    SignedTuple s = sort_with_sign(indices);
    if (s.sign == 0) return Coeff();
    auto it = entries_.find(s.sorted);
    if (it == entries_.end()) return Coeff();
    return s.sign > 0 ? it->second : -it->second;
  }

  // Sets the entry so that at(indices) == value afterwards.
  void set(const IndexTuple& indices, const Coeff& value) {
    check(indices);
    SignedTuple s = sort_with_sign(indices);
    if (s.sign == 0) {
      if (!value.is_zero()) throw std::invalid_argument("nonzero value on a repeated index");
      return;
    }
    store(s.sorted, s.sign > 0 ? value : -value);
  }

  void add(const IndexTuple& indices, const Coeff& value) {
    if (value.is_zero()) return;
    check(indices);
    SignedTuple s = sort_with_sign(indices);
    if (s.sign == 0) return;
    auto it = entries_.find(s.sorted);
    Coeff next = it == entries_.end() ? Coeff() : it->second;
    if (s.sign > 0) next += value; else next -= value;
    store(s.sorted, next);
  }

  template <class F>
  AntisymTensorT map(F&& f) const {
    AntisymTensorT out(rank_, range_);
    for (const auto& [k, v] : entries_) out.store(k, f(k, v));
    return out;
  }

  AntisymTensorT operator-() const {
    return map([](const IndexTuple&, const Coeff& c) { return -c; });
  }
  AntisymTensorT& operator+=(const AntisymTensorT& o) {
    same_shape(o);
    for (const auto& [k, v] : o.entries_) {
      auto it = entries_.find(k);
      if (it == entries_.end()) store(k, v); else store(k, it->second + v);
    }
    return *this;
  }
  AntisymTensorT& operator-=(const AntisymTensorT& o) { return *this += -o; }
  friend AntisymTensorT operator+(AntisymTensorT a, const AntisymTensorT& b) { return a += b; }
  friend AntisymTensorT operator-(AntisymTensorT a, const AntisymTensorT& b) { return a -= b; }

  bool operator==(const AntisymTensorT& o) const {
    return rank_ == o.rank_ && range_ == o.range_ && entries_ == o.entries_;
  }
  bool operator!=(const AntisymTensorT& o) const { return !(*this == o); }

 private:
  void check(const IndexTuple& indices) const {
    if (static_cast<int>(indices.size()) != rank_) throw std::invalid_argument("tensor index count mismatch");
    for (int i : indices)
      if (i < 0 || i >= range_) throw std::out_of_range("tensor index out of range");
  }
  void same_shape(const AntisymTensorT& o) const {
    if (rank_ != o.rank_ || range_ != o.range_) throw std::invalid_argument("tensor shape mismatch");
  }
  void store(const IndexTuple& sorted, Coeff value) {
    if (value.is_zero()) entries_.erase(sorted); else entries_[sorted] = std::move(value);
  }

  int rank_ = 0;
  int range_ = 0;
  std::map<IndexTuple, Coeff> entries_;
};

using AntisymTensor = AntisymTensorT<Polynomial>;

}  // namespace coiso
