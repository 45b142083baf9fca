#pragma once

#include <vector>

#include "coiso/ring/polynomial.hpp"

namespace coiso {

using RationalMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Basis of {v : A v = 0}; A has `cols` columns (rows may be empty).
std::vector<std::vector<Rational>> nullspace(RationalMatrix a, int cols);

PolyMatrix zero_matrix(int rows, int cols);
PolyMatrix identity_matrix(int n);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scale(const PolyMatrix& a, const Rational& c);
Polynomial determinant(const PolyMatrix& a);
PolyMatrix adjugate(const PolyMatrix& a);
PolyMatrix substitute(const PolyMatrix& a, const std::vector<std::optional<Polynomial>>& images);
bool is_zero(const PolyMatrix& a);

}  // namespace coiso
