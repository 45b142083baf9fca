#pragma once

#include <vector>

#include "coiso/operators/multi_operator.hpp"

namespace coiso {

// Pushforward along a polynomial diffeomorphism psi of the patch (lifted to the line bundle
// so that mu is preserved): (psi_* op)(f_1..f_k) = op(f_1 o psi, .., f_k o psi) o psi^{-1}.
// `forward[b]` is psi^b(z) and `inverse[b]` is (psi^{-1})^b(z).
MultiOperator pushforward(const MultiOperator& op, const std::vector<Polynomial>& forward,
                          const std::vector<Polynomial>& inverse);

// (exp I(direction * s))_* op for the fiber translation psi(x, y) = (x, y + direction * s(x)).
MultiOperator pushforward_fiber_affine(const MultiOperator& op, const std::vector<Polynomial>& s, int direction);

}  // namespace coiso
