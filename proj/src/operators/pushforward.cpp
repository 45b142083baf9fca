#include "coiso/operators/pushforward.hpp"

#include "coiso/ring/linalg.hpp"

namespace coiso {

namespace {

AntisymTensor transform(const AntisymTensor& t, const PolyMatrix& jac,
                        const std::vector<std::optional<Polynomial>>& back) {
  const int k = t.rank();
  const int n = t.index_range();
  AntisymTensor out(k, n);
  if (t.is_zero()) return out;
  for (const IndexTuple& B : increasing_tuples(n, k)) {
    PolynomialAccumulator acc;
    for (const auto& [A, coeff] : t.entries()) {
      PolyMatrix minor = zero_matrix(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) minor[r][c] = jac[B[r]][A[c]];
      acc.add_product(coeff, determinant(minor));
    }
    out.set(B, acc.take().substitute(back));
  }
  return out;
}

}  // namespace

MultiOperator pushforward(const MultiOperator& op, const std::vector<Polynomial>& forward,
                          const std::vector<Polynomial>& inverse) {
  const int n = op.patch()->dim();
  if (static_cast<int>(forward.size()) != n || static_cast<int>(inverse.size()) != n)
    throw std::invalid_argument("coordinate map has the wrong number of components");
  std::vector<std::optional<Polynomial>> back(n);
  for (int a = 0; a < n; ++a) back[a] = inverse[a];
  if (op.arity() == 0) return MultiOperator::section(op.patch(), op.section_coeff().substitute(back));
  PolyMatrix jac = zero_matrix(n, n);  // jac[b][a] = d_a psi^b
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) jac[b][a] = forward[b].derivative(a);
  MultiOperator out(op.patch(), op.arity());
  out.X() = transform(op.X(), jac, back);
  out.G() = transform(op.G(), jac, back);
  return out;
}

MultiOperator pushforward_fiber_affine(const MultiOperator& op, const std::vector<Polynomial>& s, int direction) {
  const Patch& patch = *op.patch();
  if (static_cast<int>(s.size()) != patch.d()) throw std::invalid_argument("translation needs one entry per fiber variable");
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  for (const Polynomial& e : s)
    if (e.depends_on(patch.fiber_mask())) throw std::invalid_argument("translation depends on fiber variables");
  std::vector<Polynomial> forward(patch.dim()), inverse(patch.dim());
  for (int a = 0; a < patch.dim(); ++a) forward[a] = inverse[a] = Polynomial::variable(a);
  for (int a = 0; a < patch.d(); ++a) {
    forward[patch.n() + a] += s[a] * Rational(direction);
    inverse[patch.n() + a] -= s[a] * Rational(direction);
  }
  return pushforward(op, forward, inverse);
}

}  // namespace coiso
