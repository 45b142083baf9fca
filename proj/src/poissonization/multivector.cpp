#include "coiso/poissonization/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace coiso {

MultiVector::MultiVector(int dim, int rank, int t_var) : t_var_(t_var), tensor_(rank, dim) {}

MultiVector MultiVector::function(int dim, int t_var, const LaurentPolynomial& f) {
  MultiVector m(dim, 0, t_var);
  m.set({}, f);
  return m;
}

MultiVector MultiVector::operator-() const {
  MultiVector r = *this;
  r.tensor_ = -r.tensor_;
  return r;
}

// A zero operand of another rank is absorbed, as brackets past the top degree come back empty.
MultiVector& MultiVector::operator+=(const MultiVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  tensor_ += o.tensor_;
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) { return *this += -o; }

bool MultiVector::operator==(const MultiVector& o) const {
  if (is_zero() && o.is_zero()) return true;
  return t_var_ == o.t_var_ && tensor_ == o.tensor_;
}

MultiVector operator*(const Rational& c, const MultiVector& a) {
  MultiVector r = a;
  r.tensor_ = a.tensor_.map([&](const IndexTuple&, const LaurentPolynomial& p) { return p * c; });
  return r;
}

std::vector<std::string> MultiVector::describe(const VariableContext& ctx) const {
  std::vector<std::string> out;
  for (const auto& [idx, v] : tensor_.entries()) {
    std::string s = "P[";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + ctx.name(idx[i]);
    out.push_back(s + "] = " + to_string(v, ctx));
  }
  return out;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multivector dimension mismatch");
  MultiVector out(a.dim(), a.rank() + b.rank(), a.t_var());
  if (a.rank() + b.rank() > a.dim()) return out;
  for (const auto& [ia, ca] : a.tensor().entries()) {
    for (const auto& [ib, cb] : b.tensor().entries()) {
      IndexTuple joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      SignedTuple s = sort_with_sign(joined);
      if (s.sign == 0) continue;
      LaurentPolynomial prod = ca * cb;
      out.add(s.sorted, s.sign > 0 ? prod : -prod);
    }
  }
  return out;
}

MultiVector partial(const MultiVector& a, int v) {
  MultiVector out(a.dim(), a.rank(), a.t_var());
  for (const auto& [idx, c] : a.tensor().entries()) out.add(idx, c.derivative(v));
  return out;
}

namespace {

MultiVector odd_derivative(const MultiVector& a, int v, bool from_right) {
  if (a.rank() == 0) return MultiVector(a.dim(), 0, a.t_var());
  MultiVector out(a.dim(), a.rank() - 1, a.t_var());
  const int k = a.rank();
  for (const auto& [idx, c] : a.tensor().entries()) {
    auto it = std::find(idx.begin(), idx.end(), v);
    if (it == idx.end()) continue;
    const int pos = static_cast<int>(it - idx.begin());
    const int moves = from_right ? k - 1 - pos : pos;
    IndexTuple rest = idx;
    rest.erase(rest.begin() + pos);
    out.add(rest, moves % 2 ? -c : c);
  }
  return out;
}

}  // namespace

MultiVector right_odd_derivative(const MultiVector& a, int v) { return odd_derivative(a, v, true); }
MultiVector left_odd_derivative(const MultiVector& a, int v) { return odd_derivative(a, v, false); }

MultiVector sn_bracket(const MultiVector& a, const MultiVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multivector dimension mismatch");
  const int rank = a.rank() + b.rank() - 1;
  if (rank < 0) return MultiVector(a.dim(), 0, a.t_var());
  MultiVector out(a.dim(), rank, a.t_var());
  for (int v = 0; v < a.dim(); ++v) {
    MultiVector ra = right_odd_derivative(a, v);
    if (!ra.is_zero()) {
      MultiVector db = partial(b, v);
      if (!db.is_zero()) out += wedge(ra, db);
    }
    MultiVector lb = left_odd_derivative(b, v);
    if (!lb.is_zero()) {
      MultiVector da = partial(a, v);
      if (!da.is_zero()) out -= wedge(da, lb);
    }
  }
  return out;
}

LaurentPolynomial evaluate(const MultiVector& p, const std::vector<LaurentPolynomial>& functions) {
  const int k = p.rank();
  if (static_cast<int>(functions.size()) != k) throw std::invalid_argument("arity mismatch in multivector evaluation");
  LaurentPolynomial acc = LaurentPolynomial::zero(p.t_var());
  for (const auto& [idx, coeff] : p.tensor().entries()) {
    LaurentPolynomial det = LaurentPolynomial::zero(p.t_var());
    for (const SignedPermutation& sigma : permutations(k)) {
      LaurentPolynomial term(p.t_var(), Polynomial(sigma.sign));
      for (int j = 0; j < k && !term.is_zero(); ++j) term = term * functions[sigma.image[j]].derivative(idx[j]);
      det += term;
    }
    acc += coeff * det;
  }
  return acc;
}

}  // namespace coiso
