#include "coiso/operators/multi_operator.hpp"

#include <cstdlib>
#include <optional>

#include "coiso/ring/linalg.hpp"
#include "coiso/ring/random.hpp"

namespace coiso {

MultiOperator::MultiOperator(PatchPtr patch, int arity)
    : patch_(std::move(patch)),
      arity_(arity),
      x_(arity, patch_ ? patch_->dim() : 0),
      g_(arity > 0 ? arity - 1 : 0, patch_ ? patch_->dim() : 0) {
  if (!patch_) throw std::invalid_argument("operator without a patch");
  if (arity < 0) throw std::invalid_argument("negative arity");
}

MultiOperator MultiOperator::section(PatchPtr patch, const Polynomial& f) {
  MultiOperator op(std::move(patch), 0);
  op.x_.set({}, f);
  return op;
}

MultiOperator MultiOperator::identity(PatchPtr patch) {
  MultiOperator op(std::move(patch), 1);
  op.g_.set({}, Polynomial(1));
  return op;
}

Polynomial MultiOperator::section_coeff() const {
  if (arity_ != 0) throw std::invalid_argument("operator is not a section");
  return x_.at({});
}

void MultiOperator::same_shape(const MultiOperator& o) const {
  require_same_patch(patch_, o.patch_);
  if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
}

MultiOperator MultiOperator::operator-() const {
  MultiOperator r = *this;
  r.x_ = -r.x_;
  r.g_ = -r.g_;
  return r;
}

MultiOperator& MultiOperator::operator+=(const MultiOperator& o) {
  same_shape(o);
  x_ += o.x_;
  g_ += o.g_;
  return *this;
}

MultiOperator& MultiOperator::operator-=(const MultiOperator& o) {
  same_shape(o);
  x_ -= o.x_;
  g_ -= o.g_;
  return *this;
}

MultiOperator& MultiOperator::operator*=(const Rational& c) {
  auto scale = [&](const IndexTuple&, const Polynomial& p) { return p * c; };
  x_ = x_.map(scale);
  g_ = g_.map(scale);
  return *this;
}

bool MultiOperator::operator==(const MultiOperator& o) const {
  if (arity_ != o.arity_) return false;
  if (patch_ != o.patch_ && *patch_ != *o.patch_) return false;
  return x_ == o.x_ && g_ == o.g_;
}

std::vector<std::string> MultiOperator::describe() const {
  const VariableContext& ctx = patch_->context();
  auto label = [&](const char* head, const IndexTuple& t) {
    std::string s = head;
    s += "[";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + ctx.name(t[i]);
    return s + "]";
  };
  std::vector<std::string> out;
  for (const auto& [k, v] : x_.entries()) out.push_back(label(arity_ == 0 ? "f" : "X", k) + " = " + to_string(v, ctx));
  for (const auto& [k, v] : g_.entries()) out.push_back(label("G", k) + " = " + to_string(v, ctx));
  return out;
}

Polynomial MultiOperator::apply(const std::vector<Polynomial>& args) const {
  const MultiOperator& op = *this;
  const int k = op.arity();
  if (static_cast<int>(args.size()) != k) throw std::invalid_argument("arity mismatch in apply");
  if (k == 0) return op.section_coeff();
  const int n = op.patch()->dim();
  std::vector<std::vector<std::optional<Polynomial>>> grad(k, std::vector<std::optional<Polynomial>>(n));
  auto d = [&](int i, int alpha) -> const Polynomial& {
    auto& slot = grad[i][alpha];
    if (!slot) slot = args[i].derivative(alpha);
    return *slot;
  };
  PolynomialAccumulator acc;
  const Rational kf = factorial(k);
  for (const auto& [idx, coeff] : op.X().entries()) {
    PolyMatrix m = zero_matrix(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = d(i, idx[j]);
    acc.add_product(coeff, determinant(m), kf);
  }
  const Rational kf1 = factorial(k - 1);
  for (const auto& [idx, coeff] : op.G().entries()) {
    for (int j = 0; j < k; ++j) {
      if (args[j].is_zero()) continue;
      PolyMatrix m = zero_matrix(k - 1, k - 1);
      for (int i = 0, r = 0; i < k; ++i) {
        if (i == j) continue;
        for (int c = 0; c < k - 1; ++c) m[r][c] = d(i, idx[c]);
        ++r;
      }
      const Rational sign = (k - 1 - j) % 2 ? -kf1 : kf1;
      acc.add_product(coeff, determinant(m) * args[j], sign);
    }
  }
  return acc.take();
}

Section MultiOperator::apply(const std::vector<Section>& args) const {
  std::vector<Polynomial> raw;
  raw.reserve(args.size());
  for (const Section& s : args) {
    require_same_patch(patch_, s.patch);
    raw.push_back(s.coeff);
  }
  return {patch_, apply(raw)};
}

MultiOperator extract_components(const Evaluator& evaluator, const PatchPtr& patch, int arity, bool verify,
                                 std::uint64_t probe_seed) {
  if (arity == 0) return MultiOperator::section(patch, evaluator({}));
  const int n = patch->dim();
  std::vector<std::optional<Polynomial>> collapse(2 * n);
  std::vector<Polynomial> linear(n);
  for (int a = 0; a < n; ++a) {
    collapse[n + a] = Polynomial::variable(a);
    linear[a] = Polynomial::variable(a) - Polynomial::variable(n + a);
  }
  MultiOperator op(patch, arity);
  const Rational inv_kf = 1 / factorial(arity);
  for (const IndexTuple& beta : increasing_tuples(n, arity)) {
    std::vector<Polynomial> args;
    for (int b : beta) args.push_back(linear[b]);
    op.X().set(beta, evaluator(args).substitute(collapse) * inv_kf);
  }
  const Rational inv_kf1 = 1 / factorial(arity - 1);
  for (const IndexTuple& gamma : increasing_tuples(n, arity - 1)) {
    std::vector<Polynomial> args;
    for (int c : gamma) args.push_back(linear[c]);
    args.push_back(Polynomial(1));
    op.G().set(gamma, evaluator(args).substitute(collapse) * inv_kf1);
  }
  if (verify) {
    Rng rng(probe_seed);
    std::vector<int> vars(n);
    for (int a = 0; a < n; ++a) vars[a] = a;
    for (int round = 0; round < 2; ++round) {
      std::vector<Polynomial> probes;
      for (int i = 0; i < arity; ++i) probes.push_back(rng.polynomial(vars, 2, 60));
      if (op.apply(probes) != evaluator(probes)) throw NotFirstOrderAlternating();
    }
  }
  return op;
}

std::vector<int> coordinate_map(const Patch& from, const Patch& to) {
  std::vector<int> map(from.dim());
  for (int a = 0; a < from.dim(); ++a) map[a] = to.context().index(from.context().name(a));
  return map;
}

MultiOperator transplant(const MultiOperator& op, const PatchPtr& target) {
  const std::vector<int> map = coordinate_map(*op.patch(), *target);
  MultiOperator out(target, op.arity());
  auto move = [&](const AntisymTensor& from, AntisymTensor& to) {
    for (const auto& [idx, c] : from.entries()) {
      IndexTuple t;
      for (int i : idx) t.push_back(map[i]);
      auto [sorted, sign] = sort_with_sign(t);
      to.set(sorted, c.remap(map) * Rational(sign));
    }
  };
  move(op.X(), out.X());
  move(op.G(), out.G());
  return out;
}

Polynomial compose_apply(const MultiOperator& outer, const MultiOperator& inner, const std::vector<Polynomial>& args) {
  const int p = outer.arity();
  const int q = inner.arity();
  if (p == 0) return {};
  if (static_cast<int>(args.size()) != p + q - 1) throw std::invalid_argument("arity mismatch in composition");
  PolynomialAccumulator acc;
  std::vector<Polynomial> inner_args(q), outer_args(p);
  for (const SignedPermutation& tau : unshuffles(q, p - 1)) {
    for (int i = 0; i < q; ++i) inner_args[i] = args[tau.image[i]];
    outer_args[0] = inner.apply(inner_args);
    for (int i = 1; i < p; ++i) outer_args[i] = args[tau.image[q + i - 1]];
    acc.add(outer.apply(outer_args), tau.sign);
  }
  return acc.take();
}

Polynomial sj_bracket_apply(const MultiOperator& a, const MultiOperator& b, const std::vector<Polynomial>& args) {
  require_same_patch(a.patch(), b.patch());
  const bool odd = std::abs(a.degree() * b.degree()) % 2 == 1;
  Polynomial ab = compose_apply(a, b, args);
  if (odd) ab = -ab;
  return ab - compose_apply(b, a, args);
}

MultiOperator sj_bracket(const MultiOperator& a, const MultiOperator& b) {
  require_same_patch(a.patch(), b.patch());
  const int r = a.arity() + b.arity() - 1;
  if (r < 0) return MultiOperator(a.patch(), 0);
  if (a.is_zero() || b.is_zero()) return MultiOperator(a.patch(), r);
  return extract_components([&](const std::vector<Polynomial>& args) { return sj_bracket_apply(a, b, args); },
                            a.patch(), r, false);
}

}  // namespace coiso
