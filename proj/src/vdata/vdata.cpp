#include "coiso/vdata/vdata.hpp"

#include <functional>

#include "coiso/operators/pushforward.hpp"

namespace coiso {

NormalMultiSection::NormalMultiSection(PatchPtr patch, int degree)
    : patch_(std::move(patch)), tensor_(degree, patch_ ? patch_->d() : 0) {
  if (!patch_) throw std::invalid_argument("normal section without a patch");
}

NormalMultiSection NormalMultiSection::section(PatchPtr patch, const Polynomial& f) {
  NormalMultiSection xi(std::move(patch), 0);
  xi.set({}, f);
  return xi;
}

NormalMultiSection NormalMultiSection::vector(PatchPtr patch, const std::vector<Polynomial>& components) {
  NormalMultiSection xi(std::move(patch), 1);
  if (static_cast<int>(components.size()) != xi.patch_->d())
    throw std::invalid_argument("normal vector needs one component per fiber variable");
  for (int a = 0; a < xi.patch_->d(); ++a) xi.set({a}, components[a]);
  return xi;
}

NormalMultiSection NormalMultiSection::delta(PatchPtr patch, int a) {
  NormalMultiSection xi(std::move(patch), 1);
  xi.set({a}, Polynomial(1));
  return xi;
}

void NormalMultiSection::set(const IndexTuple& fiber_indices, const Polynomial& value) {
  if (value.depends_on(~patch_->base_mask()))
    throw std::invalid_argument("normal section entries must depend on base variables only");
  tensor_.set(fiber_indices, value);
}

std::vector<Polynomial> NormalMultiSection::components() const {
  if (degree() != 1) throw std::invalid_argument("components of a normal section of degree other than 1");
  std::vector<Polynomial> out(patch_->d());
  for (int a = 0; a < patch_->d(); ++a) out[a] = tensor_.at({a});
  return out;
}

NormalMultiSection NormalMultiSection::operator-() const {
  NormalMultiSection r = *this;
  r.tensor_ = -r.tensor_;
  return r;
}

NormalMultiSection& NormalMultiSection::operator+=(const NormalMultiSection& o) {
  require_same_patch(patch_, o.patch_);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  tensor_ += o.tensor_;
  return *this;
}

NormalMultiSection& NormalMultiSection::operator-=(const NormalMultiSection& o) { return *this += -o; }

NormalMultiSection operator*(const Rational& c, const NormalMultiSection& a) {
  NormalMultiSection r = a;
  r.tensor_ = a.tensor_.map([&](const IndexTuple&, const Polynomial& p) { return p * c; });
  return r;
}

bool NormalMultiSection::operator==(const NormalMultiSection& o) const {
  if (is_zero() && o.is_zero()) return true;
  return degree() == o.degree() && tensor_ == o.tensor_;
}

std::vector<std::string> NormalMultiSection::describe() const {
  std::vector<std::string> out;
  const VariableContext& ctx = patch_->context();
  for (const auto& [idx, v] : tensor_.entries()) {
    std::string s = "xi[";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + patch_->fiber()[idx[i]];
    out.push_back(s + "] = " + to_string(v, ctx));
  }
  return out;
}

NormalMultiSection project_P(const MultiOperator& op) {
  const Patch& patch = *op.patch();
  const int n = patch.n();
  NormalMultiSection out(op.patch(), op.arity());
  for (const auto& [idx, c] : op.X().entries()) {
    bool pure = true;
    for (int i : idx) pure = pure && i >= n;
    if (!pure) continue;
    IndexTuple fiber_idx;
    for (int i : idx) fiber_idx.push_back(i - n);
    out.set(fiber_idx, c.restrict_zero(patch.fiber_mask()));
  }
  return out;
}

MultiOperator include_I(const NormalMultiSection& xi) {
  const int n = xi.patch()->n();
  MultiOperator op(xi.patch(), xi.degree());
  for (const auto& [idx, c] : xi.tensor().entries()) {
    IndexTuple full;
    for (int a : idx) full.push_back(n + a);
    op.X().set(full, c);
  }
  return op;
}

namespace {

int output_degree(const std::vector<NormalMultiSection>& args) {
  int p = 2;
  for (const auto& a : args) p += a.degree() - 1;
  return p;
}

}  // namespace

NormalMultiSection project_bracket(const MultiOperator& B, const NormalMultiSection& xi) {
  const MultiOperator Ixi = include_I(xi);
  const Patch& patch = *B.patch();
  const int r = B.arity() + Ixi.arity() - 1;
  NormalMultiSection out(B.patch(), std::max(r, 0));
  if (r < 0 || B.is_zero() || Ixi.is_zero()) return out;
  const int n = patch.n(), N = patch.dim();
  std::vector<std::optional<Polynomial>> collapse(2 * N);
  for (int a = 0; a < N; ++a) collapse[N + a] = Polynomial::variable(a);
  const Rational inv = 1 / factorial(r);
  for (const IndexTuple& beta : increasing_tuples(patch.d(), r)) {
    std::vector<Polynomial> args;
    for (int b : beta) args.push_back(Polynomial::variable(n + b) - Polynomial::variable(N + n + b));
    Polynomial v = sj_bracket_apply(B, Ixi, args).substitute(collapse).restrict_zero(patch.fiber_mask());
    out.set(beta, v * inv);
  }
  return out;
}

NormalMultiSection derived_mk(const VData& V, const std::vector<NormalMultiSection>& args) {
  if (args.empty()) throw std::invalid_argument("derived brackets need at least one argument");
  for (const auto& a : args) require_same_patch(V.patch(), a.patch());
  const int p_out = output_degree(args);
  NormalMultiSection zero(V.patch(), std::max(p_out, 0));
  MultiOperator B = V.J.op();
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (B.is_zero()) return zero;
    B = sj_bracket(B, include_I(args[i]));
  }
  if (p_out < 0) return zero;
  return project_bracket(B, args.back());
}

namespace {

struct SortedArgs {
  std::vector<std::vector<Polynomial>> vectors;
  std::vector<Polynomial> sections;
  int sign = 1;
};

SortedArgs sort_arguments(const std::vector<NormalMultiSection>& args) {
  SortedArgs s;
  std::vector<int> image, degrees;
  for (std::size_t i = 0; i < args.size(); ++i) {
    degrees.push_back(args[i].shifted_degree());
    if (args[i].degree() > 1) throw std::invalid_argument("coordinate formulas cover arguments of degree <= 1");
    if (args[i].degree() == 1) {
      image.push_back(static_cast<int>(i));
      s.vectors.push_back(args[i].components());
    }
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].degree() == 0) {
      image.push_back(static_cast<int>(i));
      s.sections.push_back(args[i].at({}));
    }
  }
  s.sign = koszul_sign(image, degrees);
  return s;
}

// Applies D_s = s^a d_{y^a}.
Polynomial connection(const Patch& patch, const std::vector<Polynomial>& s, const Polynomial& f) {
  PolynomialAccumulator acc;
  for (int a = 0; a < patch.d(); ++a)
    if (!s[a].is_zero()) acc.add_product(s[a], f.derivative(patch.fiber_index(a)));
  return acc.take();
}

bool is_generator(const std::vector<Polynomial>& v, int* which) {
  int found = -1;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a].is_zero()) continue;
    if (found >= 0 || v[a] != Polynomial(1)) return false;
    found = static_cast<int>(a);
  }
  *which = found;
  return found >= 0;
}

}  // namespace

NormalMultiSection recursion_mk(const VData& V, const std::vector<NormalMultiSection>& args) {
  const Patch& patch = *V.patch();
  const int p_out = output_degree(args);
  SortedArgs sorted = sort_arguments(args);
  NormalMultiSection out(V.patch(), std::max(p_out, 0));
  if (p_out < 0) return out;
  const int k = static_cast<int>(sorted.vectors.size());
  std::function<Polynomial(int, const Polynomial&, const Polynomial&)> B =
      [&](int level, const Polynomial& a, const Polynomial& b) -> Polynomial {
    if (level == 0) return V.J.op().apply(std::vector<Polynomial>{a, b});
    const auto& s = sorted.vectors[level - 1];
    return B(level - 1, connection(patch, s, a), b) + B(level - 1, a, connection(patch, s, b)) -
           connection(patch, s, B(level - 1, a, b));
  };
  const VarMask fiber = patch.fiber_mask();
  const Rational sign(sorted.sign);
  if (sorted.sections.size() == 2) {
    out.set({}, -B(k, sorted.sections[0], sorted.sections[1]).restrict_zero(fiber) * sign);
  } else if (sorted.sections.size() == 1) {
    for (int b = 0; b < patch.d(); ++b)
      out.set({b}, -B(k, sorted.sections[0], Polynomial::variable(patch.fiber_index(b))).restrict_zero(fiber) * sign);
  } else {
    for (const IndexTuple& ab : increasing_tuples(patch.d(), 2)) {
      Polynomial v = B(k, Polynomial::variable(patch.fiber_index(ab[0])), Polynomial::variable(patch.fiber_index(ab[1])));
      out.set(ab, v.restrict_zero(fiber) * (sign / 2));
    }
  }
  return out;
}

NormalMultiSection generator_formula_mk(const VData& V, const std::vector<NormalMultiSection>& args) {
  const Patch& patch = *V.patch();
  const int n = patch.n();
  const int p_out = output_degree(args);
  SortedArgs sorted = sort_arguments(args);
  NormalMultiSection out(V.patch(), std::max(p_out, 0));
  if (p_out < 0) return out;
  std::vector<int> directions;
  for (const auto& v : sorted.vectors) {
    int a = -1;
    if (!is_generator(v, &a)) throw std::invalid_argument("generator formulas need constant delta arguments");
    directions.push_back(n + a);
  }
  const VarMask fiber = patch.fiber_mask();
  auto fiber_jet = [&](Polynomial p) {
    for (int v : directions) p = p.derivative(v);
    return p.restrict_zero(fiber);
  };
  const MultiOperator& J = V.J.op();
  const int m = static_cast<int>(directions.size());
  const Rational sign(sorted.sign);
  if (sorted.sections.size() == 2) {
    // m_{k+1}(d_{a_1}..d_{a_{k-1}}, f, g) = (-1)^k d_{a_1}..d_{a_{k-1}} J(f, g)|_S
    const int k = m + 1;
    const Polynomial& f = sorted.sections[0];
    const Polynomial& g = sorted.sections[1];
    PolynomialAccumulator acc;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (i != j) acc.add_product(J.X().at({i, j}), f.derivative(i) * g.derivative(j), 2);
      acc.add_product(J.G().at({i}), g * f.derivative(i) - f * g.derivative(i));
    }
    out.set({}, fiber_jet(acc.take()) * (k % 2 ? -sign : sign));
  } else if (sorted.sections.size() == 1) {
    // m_{k+1}(d_{a_1}..d_{a_k}, f) = (-1)^k d_{a_1}..d_{a_k} (2 J^{bi} d_i f + J^b f)|_S delta_b
    const int k = m;
    const Polynomial& f = sorted.sections[0];
    for (int b = 0; b < patch.d(); ++b) {
      PolynomialAccumulator acc;
      for (int i = 0; i < n; ++i) acc.add_product(J.X().at({n + b, i}), f.derivative(i), 2);
      acc.add_product(J.G().at({n + b}), f);
      out.set({b}, fiber_jet(acc.take()) * (k % 2 ? -sign : sign));
    }
  } else {
    // m_{k+1}(d_{a_1}..d_{a_{k+1}}) = -(-1)^k d_{a_1}..d_{a_{k+1}} J^{ab}|_S delta_a ^ delta_b
    const int k = m - 1;
    for (const IndexTuple& ab : increasing_tuples(patch.d(), 2))
      out.set(ab, fiber_jet(J.X().at({n + ab[0], n + ab[1]})) * (k % 2 ? sign : -sign));
  }
  return out;
}

NormalMultiSection oracle_mk(const VData& V, const std::vector<NormalMultiSection>& args) {
  if (args.empty()) throw std::invalid_argument("brackets need at least one argument");
  for (const auto& a : args) require_same_patch(V.patch(), a.patch());
  bool generators = true;
  for (const auto& a : args) {
    int which = -1;
    if (a.degree() == 1 && !is_generator(a.components(), &which)) generators = false;
  }
  return generators ? generator_formula_mk(V, args) : recursion_mk(V, args);
}

CoisotropyReport is_coisotropic_submanifold(const VData& V) {
  const Patch& patch = *V.patch();
  CoisotropyReport r;
  NormalMultiSection pj = project_P(V.J.op());
  r.p_vanishes = pj.is_zero();
  for (const std::string& s : pj.describe()) r.witness.push_back("P(J) " + s);
  r.tangent = true;
  for (int a = 0; a < patch.d(); ++a) {
    Hamiltonian h = hamiltonian(V.J, {V.patch(), Polynomial::variable(patch.fiber_index(a))});
    for (int b = 0; b < patch.d(); ++b) {
      Polynomial c = h.symbol[patch.fiber_index(b)].restrict_zero(patch.fiber_mask());
      if (!c.is_zero()) {
        r.tangent = false;
        r.witness.push_back("X_{" + patch.fiber()[a] + "} normal component " + patch.fiber()[b] + " = " +
                            to_string(c, patch.context()));
      }
    }
  }
  return r;
}

bool is_coisotropic_section(const VData& V, const std::vector<Polynomial>& s) {
  return project_P(pushforward_fiber_affine(V.J.op(), s, -1)).is_zero();
}

NormalMultiSection homotopy_jacobi(const VData& V, const std::vector<NormalMultiSection>& args) {
  const int n = static_cast<int>(args.size());
  std::vector<int> degrees;
  for (const auto& a : args) degrees.push_back(a.shifted_degree());
  NormalMultiSection total(V.patch(), 0);
  for (int i = 1; i <= n; ++i) {
    for (const SignedPermutation& sigma : unshuffles(i, n - i)) {
      std::vector<NormalMultiSection> inner, outer;
      for (int j = 0; j < i; ++j) inner.push_back(args[sigma.image[j]]);
      NormalMultiSection first = derived_mk(V, inner);
      if (first.is_zero()) continue;
      outer.push_back(first);
      for (int j = i; j < n; ++j) outer.push_back(args[sigma.image[j]]);
      NormalMultiSection term = derived_mk(V, outer);
      if (term.is_zero()) continue;
      total += Rational(koszul_sign(sigma.image, degrees)) * term;
    }
  }
  return total;
}

}  // namespace coiso
