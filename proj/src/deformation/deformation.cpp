#include "coiso/deformation/deformation.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "coiso/operators/pushforward.hpp"

namespace coiso {

void FormalSeries::validate() const {
  if (!patch) throw std::invalid_argument("formal series without a patch");
  for (const auto& c : coefficients) {
    require_same_patch(patch, c.patch());
    if (c.degree() != 1) throw std::invalid_argument("formal series coefficients must have degree 1");
  }
}

void GaugeFamily::validate() const {
  s.validate();
  const int t = s.patch->context().index(time);
  if (t >= s.patch->n()) throw std::invalid_argument("time must be a base coordinate");
  for (const auto& l : lambda) {
    require_same_patch(s.patch, l.patch());
    if (l.degree() != 0) throw std::invalid_argument("gauge generators must have degree 0");
  }
}

int fiber_degree(const MultiOperator& op) {
  const VarMask fiber = op.patch()->fiber_mask();
  int d = 0;
  for (const auto& [idx, c] : op.X().entries()) d = std::max(d, c.degree_in(fiber));
  for (const auto& [idx, c] : op.G().entries()) d = std::max(d, c.degree_in(fiber));
  return d;
}

namespace {

int series_bound(const VData& V) { return fiber_degree(V.J.op()) + 2; }

NormalMultiSection map_entries(const NormalMultiSection& xi, const std::function<Polynomial(const Polynomial&)>& f) {
  NormalMultiSection out(xi.patch(), xi.degree());
  for (const auto& [idx, c] : xi.tensor().entries()) out.set(idx, f(c));
  return out;
}

// sum_{k=0}^{K} (1/k!) P[B_k, I last] with B_0 = J and B_k = [B_{k-1}, I xi].
NormalMultiSection chain_sum(const VData& V, const NormalMultiSection& xi, const NormalMultiSection& last) {
  const int K = series_bound(V);
  NormalMultiSection total(V.patch(), last.degree() + 1);
  MultiOperator B = V.J.op();
  const MultiOperator Ixi = include_I(xi);
  for (int k = 0; k <= K; ++k) {
    if (B.is_zero()) break;
    total += (1 / factorial(k)) * project_bracket(B, last);
    if (k < K) B = sj_bracket(B, Ixi);
  }
  return total;
}

std::string fresh_name(const Patch& patch, const std::string& stem) {
  std::string name = stem;
  for (int i = 1; patch.context().find(name); ++i) name = stem + std::to_string(i);
  return name;
}

struct EpsPatch {
  VData V;
  int eps;
};

EpsPatch with_eps(const VData& V) {
  EpsPatch e{extend_base(V, fresh_name(*V.patch(), "eps")), V.patch()->n()};
  return e;
}

NormalMultiSection eps_sum(const EpsPatch& e, const std::vector<NormalMultiSection>& coeffs, int first_power,
                           int degree) {
  NormalMultiSection total(e.V.patch(), degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Polynomial w = Polynomial::variable(e.eps).pow(static_cast<unsigned>(first_power + i));
    total += map_entries(transplant(coeffs[i], e.V.patch()), [&](const Polynomial& p) { return p * w; });
  }
  return total;
}

// Lowest eps order <= N at which xi has a nonzero coefficient, with that coefficient described.
std::optional<int> lowest_order(const EpsPatch& e, const PatchPtr& original, const NormalMultiSection& xi, int N,
                                std::vector<std::string>& witness) {
  const VarMask eps = var_bit(e.eps);
  std::vector<int> back(e.V.patch()->dim(), -1);
  const std::vector<int> forward = coordinate_map(*original, *e.V.patch());
  for (std::size_t i = 0; i < forward.size(); ++i) back[forward[i]] = static_cast<int>(i);
  for (int order = 0; order <= N; ++order) {
    NormalMultiSection coeff(original, xi.degree());
    bool nonzero = false;
    for (const auto& [idx, c] : xi.tensor().entries()) {
      Polynomial part = c.coefficient(eps, Monomial::variable(e.eps, order));
      if (part.is_zero()) continue;
      nonzero = true;
      coeff.set(idx, part.remap(back));
    }
    if (nonzero) {
      witness.push_back("order " + std::to_string(order));
      for (const std::string& s : coeff.describe()) witness.push_back(s);
      return order;
    }
  }
  return std::nullopt;
}

}  // namespace

NormalMultiSection transplant(const NormalMultiSection& xi, const PatchPtr& target) {
  const Patch& from = *xi.patch();
  const std::vector<int> map = coordinate_map(from, *target);
  std::vector<int> fiber(from.d());
  for (int a = 0; a < from.d(); ++a) {
    fiber[a] = map[from.fiber_index(a)] - target->n();
    if (fiber[a] < 0) throw std::invalid_argument("fiber coordinate became a base coordinate");
  }
  NormalMultiSection out(target, xi.degree());
  for (const auto& [idx, c] : xi.tensor().entries()) {
    IndexTuple t;
    for (int a : idx) t.push_back(fiber[a]);
    auto [sorted, sign] = sort_with_sign(t);
    out.set(sorted, c.remap(map) * Rational(sign));
  }
  return out;
}

VData extend_base(const VData& V, const std::string& name) {
  std::vector<std::string> base = V.patch()->base();
  base.push_back(name);
  PatchPtr target = make_patch(base, V.patch()->fiber());
  return VData{JacobiStructure(transplant(V.J.op(), target))};
}

NormalMultiSection mc_series(const VData& V, const NormalMultiSection& s) {
  require_same_patch(V.patch(), s.patch());
  if (s.degree() != 1) throw std::invalid_argument("mc_series needs a degree-1 section");
  const NormalMultiSection xi = -s;
  NormalMultiSection total = project_P(V.J.op());
  const int K = series_bound(V);
  MultiOperator B = V.J.op();
  const MultiOperator Ixi = include_I(xi);
  for (int k = 1; k <= K; ++k) {
    if (B.is_zero()) break;
    total += (1 / factorial(k)) * project_bracket(B, xi);
    if (k < K) B = sj_bracket(B, Ixi);
  }
  return total;
}

NormalMultiSection delta_mc(const VData& V, const NormalMultiSection& s, const NormalMultiSection& lambda) {
  require_same_patch(V.patch(), s.patch());
  require_same_patch(V.patch(), lambda.patch());
  if (s.degree() != 1 || lambda.degree() != 0) throw std::invalid_argument("delta_mc needs degrees 1 and 0");
  return chain_sum(V, -s, lambda);
}

NormalMultiSection delta_mc_pushforward(const VData& V, const NormalMultiSection& s, const Polynomial& lambda) {
  const Hamiltonian h = hamiltonian(V.J, {V.patch(), lambda});
  return -project_P(pushforward_fiber_affine(h.derivation, s.components(), -1));
}

NormalMultiSection restrict_to_zero_section(const VData& V, const Polynomial& lambda) {
  return NormalMultiSection::section(V.patch(), lambda.restrict_zero(V.patch()->fiber_mask()));
}

NormalMultiSection restrict_to_graph(const VData& V, const NormalMultiSection& s, const Polynomial& lambda) {
  const Patch& patch = *V.patch();
  std::vector<std::optional<Polynomial>> images(patch.dim());
  for (int a = 0; a < patch.d(); ++a) images[patch.fiber_index(a)] = s.at({a});
  return NormalMultiSection::section(V.patch(), lambda.substitute(images));
}

NormalMultiSection kuranishi(const VData& V, const NormalMultiSection& s) {
  NormalMultiSection m1 = derived_mk(V, {s});
  if (!m1.is_zero()) throw NotACocycle(m1.describe());
  NormalMultiSection k = derived_mk(V, {s, s});
  if (!derived_mk(V, {k}).is_zero()) throw std::logic_error("m1(m2(s, s)) does not vanish");
  return k;
}

FormalCheck verify_formal_mc(const VData& V, const FormalSeries& s, int N) {
  s.validate();
  require_same_patch(V.patch(), s.patch);
  if (N < 0) throw std::invalid_argument("negative order");
  const EpsPatch e = with_eps(V);
  std::vector<NormalMultiSection> coeffs(s.coefficients.begin(),
                                         s.coefficients.begin() + std::min(N, s.order()));
  NormalMultiSection mc = mc_series(e.V, eps_sum(e, coeffs, 1, 1));
  FormalCheck r;
  if (auto order = lowest_order(e, V.patch(), mc, N, r.witness)) {
    r.holds = false;
    r.first_failing_order = *order;
  }
  return r;
}

GaugeCheck verify_gauge(const VData& V, const GaugeFamily& family, int N) {
  family.validate();
  require_same_patch(V.patch(), family.s.patch);
  const int t = V.patch()->context().index(family.time);
  const MultiOperator& J = V.J.op();
  bool inert = true;
  for (const auto* tensor : {&J.X(), &J.G()})
    for (const auto& [idx, c] : tensor->entries())
      inert = inert && !c.depends_on(var_bit(t)) && std::find(idx.begin(), idx.end(), t) == idx.end();
  if (!inert) throw std::invalid_argument("the structure depends on the time coordinate");

  const EpsPatch e = with_eps(V);
  std::vector<NormalMultiSection> s_coeffs(family.s.coefficients.begin(),
                                           family.s.coefficients.begin() + std::min(N, family.s.order()));
  std::vector<NormalMultiSection> l_coeffs(family.lambda.begin(),
                                           family.lambda.begin() + std::min<std::size_t>(N + 1, family.lambda.size()));
  const NormalMultiSection S = eps_sum(e, s_coeffs, 1, 1);
  const NormalMultiSection L = eps_sum(e, l_coeffs, 0, 0);

  GaugeCheck r;
  auto residual = [&](const NormalMultiSection& s, const NormalMultiSection& lhs, const NormalMultiSection& l) {
    return lhs - chain_sum(e.V, s, l);
  };
  const NormalMultiSection dS = map_entries(S, [&](const Polynomial& p) { return p.derivative(t); });
  std::vector<std::string> witness;
  r.equation_holds = !lowest_order(e, V.patch(), residual(S, dS, L), N, witness);
  for (const auto& w : witness) r.witness.push_back("equation: " + w);

  r.samples_hold = true;
  r.mc_at_samples = true;
  for (int j = 0; j < N + 2; ++j) {
    const Rational c = make_rational(j, 2);
    std::vector<std::optional<Polynomial>> at(e.V.patch()->dim());
    at[t] = Polynomial(c);
    auto fix = [&](const NormalMultiSection& xi) {
      return map_entries(xi, [&](const Polynomial& p) { return p.substitute(at); });
    };
    const NormalMultiSection Sc = fix(S);
    std::vector<std::string> w1, w2;
    if (lowest_order(e, V.patch(), residual(Sc, fix(dS), fix(L)), N, w1)) {
      r.samples_hold = false;
      for (const auto& w : w1) r.witness.push_back("t = " + to_string(c) + ": " + w);
    }
    if (lowest_order(e, V.patch(), mc_series(e.V, -Sc), N, w2)) {
      r.mc_at_samples = false;
      for (const auto& w : w2) r.witness.push_back("MC at t = " + to_string(c) + ": " + w);
    }
  }
  return r;
}

}  // namespace coiso
