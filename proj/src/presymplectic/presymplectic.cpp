#include "coiso/presymplectic/presymplectic.hpp"

#include <algorithm>
#include <optional>

namespace coiso {

namespace {

std::vector<std::optional<Polynomial>> reference_images(const PreSympData& data) {
  std::vector<std::optional<Polynomial>> at(data.patch->dim());
  for (std::size_t k = 0; k < data.reference.size(); ++k) at[k] = Polynomial(data.reference[k]);
  return at;
}

RationalMatrix constant_inverse(const PolyMatrix& W) {
  const Polynomial det = determinant(W);
  if (det.is_zero() || !det.is_constant()) throw SingularForm();
  const Rational inv = 1 / det.constant_term();
  PolyMatrix adj = adjugate(W);
  RationalMatrix out(W.size(), std::vector<Rational>(W.size()));
  for (std::size_t a = 0; a < W.size(); ++a)
    for (std::size_t b = 0; b < W.size(); ++b) out[a][b] = adj[a][b].constant_term() * inv;
  return out;
}

PolyMatrix chain(const PolyMatrix& winv, const std::vector<PolyMatrix>& F, const std::vector<int>& indices) {
  PolyMatrix out = winv;
  for (int i : indices) out = multiply(multiply(out, F[i]), winv);
  return out;
}

Polynomial pairing(const PolyMatrix& M, const std::vector<Polynomial>& v, const std::vector<Polynomial>& w) {
  PolynomialAccumulator b;
  for (std::size_t a = 0; a < M.size(); ++a)
    for (std::size_t c = 0; c < M.size(); ++c) {
      if (M[a][c].is_zero() || v[a].is_zero() || w[c].is_zero()) continue;
      b.add(M[a][c] * v[a] * w[c]);
    }
  return b.take();
}

// Column a of d_{x^i} G^j_a.
std::vector<Polynomial> dG(const PreSympData& data, int i, int j) {
  std::vector<Polynomial> out(data.d);
  for (int a = 0; a < data.d; ++a) out[a] = data.G[j][a].derivative(data.x(i));
  return out;
}

std::vector<Polynomial> frame(const PreSympData& data, const Polynomial& f) {
  std::vector<Polynomial> out(data.d);
  for (int a = 0; a < data.d; ++a) out[a] = frame_derivative(data, a, f);
  return out;
}

std::optional<int> generator_index(const NormalMultiSection& xi) {
  const auto& entries = xi.tensor().entries();
  if (entries.size() != 1) return std::nullopt;
  const auto& [idx, c] = *entries.begin();
  if (c != Polynomial(1)) return std::nullopt;
  return idx[0];
}

std::vector<int> apply(const std::vector<int>& indices, const std::vector<int>& image, std::size_t count) {
  std::vector<int> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(indices[image[k]]);
  return out;
}

}  // namespace

PreSympData make_presymplectic(const std::vector<std::string>& x, const std::vector<std::string>& u, PolyMatrix W,
                               std::vector<std::vector<Polynomial>> G, std::vector<Rational> reference,
                               std::vector<std::string> p) {
  PreSympData data;
  data.n = static_cast<int>(x.size());
  data.d = static_cast<int>(u.size());
  if (p.empty())
    for (int i = 0; i < data.n; ++i) p.push_back("p" + std::to_string(i + 1));
  if (static_cast<int>(p.size()) != data.n) throw std::invalid_argument("one fiber coordinate per leaf coordinate");
  std::vector<std::string> base = x;
  base.insert(base.end(), u.begin(), u.end());
  data.patch = make_patch(base, p);

  if (static_cast<int>(W.size()) != data.d) throw std::invalid_argument("W must be d x d");
  for (const auto& row : W)
    if (static_cast<int>(row.size()) != data.d) throw std::invalid_argument("W must be d x d");
  if (static_cast<int>(G.size()) != data.n) throw std::invalid_argument("G must have n rows");
  for (const auto& row : G)
    if (static_cast<int>(row.size()) != data.d) throw std::invalid_argument("G must have d columns");
  const VarMask fiber = data.patch->fiber_mask();
  for (int a = 0; a < data.d; ++a)
    for (int b = 0; b < data.d; ++b) {
      if (W[a][b] != -W[b][a]) throw std::invalid_argument("W is not antisymmetric");
      if (W[a][b].depends_on(fiber)) throw std::invalid_argument("W depends on p");
    }
  for (const auto& row : G)
    for (const auto& g : row)
      if (g.depends_on(fiber)) throw std::invalid_argument("G depends on p");
  if (reference.empty()) reference.assign(data.n + data.d, Rational(0));
  if (static_cast<int>(reference.size()) != data.n + data.d)
    throw std::invalid_argument("reference point needs n + d values");
  data.W = std::move(W);
  data.G = std::move(G);
  data.reference = std::move(reference);
  constant_inverse(substitute(data.W, reference_images(data)));
  return data;
}

Polynomial frame_derivative(const PreSympData& data, int a, const Polynomial& f) {
  Polynomial out = f.derivative(data.u(a));
  for (int i = 0; i < data.n; ++i) out += data.G[i][a] * f.derivative(data.x(i));
  return out;
}

std::vector<PolyMatrix> curvature_F(const PreSympData& data) {
  std::vector<PolyMatrix> F(data.n, zero_matrix(data.d, data.d));
  for (int i = 0; i < data.n; ++i)
    for (int a = 0; a < data.d; ++a)
      for (int b = 0; b < data.d; ++b)
        F[i][a][b] = frame_derivative(data, a, data.G[i][b]) - frame_derivative(data, b, data.G[i][a]);
  return F;
}

InverseForm w_inverse(const PreSympData& data) {
  InverseForm r;
  const Polynomial det = determinant(data.W);
  if (!det.is_zero() && det.is_constant()) {
    r.exact = true;
    r.inverse = scale(adjugate(data.W), 1 / det.constant_term());
    return r;
  }
  const RationalMatrix inv = constant_inverse(substitute(data.W, reference_images(data)));
  r.inverse = zero_matrix(data.d, data.d);
  for (int a = 0; a < data.d; ++a)
    for (int b = 0; b < data.d; ++b) r.inverse[a][b] = Polynomial(inv[a][b]);
  return r;
}

PolyMatrix wtilde_inverse_jet(const PreSympData& data, const std::vector<int>& indices) {
  const PolyMatrix winv = w_inverse(data).inverse;
  const std::vector<PolyMatrix> F = curvature_F(data);
  const int m = static_cast<int>(indices.size());
  PolyMatrix total = zero_matrix(data.d, data.d);
  for (const SignedPermutation& sigma : permutations(m))
    total = add(total, chain(winv, F, apply(indices, sigma.image, m)));
  return m % 2 ? scale(total, -1) : total;
}

std::map<IndexTuple, PolyMatrix> wtilde_inverse_jets(const PreSympData& data, int m) {
  std::map<IndexTuple, PolyMatrix> out;
  IndexTuple idx(m, 0);
  while (true) {
    out.emplace(idx, wtilde_inverse_jet(data, idx));
    int k = m - 1;
    while (k >= 0 && idx[k] == data.n - 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < m; ++j) idx[j] = idx[k];
  }
  return out;
}

ThickenedPoisson thickening_poisson(const PreSympData& data, int K) {
  if (K < 0) throw std::invalid_argument("negative truncation order");
  const int dim = data.patch->dim();
  // Truncated w~^{-1} = sum over multisets alpha of p^alpha / alpha! times the jet.
  PolyMatrix winv_tilde = zero_matrix(data.d, data.d);
  for (int m = 0; m <= K && (m == 0 || data.n > 0); ++m)
    for (const auto& [idx, jet] : wtilde_inverse_jets(data, m)) {
      Polynomial weight(1);
      Rational denom(1);
      for (int i = 0; i < data.n; ++i) {
        const auto c = std::count(idx.begin(), idx.end(), i);
        weight *= Polynomial::variable(data.p(i)).pow(static_cast<unsigned>(c));
        denom *= factorial(static_cast<int>(c));
      }
      const Polynomial term = weight * (1 / denom);
      for (int a = 0; a < data.d; ++a)
        for (int b = 0; b < data.d; ++b) winv_tilde[a][b] += jet[a][b] * term;
    }

  // X_a = GG_a - p_j d_{x^i} G^j_a d_{p_i}, as component vectors over (x, u, p).
  std::vector<std::vector<Polynomial>> Xa(data.d, std::vector<Polynomial>(dim));
  for (int a = 0; a < data.d; ++a) {
    for (int i = 0; i < data.n; ++i) Xa[a][data.x(i)] = data.G[i][a];
    Xa[a][data.u(a)] = Polynomial(1);
    for (int i = 0; i < data.n; ++i) {
      Polynomial c;
      for (int j = 0; j < data.n; ++j) c -= Polynomial::variable(data.p(j)) * data.G[j][a].derivative(data.x(i));
      Xa[a][data.p(i)] = c;
    }
  }

  MultiOperator op(data.patch, 2);
  for (const IndexTuple& ab : increasing_tuples(dim, 2)) {
    const int al = ab[0], be = ab[1];
    PolynomialAccumulator b;
    for (int a = 0; a < data.d; ++a)
      for (int c = 0; c < data.d; ++c) {
        if (winv_tilde[a][c].is_zero()) continue;
        b.add(winv_tilde[a][c] * (Xa[a][al] * Xa[c][be] - Xa[a][be] * Xa[c][al]), Rational(-1, 2));
      }
    Polynomial pi = b.take();
    for (int i = 0; i < data.n; ++i)
      if (al == data.x(i) && be == data.p(i)) pi += Polynomial(1);
    op.X().set(ab, pi * Rational(1, 2));
  }
  ThickenedPoisson t{VData{JacobiStructure(op)}, K, w_inverse(data).exact};
  return t;
}

NormalMultiSection ohpark_mk(const PreSympData& data, const std::vector<NormalMultiSection>& args, int K) {
  std::vector<int> forms, functions, degrees;
  std::vector<int> form_index;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const NormalMultiSection& a = args[k];
    require_same_patch(data.patch, a.patch());
    degrees.push_back(a.shifted_degree());
    if (a.degree() == 1) {
      auto i = generator_index(a);
      if (!i) throw std::invalid_argument("degree-1 arguments must be leafwise differentials dx^i");
      forms.push_back(static_cast<int>(k));
      form_index.push_back(*i);
    } else if (a.degree() == 0) {
      functions.push_back(static_cast<int>(k));
    } else {
      throw std::invalid_argument("arguments must be generators");
    }
  }
  if (args.empty()) throw std::invalid_argument("empty argument list");
  std::vector<int> image = forms;
  image.insert(image.end(), functions.begin(), functions.end());
  const Rational sign(koszul_sign(image, degrees));
  const int m = static_cast<int>(forms.size());
  const int r = static_cast<int>(functions.size());
  const int out_degree = 2 - r;
  if (r > 2 || (r == 0 && m == 1)) return NormalMultiSection(data.patch, std::max(out_degree, 0));
  const int chain_length = r == 2 ? m : r == 1 ? m - 1 : m - 2;
  if (chain_length > K) throw InsufficientJets();

  const PolyMatrix winv = w_inverse(data).inverse;
  const std::vector<PolyMatrix> F = curvature_F(data);
  NormalMultiSection out(data.patch, out_degree);

  if (r == 2) {
    const auto f = frame(data, args[functions[0]].at({})), g = frame(data, args[functions[1]].at({}));
    Polynomial total;
    for (const SignedPermutation& sigma : permutations(m))
      total += pairing(chain(winv, F, apply(form_index, sigma.image, m)), f, g);
    out.set({}, total);
  } else if (r == 1 && m == 0) {
    const Polynomial& f = args[functions[0]].at({});
    for (int i = 0; i < data.n; ++i) out.set({i}, -f.derivative(data.x(i)));
  } else if (r == 1) {
    const auto f = frame(data, args[functions[0]].at({}));
    for (int i = 0; i < data.n; ++i) {
      Polynomial total;
      for (const SignedPermutation& sigma : permutations(m)) {
        const std::vector<int> seq = apply(form_index, sigma.image, m);
        total -= pairing(chain(winv, F, {seq.begin(), seq.end() - 1}), dG(data, i, seq.back()), f);
      }
      out.set({i}, total);
    }
  } else {
    std::vector<std::vector<Polynomial>> c(data.n, std::vector<Polynomial>(data.n));
    for (const SignedPermutation& sigma : permutations(m)) {
      const std::vector<int> seq = apply(form_index, sigma.image, m);
      const PolyMatrix M = chain(winv, F, {seq.begin(), seq.end() - 2});
      for (int i = 0; i < data.n; ++i)
        for (int j = 0; j < data.n; ++j)
          c[i][j] -= Rational(1, 2) * pairing(M, dG(data, i, seq[m - 2]), dG(data, j, seq[m - 1]));
    }
    for (int i = 0; i < data.n; ++i)
      for (int j = i + 1; j < data.n; ++j) out.set({i, j}, Rational(1, 2) * (c[i][j] - c[j][i]));
  }
  return sign * out;
}

NormalMultiSection at_reference(const PreSympData& data, const NormalMultiSection& xi) {
  const auto at = reference_images(data);
  NormalMultiSection out(xi.patch(), xi.degree());
  for (const auto& [idx, c] : xi.tensor().entries()) out.set(idx, c.substitute(at));
  return out;
}

}  // namespace coiso
