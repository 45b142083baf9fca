#include "coiso/catalog/catalog.hpp"

#include "coiso/poissonization/multivector.hpp"
#include "coiso/ring/linalg.hpp"

namespace coiso {

std::vector<std::string> contact_x_names(int n) {
  if (n == 1) return {"x"};
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::string> contact_p_names(int n) {
  if (n == 1) return {"p"};
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("p" + std::to_string(i));
  return v;
}

namespace {

void require_valid(const JacobiStructure& J, std::vector<std::string>& provenance) {
  JacobiCheckResult r = jacobi_check(J);
  if (!r.holds) throw JacobiFailure("structure fails the Jacobi identity", r.witness);
  provenance.push_back("[J,J] = 0");
  if (!r.classical.holds()) throw JacobiFailure("classical pair equations fail", r.classical.witness);
  provenance.push_back("[Gamma,Lambda] = 0 and [Lambda,Lambda] = -2 Gamma^Lambda");
}

}  // namespace

NamedStructure contact_structure_on(const PatchPtr& patch, const std::vector<std::string>& x,
                                    const std::string& u, const std::vector<std::string>& p) {
  const VariableContext& ctx = patch->context();
  const int N = patch->dim();
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(p.size()) != n || N != 2 * n + 1) throw std::invalid_argument("contact patch has the wrong shape");
  std::vector<int> xi(n), pi(n);
  for (int i = 0; i < n; ++i) {
    xi[i] = ctx.index(x[i]);
    pi[i] = ctx.index(p[i]);
  }
  const int ui = ctx.index(u);

  std::vector<Polynomial> theta(N);
  theta[ui] = Polynomial(1);
  for (int i = 0; i < n; ++i) theta[xi[i]] = -Polynomial::variable(pi[i]);
  // flat(v)_b = theta(v) theta_b + v^a (d theta)_{ab}; d theta = dx^i ^ dp_i.
  PolyMatrix flat = zero_matrix(N, N);  // flat[b][a]
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) flat[b][a] = theta[a] * theta[b];
  for (int i = 0; i < n; ++i) {
    flat[pi[i]][xi[i]] += Polynomial(1);
    flat[xi[i]][pi[i]] -= Polynomial(1);
  }
  const Polynomial det = determinant(flat);
  if (!det.is_constant() || det.is_zero()) throw std::logic_error("contact flat map is not constant-invertible");
  const PolyMatrix sharp = scale(adjugate(flat), 1 / det.constant_term());

  auto apply_sharp = [&](const std::vector<Polynomial>& eta) {
    std::vector<Polynomial> v(N);
    for (int a = 0; a < N; ++a) {
      PolynomialAccumulator acc;
      for (int b = 0; b < N; ++b) acc.add_product(sharp[a][b], eta[b]);
      v[a] = acc.take();
    }
    return v;
  };
  const std::vector<Polynomial> reeb = apply_sharp(theta);
  auto hamiltonian_field = [&](const Polynomial& f) {
    Polynomial rf;
    for (int a = 0; a < N; ++a) rf += reeb[a] * f.derivative(a);
    std::vector<Polynomial> eta(N);
    for (int b = 0; b < N; ++b) eta[b] = (rf + f) * theta[b] - f.derivative(b);
    return apply_sharp(eta);
  };
  Evaluator bracket = [&](const std::vector<Polynomial>& fg) {
    const auto X = hamiltonian_field(fg[0]);
    const auto Y = hamiltonian_field(fg[1]);
    PolynomialAccumulator acc;
    for (int b = 0; b < N; ++b) {
      if (theta[b].is_zero()) continue;
      Polynomial lie;
      for (int a = 0; a < N; ++a) lie += X[a] * Y[b].derivative(a) - Y[a] * X[b].derivative(a);
      acc.add_product(theta[b], lie);
    }
    return acc.take();
  };

  NamedStructure s;
  s.name = "darboux_contact(" + std::to_string(n) + ")";
  s.patch = patch;
  s.J = JacobiStructure(extract_components(bracket, patch, 2));
  s.provenance.push_back("components extracted from theta([X_f, X_g]) for theta = du - p_i dx^i");
  require_valid(s.J, s.provenance);

  // The extended pairing [[Lambda, -Gamma], [Gamma, 0]] is nondegenerate for a contact structure.
  PolyMatrix ext = zero_matrix(N + 1, N + 1);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) ext[a][b] = s.J.op().X().at({a, b}) * Rational(2);
    ext[a][N] = s.J.op().G().at({a});
    ext[N][a] = -s.J.op().G().at({a});
  }
  if (determinant(ext).is_zero()) throw std::logic_error("contact pairing is degenerate");
  s.provenance.push_back("extended bi-symbol pairing nondegenerate");
  return s;
}

NamedStructure darboux_contact(int n) {
  if (n < 1) throw std::invalid_argument("darboux_contact needs n >= 1");
  auto x = contact_x_names(n), p = contact_p_names(n);
  std::vector<std::string> fiber{"u"};
  fiber.insert(fiber.end(), p.begin(), p.end());
  return contact_structure_on(make_patch(x, fiber), x, "u", p);
}

VData legendrian_patch(int n) { return VData{darboux_contact(n).J}; }

VData flowout_patch(int n) {
  if (n < 1) throw std::invalid_argument("flowout_patch needs n >= 1");
  auto x = contact_x_names(n), p = contact_p_names(n);
  std::vector<std::string> base = x;
  base.push_back("u");
  NamedStructure s = contact_structure_on(make_patch(base, p), x, "u", p);
  return VData{s.J};
}

NamedStructure poisson_as_jacobi(const PatchPtr& patch, const AntisymTensor& bivector) {
  if (bivector.rank() != 2 || bivector.index_range() != patch->dim())
    throw std::invalid_argument("bivector has the wrong shape");
  NamedStructure s;
  s.name = "poisson";
  s.patch = patch;
  MultiOperator op(patch, 2);
  op.X() = bivector.map([](const IndexTuple&, const Polynomial& c) { return c * make_rational(1, 2); });
  s.J = JacobiStructure(op);
  const int N = patch->dim();
  MultiVector lambda(N, 2, N);
  for (const auto& [idx, c] : bivector.entries()) lambda.set(idx, LaurentPolynomial(N, c));
  MultiVector square = sn_bracket(lambda, lambda);
  JacobiCheckResult r = jacobi_check(s.J);
  if (r.holds != square.is_zero()) throw std::logic_error("Jacobi check disagrees with [Lambda,Lambda]");
  if (!r.holds) throw JacobiFailure("bivector is not Poisson", square.describe(patch->context()));
  s.provenance.push_back("[J,J] = 0");
  s.provenance.push_back("[Lambda,Lambda] = 0");
  return s;
}

}  // namespace coiso
