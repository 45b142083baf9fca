#include <doctest.h>

#include "coiso/operators/jacobi.hpp"
#include "coiso/operators/pushforward.hpp"
#include "coiso/ring/parser.hpp"
#include "support/generators.hpp"

using namespace coiso;
using namespace coiso::testing;

namespace {

PatchPtr xup() { return make_patch({"x"}, {"u", "p"}); }

Polynomial P(const PatchPtr& patch, const std::string& s) { return parse_polynomial(s, patch->context()); }

// Brute-force action of the normal form: sums over all index tuples and all permutations.
Polynomial brute_apply(const MultiOperator& op, const std::vector<Polynomial>& f) {
  const int k = op.arity();
  const int n = op.patch()->dim();
  Polynomial out;
  std::vector<int> idx(k, 0);
  std::function<void(int)> walk_x = [&](int pos) {
    if (pos == k) {
      Polynomial c = op.X().at(idx);
      if (c.is_zero()) return;
      for (const auto& s : permutations(k)) {
        Polynomial term = c * Rational(s.sign);
        for (int j = 0; j < k; ++j) term *= f[s.image[j]].derivative(idx[j]);
        out += term;
      }
      return;
    }
    for (int a = 0; a < n; ++a) {
      idx[pos] = a;
      walk_x(pos + 1);
    }
  };
  walk_x(0);
  if (k == 0) return op.section_coeff();
  std::vector<int> gidx(k - 1, 0);
  std::function<void(int)> walk_g = [&](int pos) {
    if (pos == k - 1) {
      Polynomial c = op.G().at(gidx);
      if (c.is_zero()) return;
      for (const auto& s : permutations(k)) {
        Polynomial term = c * Rational(s.sign);
        for (int j = 0; j < k - 1; ++j) term *= f[s.image[j]].derivative(gidx[j]);
        term *= f[s.image[k - 1]];
        out += term;
      }
      return;
    }
    for (int a = 0; a < n; ++a) {
      gidx[pos] = a;
      walk_g(pos + 1);
    }
  };
  walk_g(0);
  return out;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("apply on simple operators") {
  auto patch = xup();
  Polynomial f = P(patch, "x^2*u + p");
  CHECK(MultiOperator::identity(patch).apply({f}) == f);
  MultiOperator dx(patch, 1);
  dx.X().set({0}, Polynomial(1));
  CHECK(dx.apply({P(patch, "x^2")}) == P(patch, "2*x"));
  // With the sum over all index tuples, X^{xp} = 1 also sets X^{px} = -1.
  MultiOperator xp(patch, 2);
  xp.X().set({0, 2}, Polynomial(1));
  CHECK(xp.apply({P(patch, "x"), P(patch, "p")}) == Polynomial(2));
  xp.X().set({0, 2}, Polynomial(make_rational(1, 2)));
  CHECK(xp.apply({P(patch, "x"), P(patch, "p")}) == Polynomial(1));
}

TEST_CASE("arity-two action matches the bracket formula") {
  auto patch = xup();
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    MultiOperator J = random_operator(patch, 2, rng);
    auto fg = random_sections(*patch, 2, rng);
    const Polynomial &f = fg[0], &g = fg[1];
    Polynomial expected;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) expected += Rational(2) * J.X().at({a, b}) * f.derivative(a) * g.derivative(b);
      expected += J.G().at({a}) * (g * f.derivative(a) - f * g.derivative(a));
    }
    CHECK(J.apply(fg) == expected);
  }
}

TEST_CASE("apply agrees with brute-force expansion") {
  auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
  Rng rng(5);
  for (int k = 0; k <= 4; ++k) {
    MultiOperator op = random_operator(patch, k, rng);
    auto f = random_sections(*patch, k, rng);
    CHECK(op.apply(f) == brute_apply(op, f));
  }
}

TEST_CASE("extraction inverts apply") {
  auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
  Rng rng(17);
  for (int k = 0; k <= 4; ++k) {
    for (int rep = 0; rep < 3; ++rep) {
      MultiOperator op = random_operator(patch, k, rng);
      Evaluator e = [&](const std::vector<Polynomial>& a) { return op.apply(a); };
      CHECK(extract_components(e, patch, k) == op);
    }
  }
  auto p3 = make_patch({"x"}, {"y", "z"});
  MultiOperator op(p3, 2);
  op.X().set({0, 1}, P(p3, "x"));
  Evaluator e = [&](const std::vector<Polynomial>& a) { return op.apply(a); };
  MultiOperator back = extract_components(e, p3, 2);
  CHECK(back.X().at({0, 1}) == P(p3, "x"));
  CHECK(back.X().entries().size() == 1);
  CHECK(back.G().is_zero());
}

TEST_CASE("extraction rejects second-order evaluators") {
  auto patch = make_patch({"x"}, {"y"});
  Evaluator second = [](const std::vector<Polynomial>& a) { return a[0].derivative(0).derivative(0) * a[1]; };
  CHECK_THROWS_AS(extract_components(second, patch, 2), NotFirstOrderAlternating);
}

TEST_CASE("brackets of sections and Hamiltonian derivations") {
  auto patch = xup();
  Rng rng(8);
  MultiOperator a = MultiOperator::section(patch, P(patch, "x*u"));
  MultiOperator b = MultiOperator::section(patch, P(patch, "p"));
  CHECK(sj_bracket(a, b).is_zero());
  for (int i = 0; i < 5; ++i) {
    JacobiStructure J(random_operator(patch, 2, rng));
    auto lm = random_sections(*patch, 2, rng);
    MultiOperator l = MultiOperator::section(patch, lm[0]), m = MultiOperator::section(patch, lm[1]);
    MultiOperator lhs = -sj_bracket(sj_bracket(J.op(), l), m);
    CHECK(lhs.section_coeff() == J.op().apply(lm));
    Hamiltonian h = hamiltonian(J, {patch, lm[0]});
    CHECK(h.derivation.apply({lm[1]}) == J.op().apply(lm));
  }
  JacobiStructure J(random_operator(patch, 2, rng));
  CHECK(hamiltonian(J, {patch, Polynomial()}).derivation.is_zero());
}

TEST_CASE("graded antisymmetry and Jacobi on random operators") {
  auto patch = make_patch({"x1", "x2"}, {"y1"});
  Rng rng(99);
  for (int rep = 0; rep < 6; ++rep) {
    const int ka = static_cast<int>(rng.uniform(0, 2)), kb = static_cast<int>(rng.uniform(0, 2));
    const int kc = static_cast<int>(rng.uniform(0, 5 - ka - kb > 2 ? 2 : 5 - ka - kb));
    MultiOperator a = random_operator(patch, ka, rng), b = random_operator(patch, kb, rng),
                  c = random_operator(patch, kc, rng);
    const int da = ka - 1, db = kb - 1;
    MultiOperator ab = sj_bracket(a, b), ba = sj_bracket(b, a);
    if ((da * db) % 2) CHECK(ab == ba); else CHECK(ab == -ba);
    MultiOperator lhs = sj_bracket(a, sj_bracket(b, c));
    MultiOperator rhs = sj_bracket(sj_bracket(a, b), c);
    MultiOperator third = sj_bracket(b, sj_bracket(a, c));
    if ((da * db) % 2) rhs -= third; else rhs += third;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bracket components reproduce the Gerstenhaber action") {
  auto patch = make_patch({"x"}, {"y", "z"});
  Rng rng(4);
  for (int rep = 0; rep < 6; ++rep) {
    const int ka = static_cast<int>(rng.uniform(1, 3)), kb = static_cast<int>(rng.uniform(0, 2));
    MultiOperator a = random_operator(patch, ka, rng), b = random_operator(patch, kb, rng);
    MultiOperator ab = sj_bracket(a, b);
    auto f = random_sections(*patch, ka + kb - 1, rng);
    CHECK(ab.apply(f) == sj_bracket_apply(a, b, f));
  }
}

TEST_CASE("Jacobi check on simple structures") {
  auto patch = make_patch({"x"}, {"y", "z"});
  JacobiStructure zero(MultiOperator(patch, 2));
  auto r0 = jacobi_check(zero);
  CHECK(r0.holds);
  CHECK(r0.classical.holds());
  // {x,y} ~ x^2, {y,z} ~ z: the curl test v.curl(v) = 0 holds, so this one is Poisson.
  MultiOperator poisson(patch, 2);
  poisson.X().set({0, 1}, P(patch, "x^2"));
  poisson.X().set({1, 2}, P(patch, "z"));
  auto rp = jacobi_check(JacobiStructure(poisson));
  CHECK(rp.holds);
  CHECK(rp.classical.holds());
  // v = (y, 0, 1) has v.curl(v) = -1.
  MultiOperator bad(patch, 2);
  bad.X().set({0, 1}, Polynomial(1));
  bad.X().set({1, 2}, P(patch, "y"));
  auto r = jacobi_check(JacobiStructure(bad));
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.witness.empty());
  CHECK_FALSE(r.classical.holds());
}

TEST_CASE("Jacobi check agrees with the classical pair reading") {
  Rng rng(31);
  auto patch = make_patch({"x"}, {"y"});
  int jacobi_found = 0;
  for (int rep = 0; rep < 30; ++rep) {
    JacobiStructure J(random_operator(patch, 2, rng, 1));
    auto r = jacobi_check(J);
    CHECK(r.holds == r.classical.holds());
    jacobi_found += r.holds;
  }
  CHECK(jacobi_found > 0);
}

TEST_CASE("derivations") {
  auto patch = xup();
  Rng rng(2);
  JacobiStructure zero(MultiOperator(patch, 2));
  CHECK(is_jacobi_derivation(zero, random_operator(patch, 1, rng)));
  MultiOperator only_g(patch, 2);
  only_g.G().set({1}, P(patch, "x"));
  auto sharp = lambda_sharp(JacobiStructure(only_g), P(patch, "x*u"), {patch, P(patch, "p")});
  for (const auto& c : sharp) CHECK(c.is_zero());
}

TEST_CASE("pushforward along fiber translations") {
  auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
  Rng rng(12);
  for (int rep = 0; rep < 5; ++rep) {
    MultiOperator op = random_operator(patch, static_cast<int>(rng.uniform(0, 3)), rng);
    std::vector<Polynomial> s{rng.polynomial({0, 1}, 2), rng.polynomial({0, 1}, 2)};
    std::vector<Polynomial> zero(2);
    CHECK(pushforward_fiber_affine(op, zero, 1) == op);
    CHECK(pushforward_fiber_affine(pushforward_fiber_affine(op, s, 1), s, -1) == op);
    // Evaluation route: (psi_* op)(f) = op(f o psi) o psi^{-1} with psi(y) = y - s.
    MultiOperator pushed = pushforward_fiber_affine(op, s, -1);
    std::vector<std::optional<Polynomial>> pull(4), push(4);
    for (int a = 0; a < 2; ++a) {
      pull[2 + a] = Polynomial::variable(2 + a) - s[a];
      push[2 + a] = Polynomial::variable(2 + a) + s[a];
    }
    auto f = random_sections(*patch, op.arity(), rng);
    std::vector<Polynomial> pulled;
    for (const auto& g : f) pulled.push_back(g.substitute(pull));
    CHECK(pushed.apply(f) == op.apply(pulled).substitute(push));
  }
  CHECK_THROWS(pushforward_fiber_affine(MultiOperator(patch, 1), {P(patch, "y1"), Polynomial()}, 1));
}

TEST_CASE("pushforward of the fiber block") {
  // J^{ab}(x, y) picks up J^{ab}(x, y + s) and s-derivative corrections for direction -1.
  auto patch = make_patch({"x"}, {"y1", "y2"});
  Rng rng(3);
  MultiOperator J = random_operator(patch, 2, rng);
  std::vector<Polynomial> s{P(patch, "x^2"), P(patch, "3*x")};
  MultiOperator pushed = pushforward_fiber_affine(J, s, -1);
  std::vector<std::optional<Polynomial>> shift(3);
  shift[1] = P(patch, "y1 + x^2");
  shift[2] = P(patch, "y2 + 3*x");
  auto at = [&](int a, int b) { return J.X().at({a, b}).substitute(shift); };
  // M^a_x = -d_x s^a: X'^{ab} = X^{ab} + X^{xb} M^a_x + X^{ax} M^b_x.
  Polynomial ds1 = -s[0].derivative(0), ds2 = -s[1].derivative(0);
  Polynomial expected = at(1, 2) + at(0, 2) * ds1 + at(1, 0) * ds2;
  CHECK(pushed.X().at({1, 2}) == expected);
}

}
