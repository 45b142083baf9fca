#include <doctest.h>

#include "coiso/catalog/catalog.hpp"
#include "coiso/poissonization/poissonization.hpp"
#include "coiso/ring/parser.hpp"
#include "support/generators.hpp"

using namespace coiso;
using namespace coiso::testing;

namespace {

constexpr int kDim = 4;
constexpr int kT = 4;

LaurentPolynomial L(const Polynomial& p, int power = 0) { return LaurentPolynomial(kT, p, power); }

MultiVector random_multivector(int rank, Rng& rng) {
  MultiVector m(kDim, rank, kT);
  std::vector<int> vars{0, 1, 2, 3};
  for (const IndexTuple& idx : increasing_tuples(kDim, rank))
    if (rng.chance(50)) m.set(idx, L(rng.polynomial(vars, 2, 40)));
  return m;
}

int parity(int a, int b) { return (a * b) % 2 ? -1 : 1; }

// Derived brackets of Pi~ on the images j(xi) = tilde(I(xi)).
MultiVector poisson_derived(const MultiVector& pi, const Patch& patch, const std::vector<NormalMultiSection>& args) {
  MultiVector B = pi;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) B = sn_bracket(B, tilde_op(include_I(args[i])));
  return normal_part(sn_bracket(B, tilde_op(include_I(args.back()))), patch);
}

}  // namespace

TEST_SUITE("poissonization") {
  TEST_CASE("schouten-nijenhuis examples") {
    auto ctx = VariableContext({"x", "y", "z", "w"});
    MultiVector X(kDim, 1, kT);
    X.set({0}, L(parse_polynomial("y", ctx)));
    X.set({1}, L(parse_polynomial("x^2", ctx)));
    Polynomial f = parse_polynomial("x*y + z", ctx);
    MultiVector F = MultiVector::function(kDim, kT, L(f));
    CHECK(sn_bracket(X, F).at({}) == L(parse_polynomial("y^2 + x^3", ctx)));

    MultiVector pi(kDim, 2, kT);
    pi.set({0, 1}, L(Polynomial(1)));
    CHECK(sn_bracket(pi, pi).is_zero());
    pi.set({2, 3}, L(parse_polynomial("x", ctx)));
    CHECK(!sn_bracket(pi, pi).is_zero());
  }

  TEST_CASE("schouten-nijenhuis graded laws") {
    Rng rng(31);
    for (int round = 0; round < 25; ++round) {
      const int p = rng.uniform(0, 2), q = rng.uniform(0, 2), r = rng.uniform(0, 1);
      MultiVector a = random_multivector(p, rng), b = random_multivector(q, rng), c = random_multivector(r, rng);
      const int da = p - 1, db = q - 1;
      CHECK(sn_bracket(a, b) == Rational(-parity(da, db)) * sn_bracket(b, a));
      CHECK(sn_bracket(a, sn_bracket(b, c)) ==
            sn_bracket(sn_bracket(a, b), c) + Rational(parity(da, db)) * sn_bracket(b, sn_bracket(a, c)));
      CHECK(sn_bracket(a, wedge(b, c)) ==
            wedge(sn_bracket(a, b), c) + Rational(parity(da, q)) * wedge(b, sn_bracket(a, c)));
    }
  }

  TEST_CASE("tilde of sections and evaluation") {
    Rng rng(32);
    auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
    Polynomial f = rng.polynomial(patch_vars(*patch), 2, 60);
    MultiVector tf = tilde_op(MultiOperator::section(patch, f));
    CHECK(tf.at({}) == L(f * Polynomial::variable(kT)));
    for (int i = 0; i < 8; ++i) {
      const int k = rng.uniform(1, 3);
      MultiOperator op = random_operator(patch, k, rng);
      auto args = random_sections(*patch, k, rng);
      CHECK(untilde_apply(tilde_op(op), *patch, args) == op.apply(args));
    }
  }

  TEST_CASE("poissonization") {
    Rng rng(33);
    auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
    CHECK(poissonize(JacobiStructure(MultiOperator(patch, 2))).is_zero());
    for (int i = 0; i < 8; ++i) {
      JacobiStructure J(random_operator(patch, 2, rng));
      MultiVector pi = poissonize(J);
      CHECK(pi == tilde_op(J.op()));
      CHECK(sn_bracket(pi, euler_field(*patch)) == pi);
      CHECK(poissonization_report(J).consistent());
      auto fg = random_sections(*patch, 2, rng);
      CHECK(untilde_apply(pi, *patch, fg) == J.op().apply(fg));
    }
    for (int n = 1; n <= 2; ++n) {
      PoissonizationReport r = poissonization_report(darboux_contact(n).J);
      CHECK(r.homogeneous);
      CHECK(r.poisson);
      CHECK(r.jacobi);
    }
  }

  TEST_CASE("embedding intertwines brackets") {
    Rng rng(34);
    auto patch = make_patch({"x1", "x2"}, {"y1"});
    int nontrivial = 0;
    for (int i = 0; i < 20; ++i) {
      MultiOperator a = random_operator(patch, rng.uniform(0, 2), rng);
      MultiOperator b = random_operator(patch, rng.uniform(0, 2), rng);
      MultiOperator ab = sj_bracket(a, b);
      CHECK(tilde_op(ab) == sn_bracket(tilde_op(a), tilde_op(b)));
      nontrivial += !ab.is_zero();
    }
    CHECK(nontrivial > 10);
  }

  TEST_CASE("coisotropy transport") {
    std::vector<VData> coisotropic{legendrian_patch(1), flowout_patch(1), flowout_patch(2)};
    for (const VData& V : coisotropic) {
      PoissonizationReport r = poissonization_report(V.J);
      CHECK(r.base_coisotropic);
      CHECK(r.lift_coisotropic);
    }
    Rng rng(35);
    auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
    for (int i = 0; i < 8; ++i) {
      PoissonizationReport r = poissonization_report(JacobiStructure(random_operator(patch, 2, rng)));
      CHECK(r.base_coisotropic == r.lift_coisotropic);
    }
  }

  TEST_CASE("derived brackets agree on lifted arguments") {
    Rng rng(36);
    std::vector<VData> structures{legendrian_patch(1), flowout_patch(2)};
    auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
    structures.push_back(VData{JacobiStructure(random_operator(patch, 2, rng))});
    for (const VData& V : structures) {
      const MultiVector pi = poissonize(V.J);
      for (int i = 0; i < 6; ++i) {
        std::vector<NormalMultiSection> args;
        const int k = rng.uniform(1, 3);
        for (int j = 0; j < k; ++j) args.push_back(random_normal(V.patch(), rng.uniform(0, 2), rng, 1));
        CHECK(poisson_derived(pi, *V.patch(), args) == tilde_op(include_I(derived_mk(V, args))));
      }
    }
  }
}
