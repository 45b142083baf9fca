#include <doctest.h>

#include "coiso/operators/jacobi.hpp"
#include "coiso/presymplectic/presymplectic.hpp"
#include "coiso/ring/parser.hpp"
#include "support/generators.hpp"
#include "support/presymplectic.hpp"

using namespace coiso;
using namespace coiso::testing;

namespace {

Polynomial P(const PreSympData& data, const std::string& s) { return parse_polynomial(s, data.patch->context()); }

PolyMatrix form(const Polynomial& w) { return {{Polynomial(), w}, {-w, Polynomial()}}; }

}  // namespace

TEST_SUITE("presymplectic") {
  TEST_CASE("curvature") {
    auto flat = make_presymplectic({"x1"}, {"u1", "u2"}, form(Polynomial(1)), {{Polynomial(), Polynomial()}});
    CHECK(is_zero(curvature_F(flat)[0]));
    auto constant = make_presymplectic({"x1", "x2"}, {"u1", "u2"}, form(Polynomial(2)),
                                       {{Polynomial(3), Polynomial(-1)}, {Polynomial(Rational(1, 2)), Polynomial()}});
    for (const auto& F : curvature_F(constant)) CHECK(is_zero(F));

    auto data = make_presymplectic({"x1"}, {"u1", "u2"}, form(Polynomial(1)), {{Polynomial(), Polynomial()}});
    data.G = {{P(data, "u2"), P(data, "x1")}};
    // GG_1 = d_u1 + u2 d_x1, GG_2 = d_u2 + x1 d_x1.
    const auto F = curvature_F(data);
    CHECK(F[0][0][1] == P(data, "u2") - Polynomial(1));
    CHECK(F[0][1][0] == -F[0][0][1]);
    CHECK(F[0][0][0].is_zero());
  }

  TEST_CASE("reference point validation") {
    CHECK_THROWS_AS(make_presymplectic({"x1"}, {"u1", "u2"}, form(Polynomial()), {{Polynomial(), Polynomial()}}),
                    SingularForm);
    auto probe = make_presymplectic({"x1"}, {"u1", "u2"}, form(Polynomial(1)), {{Polynomial(), Polynomial()}});
    const Polynomial w = P(probe, "x1 + 1");
    CHECK_THROWS_AS(make_presymplectic({"x1"}, {"u1", "u2"}, form(w), {{Polynomial(), Polynomial()}}, {-1, 0, 0}),
                    SingularForm);
    auto ok = make_presymplectic({"x1"}, {"u1", "u2"}, form(w), {{Polynomial(), Polynomial()}});
    CHECK(!w_inverse(ok).exact);
    CHECK(w_inverse(ok).inverse == form(Polynomial(-1)));
    CHECK(w_inverse(probe).exact);
    CHECK_THROWS_AS(make_presymplectic({"x1"}, {"u1", "u2"}, {{Polynomial(), Polynomial(1)}, {Polynomial(1), Polynomial()}},
                                       {{Polynomial(), Polynomial()}}),
                    std::invalid_argument);
  }

  TEST_CASE("inverse jets") {
    auto zero = make_presymplectic({"x1", "x2"}, {"u1", "u2"}, form(Polynomial(3)),
                                   {{Polynomial(), Polynomial()}, {Polynomial(), Polynomial()}});
    CHECK(wtilde_inverse_jet(zero, {}) == w_inverse(zero).inverse);
    for (int m = 1; m <= 3; ++m)
      for (const auto& [idx, jet] : wtilde_inverse_jets(zero, m)) CHECK(is_zero(jet));

    Rng rng(41);
    for (int round = 0; round < 6; ++round) {
      const int n = rng.uniform(1, 2);
      PreSympData data = random_presymplectic(n, rng, round % 2 == 0);
      for (int m = 0; m <= 3; ++m) {
        const auto jets = wtilde_inverse_jets(data, m);
        CHECK(static_cast<int>(jets.size()) == (n == 1 ? 1 : m + 1));
        for (const auto& [idx, jet] : jets) CHECK(jet == neumann_jet(data, idx));
      }
    }
  }

  TEST_CASE("thickening") {
    auto flat = make_presymplectic({"x1", "x2"}, {"u1", "u2"}, form(Polynomial(2)),
                                   {{Polynomial(), Polynomial()}, {Polynomial(), Polynomial()}});
    ThickenedPoisson T = thickening_poisson(flat);
    CHECK(T.exact);
    for (const auto& [idx, c] : T.V.J.op().X().entries()) CHECK(c.is_constant());
    CHECK(jacobi_check(T.V.J).holds);
    CHECK(project_P(T.V.J.op()).is_zero());

    Rng rng(42);
    for (int round = 0; round < 4; ++round) {
      PreSympData data = random_presymplectic(rng.uniform(1, 2), rng, true);
      for (int K : {2, 3}) {
        ThickenedPoisson t = thickening_poisson(data, K);
        CHECK(t.exact);
        CHECK(t.order == K);
        CHECK(project_P(t.V.J.op()).is_zero());
        CHECK(vanishes_through(sj_bracket(t.V.J.op(), t.V.J.op()), K - 1));
      }
    }
  }

  TEST_CASE("closed formulas") {
    Rng rng(43);
    for (int round = 0; round < 4; ++round) {
      PreSympData data = random_presymplectic(2, rng, round % 2 == 0);
      const Polynomial f = rng.polynomial(base_vars(*data.patch), 2, 60);
      const Polynomial g = rng.polynomial(base_vars(*data.patch), 2, 60);
      auto F = NormalMultiSection::section(data.patch, f), Gs = NormalMultiSection::section(data.patch, g);

      NormalMultiSection m1 = ohpark_mk(data, {F});
      for (int i = 0; i < 2; ++i) CHECK(m1.at({i}) == -f.derivative(data.x(i)));
      CHECK(ohpark_mk(data, {NormalMultiSection::delta(data.patch, 0)}).is_zero());

      // Direct matrix evaluation of the binary bracket on functions.
      const PolyMatrix winv = w_inverse(data).inverse;
      Polynomial expected;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) expected += winv[a][b] * frame_derivative(data, a, f) * frame_derivative(data, b, g);
      CHECK(ohpark_mk(data, {F, Gs}).at({}) == expected);
      CHECK(ohpark_mk(data, {Gs, F}) == -ohpark_mk(data, {F, Gs}));
      auto d0 = NormalMultiSection::delta(data.patch, 0), d1 = NormalMultiSection::delta(data.patch, 1);
      CHECK(ohpark_mk(data, {d0, F, Gs}) == ohpark_mk(data, {F, d0, Gs}));
      CHECK(ohpark_mk(data, {d0, d1, F}) == ohpark_mk(data, {d1, F, d0}));
      CHECK(ohpark_mk(data, {F, Gs, F}).is_zero());
    }

    // G^1_1 = x1, G^2_2 = x2 has vanishing curvature.
    auto flat = make_presymplectic({"x1", "x2"}, {"u1", "u2"}, form(Polynomial(1)),
                                   {{Polynomial::variable(0), Polynomial()}, {Polynomial(), Polynomial::variable(1)}});
    for (const auto& F : curvature_F(flat)) CHECK(is_zero(F));
    auto f = NormalMultiSection::section(flat.patch, Polynomial::variable(0) * Polynomial::variable(3));
    auto g = NormalMultiSection::section(flat.patch, Polynomial::variable(2));
    auto d0 = NormalMultiSection::delta(flat.patch, 0), d1 = NormalMultiSection::delta(flat.patch, 1);
    CHECK(!ohpark_mk(flat, {f, g}).is_zero());
    CHECK(!ohpark_mk(flat, {d0, f}).is_zero());
    CHECK(!ohpark_mk(flat, {d0, d1}).is_zero());
    CHECK(ohpark_mk(flat, {d0, f, g}).is_zero());
    CHECK(ohpark_mk(flat, {d0, d1, f}).is_zero());
    CHECK(ohpark_mk(flat, {d0, d1, d0}).is_zero());
    CHECK(ohpark_mk(flat, {d0, d1, d0, f, g}).is_zero());

    CHECK_THROWS_AS(ohpark_mk(flat, {d0, d1, d0, d1, f, f}, 3), InsufficientJets);
    CHECK_THROWS_AS(ohpark_mk(flat, {Rational(2) * d0}), std::invalid_argument);
  }

  TEST_CASE("agreement with derived brackets on the thickening") {
    Rng rng(44);
    int compared = 0, nonzero = 0;
    for (int round = 0; round < 4; ++round) {
      PreSympData data = random_presymplectic(rng.uniform(1, 2), rng, round % 2 == 0);
      ThickenedPoisson T = thickening_poisson(data, 4);
      for (const auto& args : generator_tuples(data, 4, rng)) {
        NormalMultiSection lhs = ohpark_mk(data, args), rhs = derived_mk(T.V, args);
        if (!T.exact) {
          lhs = at_reference(data, lhs);
          rhs = at_reference(data, rhs);
        }
        CHECK(lhs == rhs);
        ++compared;
        nonzero += !lhs.is_zero();
      }
    }
    CHECK(nonzero * 2 > compared);
  }
}
