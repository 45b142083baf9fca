#include <doctest.h>

#include "coiso/catalog/catalog.hpp"
#include "coiso/deformation/deformation.hpp"
#include "coiso/operators/pushforward.hpp"
#include "coiso/ring/parser.hpp"
#include "support/cocycles.hpp"
#include "support/generators.hpp"

using namespace coiso;
using namespace coiso::testing;

namespace {

Polynomial P(const PatchPtr& patch, const std::string& s) { return parse_polynomial(s, patch->context()); }

NormalMultiSection random_cocycle(const VData& V, Rng& rng, int max_degree) {
  LinearSolution sol = solve_m1(V, ansatz(V.patch(), 1, max_degree), NormalMultiSection(V.patch(), 2));
  NormalMultiSection s(V.patch(), 1);
  for (const auto& k : sol.kernel)
    if (rng.chance(50)) s += rng.small_rational(3, 2) * k;
  return s;
}

}  // namespace

TEST_SUITE("deformation") {
  TEST_CASE("mc series agrees with the pushforward route") {
    Rng rng(21);
    auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
    for (int i = 0; i < 10; ++i) {
      VData V{JacobiStructure(random_operator(patch, 2, rng))};
      auto s = random_normal(patch, 1, rng, 2);
      CHECK(mc_series(V, s) == project_P(pushforward_fiber_affine(V.J.op(), s.components(), -1)));
    }
  }

  TEST_CASE("mc series trivial cases") {
    Rng rng(22);
    VData F = flowout_patch(2);
    CHECK(mc_series(F, NormalMultiSection(F.patch(), 1)).is_zero());
    auto line = make_patch({"x1", "x2"}, {"y"});
    for (int i = 0; i < 5; ++i) {
      VData V{JacobiStructure(random_operator(line, 2, rng))};
      CHECK(mc_series(V, random_normal(line, 1, rng)).is_zero());
    }
    CHECK(fiber_degree(F.J.op()) == 1);
  }

  TEST_CASE("delta mc") {
    Rng rng(23);
    auto patch = make_patch({"x1", "x2"}, {"y1", "y2"});
    for (int i = 0; i < 6; ++i) {
      VData V{JacobiStructure(random_operator(patch, 2, rng))};
      Polynomial f = rng.polynomial(base_vars(*patch), 2, 60);
      auto lambda = NormalMultiSection::section(patch, f);
      NormalMultiSection zero(patch, 1);
      CHECK(delta_mc(V, zero, lambda) == derived_mk(V, {lambda}));
      Polynomial vanishing = P(patch, "y1*y2") * f;
      CHECK(delta_mc(V, zero, restrict_to_zero_section(V, vanishing)).is_zero());
      CHECK(delta_mc_pushforward(V, zero, vanishing).is_zero());

      auto s = random_normal(patch, 1, rng, 1);
      CHECK(delta_mc(V, s, lambda) == delta_mc_pushforward(V, s, f));
    }
  }

  TEST_CASE("delta mc on coisotropic sections") {
    Rng rng(24);
    auto line = make_patch({"x1", "x2"}, {"y"});
    for (int i = 0; i < 8; ++i) {
      VData V{JacobiStructure(random_operator(line, 2, rng))};
      auto s = random_normal(line, 1, rng, 1);
      REQUIRE(is_coisotropic_section(V, s.components()));
      Polynomial lambda = rng.polynomial(patch_vars(*line), 2, 60);
      CHECK(delta_mc(V, s, restrict_to_graph(V, s, lambda)) == delta_mc_pushforward(V, s, lambda));
    }
    VData L = legendrian_patch(1);
    for (int i = 0; i < 4; ++i) {
      auto s = random_cocycle(L, rng, 2);
      REQUIRE(mc_series(L, s).is_zero());
      Polynomial lambda = rng.polynomial(patch_vars(*L.patch()), 2, 60);
      CHECK(delta_mc(L, s, restrict_to_graph(L, s, lambda)) == delta_mc_pushforward(L, s, lambda));
    }
  }

  TEST_CASE("delta mc with the zero-section restriction needs fiber-constant data") {
    auto line = make_patch({"x"}, {"y"});
    MultiOperator op(line, 2);
    op.X().set({0, 1}, Polynomial(1));
    VData V{JacobiStructure(op)};
    auto s = NormalMultiSection::vector(line, {Polynomial(1)});
    Polynomial lambda = P(line, "x*y");
    CHECK(delta_mc(V, s, restrict_to_graph(V, s, lambda)) == delta_mc_pushforward(V, s, lambda));
    CHECK(delta_mc(V, s, restrict_to_zero_section(V, lambda)) != delta_mc_pushforward(V, s, lambda));
  }

  TEST_CASE("kuranishi map") {
    Rng rng(25);
    VData L = legendrian_patch(1);
    CHECK(kuranishi(L, NormalMultiSection(L.patch(), 1)).is_zero());
    for (int i = 0; i < 3; ++i) CHECK(kuranishi(L, random_cocycle(L, rng, 2)).is_zero());

    VData F = flowout_patch(2);
    bool nonzero = false;
    for (int i = 0; i < 4; ++i) {
      auto s = random_cocycle(F, rng, 1);
      NormalMultiSection k = kuranishi(F, s);
      CHECK(derived_mk(F, {k}).is_zero());
      nonzero = nonzero || !k.is_zero();
    }
    CHECK(nonzero);

    auto bad = NormalMultiSection::vector(F.patch(), {Polynomial::variable(1), Polynomial()});
    REQUIRE(!derived_mk(F, {bad}).is_zero());
    CHECK_THROWS_AS(kuranishi(F, bad), NotACocycle);
    try {
      kuranishi(F, bad);
    } catch (const NotACocycle& e) {
      CHECK(!e.witness().empty());
    }
  }

  TEST_CASE("formal maurer-cartan series") {
    Rng rng(26);
    VData L = legendrian_patch(1);
    for (int i = 0; i < 2; ++i) {
      FormalSeries s{L.patch(), {random_cocycle(L, rng, 2)}};
      CHECK(verify_formal_mc(L, s, 4).holds);
    }
    FormalSeries broken{L.patch(), {NormalMultiSection::vector(L.patch(), {P(L.patch(), "x^2"), Polynomial()})}};
    FormalCheck r = verify_formal_mc(L, broken, 3);
    CHECK(!r.holds);
    CHECK(r.first_failing_order == 1);

    // Fiber degree <= 1, so MC is quadratic: eps s1 solves it iff m1 s1 = 0 and m2(s1, s1) = 0.
    VData F = flowout_patch(2);
    for (int i = 0; i < 6; ++i) {
      auto s1 = i < 3 ? random_cocycle(F, rng, 1) : random_normal(F.patch(), 1, rng, 1);
      const bool expected = derived_mk(F, {s1}).is_zero() && derived_mk(F, {s1, s1}).is_zero();
      CHECK(verify_formal_mc(F, FormalSeries{F.patch(), {s1}}, 3).holds == expected);
    }
  }

  TEST_CASE("order two prolongation criterion") {
    Rng rng(27);
    VData F = flowout_patch(2);
    const auto basis = ansatz(F.patch(), 1, 2);
    int positive = 0, negative = 0;
    for (int i = 0; i < 6; ++i) {
      auto s1 = random_cocycle(F, rng, 1);
      NormalMultiSection target = Rational(1, 2) * derived_mk(F, {s1, s1});
      LinearSolution sol = solve_m1(F, basis, target);
      if (sol.solvable) {
        CHECK(verify_formal_mc(F, FormalSeries{F.patch(), {s1, sol.particular}}, 2).holds);
        ++positive;
      }
      FormalSeries unprolonged{F.patch(), {s1, NormalMultiSection(F.patch(), 1)}};
      FormalCheck r = verify_formal_mc(F, unprolonged, 2);
      CHECK(r.holds == target.is_zero());
      if (!target.is_zero()) {
        CHECK(r.first_failing_order == 2);
        ++negative;
      }
      auto s2 = random_normal(F.patch(), 1, rng, 1);
      const bool expected = derived_mk(F, {s2}) == target;
      CHECK(verify_formal_mc(F, FormalSeries{F.patch(), {s1, s2}}, 2).holds == expected);
    }
    CHECK(positive > 0);
    CHECK(negative > 0);
  }

  TEST_CASE("gauge families") {
    Rng rng(28);
    auto patch = make_patch({"x", "t"}, {"u", "p"});
    VData L = legendrian_patch(1);
    VData V{JacobiStructure(transplant(L.J.op(), patch))};

    auto s1 = NormalMultiSection::vector(patch, {P(patch, "x"), Polynomial(1)});
    GaugeFamily constant{"t", FormalSeries{patch, {s1}}, {}};
    CHECK(verify_gauge(V, constant, 3).holds());

    for (int i = 0; i < 3; ++i) {
      Polynomial f = rng.polynomial({0}, 3, 60);
      NormalMultiSection flow = derived_mk(V, {NormalMultiSection::section(patch, f)});
      NormalMultiSection st(patch, 1);
      for (int a = 0; a < 2; ++a) st.set({a}, flow.at({a}) * Polynomial::variable(1));
      GaugeFamily family{"t", FormalSeries{patch, {st}}, {NormalMultiSection(patch, 0), NormalMultiSection::section(patch, f)}};
      CHECK(verify_gauge(V, family, 3).holds());

      NormalMultiSection perturbed = st;
      perturbed.set({0}, st.at({0}) + P(patch, "t"));
      GaugeFamily bad{"t", FormalSeries{patch, {perturbed}}, family.lambda};
      GaugeCheck r = verify_gauge(V, bad, 3);
      CHECK(!r.equation_holds);
      CHECK(!r.samples_hold);
      CHECK(!r.witness.empty());
    }

    GaugeFamily wrong_time{"u", FormalSeries{patch, {}}, {}};
    CHECK_THROWS_AS(verify_gauge(V, wrong_time, 1), std::invalid_argument);
  }
}
