#include "doctest.h"

#include <cmath>

#include "pmmeas/errors.hpp"
#include "pmmeas/generators.hpp"
#include "pmmeas/measures.hpp"

using namespace pmmeas;

namespace {

FiniteSetFunction weights124() {
  return build_dirac(NumericSetFunction::additive(FiniteUniverse(3), {1, 2, 4}));
}

}  // namespace

TEST_CASE("universe basics") {
  FiniteUniverse u(3);
  CHECK(u.subset_count() == 8);
  CHECK(u.subset_name(0b101) == "{e0,e2}");
  CHECK(u.subset_name(0) == "{}");
  FiniteUniverse named({"a", "b"});
  CHECK(named.subset_name(0b11) == "{a,b}");
  CHECK_THROWS_AS(FiniteUniverse(17), BadDescriptor);
  CHECK_THROWS_AS(FiniteUniverse({""}), BadDescriptor);
}

TEST_CASE("numeric set functions from weights") {
  FiniteUniverse u(3);
  auto add = NumericSetFunction::additive(u, {1, 2, 4});
  CHECK(add.at(0) == 0.0);
  CHECK(add.at(0b101) == doctest::Approx(5.0));
  CHECK(add.at(0b111) == doctest::Approx(7.0));
  auto mx = NumericSetFunction::max_combined(u, {1, 2, 4});
  CHECK(mx.at(0b011) == doctest::Approx(2.0));
  CHECK(mx.at(0b111) == doctest::Approx(4.0));
  CHECK_THROWS_AS(NumericSetFunction(u, {1, 0, 0, 0, 0, 0, 0, 0}), BadDescriptor);
  CHECK_THROWS_AS(NumericSetFunction(u, {0, -1, 0, 0, 0, 0, 0, 0}), NegativeInput);
}

TEST_CASE("dirac builder") {
  auto zero = build_dirac(NumericSetFunction::additive(FiniteUniverse(2), {0, 0}));
  for (std::uint32_t m = 0; m < 4; ++m) CHECK(zero.at(m).is_epsilon_zero());
  auto g = weights124();
  CHECK(g.at(0b101).is_dirac());
  CHECK(g.at(0b101).dirac_location() == doctest::Approx(5.0));
}

TEST_CASE("set function guards the empty-set value") {
  FiniteUniverse u(1);
  CHECK_THROWS_AS(FiniteSetFunction(u, {epsilon(1.0), epsilon(0.0)}), BadDescriptor);
  FiniteSetFunction g(u, {epsilon(0.0), epsilon(1.0)});
  CHECK_THROWS_AS(g.set(0, epsilon(2.0)), BadDescriptor);
  g.set(1, epsilon(3.0));
  CHECK(g.at(1).dirac_location() == doctest::Approx(3.0));
}

TEST_CASE("additive dirac functions are product-sup measures") {
  auto g = weights124();
  auto rep = classify(g, DeltaOp::tau_t(ScalarOp::tnorm_pi()));
  CHECK(rep.is_measure);
  CHECK(rep.is_submeasure);
  CHECK(rep.is_antimonotone);
  CHECK(rep.superadditive_all);
  CHECK(rep.disjoint_pairs == 27);
}

TEST_CASE("pointwise min breaks additive decomposability with a fat witness") {
  auto g = weights124();
  auto mu = NumericSetFunction::additive(FiniteUniverse(3), {1, 2, 4});
  auto rep = classify(g, DeltaOp::pi_top(ScalarOp::tnorm_m()));
  CHECK_FALSE(rep.is_measure);
  CHECK_FALSE(rep.is_submeasure);
  REQUIRE(rep.measure_w.found);
  CHECK(mu.at(rep.measure_w.e) > 0.0);
  CHECK(mu.at(rep.measure_w.f) > 0.0);
  CHECK(mu.at(rep.measure_w.e) != mu.at(rep.measure_w.f));
}

TEST_CASE("constant epsilon-zero function is a measure for every operation") {
  FiniteUniverse u(2);
  FiniteSetFunction g(u, std::vector<DiscreteDdf>(4, epsilon(0.0)));
  for (const auto& tau :
       {DeltaOp::tau_t(ScalarOp::tnorm_m()), DeltaOp::pi_top(ScalarOp::tnorm_m()),
        DeltaOp::convolution()})
    CHECK(classify(g, tau).is_measure);
}

TEST_CASE("max-combined weights give pointwise-min measures") {
  auto g = build_dirac(
      NumericSetFunction::max_combined(FiniteUniverse(3), {1.5, 2.5, 0.5}));
  for (auto t : {ScalarOp::tnorm_m(), ScalarOp::tnorm_pi(), ScalarOp::tnorm_w()})
    CHECK(classify(g, DeltaOp::pi_top(t)).is_measure);
}

TEST_CASE("characterization identity agrees with the pair classification") {
  auto g = weights124();
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_pi());
  auto rep = check_characterization(g, tau);
  CHECK(rep.identity_holds);
  CHECK(rep.classify_is_measure);
  CHECK(rep.consistent);
  CHECK(rep.pairs_checked == 64);
}

TEST_CASE("characterization on the empty universe is vacuously true") {
  FiniteUniverse u(0);
  FiniteSetFunction g(u, {epsilon(0.0)});
  auto rep = check_characterization(g, DeltaOp::tau_t(ScalarOp::tnorm_m()));
  CHECK(rep.identity_holds);
  CHECK(rep.consistent);
  CHECK(rep.pairs_checked == 1);
}

TEST_CASE("corruption is detected by both classification and characterization") {
  Rng rng(21);
  FiniteUniverse u(4);
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_pi());
  for (int i = 0; i < 5; ++i) {
    auto g = random_additive_dirac(rng, u);
    REQUIRE(classify(g, tau).is_measure);
    auto bad = corrupt_one_value(rng, g);
    auto rep = check_characterization(bad.gamma, tau);
    CHECK_FALSE(rep.identity_holds);
    CHECK_FALSE(rep.classify_is_measure);
    CHECK(rep.consistent);
    CHECK(rep.witness.found);
  }
}

TEST_CASE("scaled profiles: sum-min succeeds where sum-product fails") {
  FiniteUniverse u(2);
  auto m = NumericSetFunction::additive(u, {1.0, 1.0});
  auto phi = make_ddf({{1.0, 0.5}, {2.0, 0.5}});
  auto g = build_scaled_profile(m, LOp::k_one(), phi);
  CHECK(classify(g, DeltaOp::tau_la(LOp::k_one(), ScalarOp::tnorm_m())).is_measure);
  auto rep = classify(g, DeltaOp::tau_la(LOp::k_one(), ScalarOp::tnorm_pi()));
  CHECK_FALSE(rep.is_measure);
}

TEST_CASE("scaled profile with a unit-step profile reduces to the dirac build") {
  FiniteUniverse u(2);
  auto m = NumericSetFunction::additive(u, {1.5, 2.5});
  auto g = build_scaled_profile(m, LOp::k_one(), epsilon(1.0));
  for (std::uint32_t e = 0; e < 4; ++e) {
    CHECK(g.at(e).is_dirac());
    CHECK(g.at(e).dirac_location() == doctest::Approx(m.at(e)));
  }
}

TEST_CASE("profile builder validates L-decomposability") {
  FiniteUniverse u(2);
  auto sub = NumericSetFunction(u, {0.0, 1.0, 1.0, 1.5});  // capped, not additive
  CHECK_THROWS_AS(
      build_scaled_profile(sub, LOp::k_one(), epsilon(1.0)),
      NotLDecomposable);
  auto mx = NumericSetFunction::max_combined(u, {1.0, 2.0});
  auto g = build_scaled_profile(mx, LOp::k_inf(), make_ddf({{1.0, 0.5}, {3.0, 0.5}}));
  CHECK(classify(g, DeltaOp::tau_la(LOp::k_inf(), ScalarOp::tnorm_m())).is_measure);
}

TEST_CASE("scaling a measure by a positive constant keeps it a measure") {
  auto g = weights124();
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_m());
  for (double c : {0.5, 2.0, 7.0}) {
    auto res = transform_scale(c, g, tau);
    CHECK(res.verdict.is_measure);
    CHECK(res.gamma.at(0b101).dirac_location() == doctest::Approx(5.0 * c));
  }
}

TEST_CASE("scale transform rejects bad inputs") {
  FiniteUniverse u(2);
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_m());
  FiniteSetFunction notm(u, {epsilon(0.0), epsilon(1.0), epsilon(1.0), epsilon(9.0)});
  CHECK_THROWS_AS(transform_scale(2.0, notm, tau), InputNotMeasure);
  auto block = LOp::ordinal_sum({{1.0, 2.0, {1.0, 1.5, 2.0}, {0.0, 0.5, 1.0}}});
  auto ord = DeltaOp::tau_la(block, ScalarOp::tnorm_m());
  auto g = build_dirac(NumericSetFunction::max_combined(u, {2.4, 3.0}));
  REQUIRE(classify(g, ord).is_measure);
  CHECK_THROWS_AS(transform_scale(0.5, g, ord), NotDistributive);
}

TEST_CASE("combining two measures with their own operation yields a measure") {
  Rng rng(22);
  FiniteUniverse u(3);
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_pi());
  auto g1 = random_additive_dirac(rng, u);
  auto g2 = random_additive_dirac(rng, u);
  auto res = transform_combine_tau(g1, g2, tau);
  CHECK(res.verdict.is_measure);
}

TEST_CASE("pointwise-min combination of weak-sup measures is a submeasure") {
  Rng rng(23);
  FiniteUniverse u(3);
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_w());
  auto g1 = random_additive_dirac(rng, u);
  auto g2 = random_additive_dirac(rng, u);
  auto res = transform_combine_theta(DeltaOp::pi_top(ScalarOp::tnorm_m()), g1, g2, tau);
  CHECK(res.dominance_ok);
  CHECK(res.verdict.is_submeasure);
}

TEST_CASE("generated submeasures classify as advertised") {
  Rng rng(24);
  FiniteUniverse u(4);
  auto tw = DeltaOp::tau_la(LOp::k_one(), ScalarOp::tnorm_w());
  for (int i = 0; i < 3; ++i) {
    auto capped = random_capped_dirac(rng, u);
    auto prof = random_profile_submeasure(rng, u);
    for (const auto* g : {&capped, &prof}) {
      auto rep = classify(*g, tw);
      CHECK(rep.is_submeasure);
      CHECK(rep.is_antimonotone);
      CHECK(rep.superadditive_all);
    }
  }
}

TEST_CASE("mean aggregation of two sum-weak submeasures stays a submeasure") {
  Rng rng(25);
  FiniteUniverse u(3);
  auto tw = DeltaOp::tau_la(LOp::k_one(), ScalarOp::tnorm_w());
  auto g1 = random_capped_dirac(rng, u);
  auto g2 = random_profile_submeasure(rng, u);
  auto res = aggregate(AggOp::mean(), {g1, g2}, tw, {tw, tw});
  CHECK(res.inputs_ok);
  CHECK(res.tau_below_ok);
  CHECK(res.dominance_ok);
  CHECK(res.boundary_ok);
  CHECK(res.is_tau_submeasure);
}

TEST_CASE("single-input mean aggregation is the identity") {
  Rng rng(26);
  FiniteUniverse u(2);
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_w());
  auto g = random_capped_dirac(rng, u);
  auto res = aggregate(AggOp::mean(), {g}, tau, {tau});
  CHECK(res.is_tau_submeasure);
  for (std::uint32_t m = 0; m < 4; ++m) CHECK(ddf_eq(res.gamma.at(m), g.at(m)));
}

TEST_CASE("mean aggregation under the strong operation fails dominance") {
  FiniteUniverse u(2);
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_m());
  auto g1 = build_dirac(NumericSetFunction::additive(u, {1.0, 3.0}));
  auto g2 = build_dirac(NumericSetFunction::additive(u, {2.0, 0.5}));
  auto res = aggregate(AggOp::mean(), {g1, g2}, tau, {tau, tau});
  CHECK(res.inputs_ok);
  CHECK_FALSE(res.dominance_ok);
  CHECK_FALSE(res.is_tau_submeasure);
  CHECK_FALSE(res.note.empty());
}

TEST_CASE("min aggregation of two weak-sup submeasures is a submeasure") {
  Rng rng(27);
  FiniteUniverse u(3);
  auto tw = DeltaOp::tau_t(ScalarOp::tnorm_w());
  auto g1 = random_capped_dirac(rng, u);
  auto g2 = random_capped_dirac(rng, u);
  auto res = aggregate(AggOp::min(), {g1, g2}, tw, {tw, tw});
  CHECK(res.dominance_ok);
  CHECK(res.is_tau_submeasure);
}
