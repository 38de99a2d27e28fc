#include "doctest.h"

#include <cmath>
#include <vector>

#include "pmmeas/errors.hpp"
#include "pmmeas/generators.hpp"
#include "pmmeas/hausdorff.hpp"

using namespace pmmeas;

namespace {

// two points at unit distance
HausdorffContext unit_pair() {
  DistMatrix m(2);
  m.set(0, 1, epsilon(1.0));
  return HausdorffContext(
      FinitePpMSpace{{"p", "q"}, m, DeltaOp::tau_t(ScalarOp::tnorm_m())});
}

// half the mass never arrives: probabilistically unbounded
HausdorffContext leaky_pair() {
  DistMatrix m(2);
  m.set(0, 1, make_ddf({{1.0, 0.5}}, 0.5));
  return HausdorffContext(
      FinitePpMSpace{{"p", "q"}, m, DeltaOp::tau_t(ScalarOp::tnorm_m())});
}

}  // namespace

TEST_CASE("context guards the point count and subset masks") {
  Rng rng(41);
  CHECK_THROWS_AS(HausdorffContext(random_dirac_metric_space(rng, 17)),
                  BadDescriptor);
  const HausdorffContext ctx = unit_pair();
  CHECK(ctx.points() == 2);
  CHECK(ctx.full_mask() == 0b11);
  CHECK_THROWS_AS(prob_diameter(ctx, 0b100), BadDescriptor);
  CHECK_THROWS_AS(lambda_H(ctx, 0b111), BadDescriptor);
  CHECK(is_separated(ctx));
  CHECK(!is_separated(HausdorffContext(
      FinitePpMSpace{{"a", "b"}, DistMatrix(2), DeltaOp::tau_t(ScalarOp::tnorm_m())})));
}

TEST_CASE("diameters on the two-point space") {
  const HausdorffContext ctx = unit_pair();
  CHECK(prob_diameter(ctx, 0b01).is_epsilon_zero());
  CHECK(prob_diameter(ctx, 0b10).is_epsilon_zero());
  const DiscreteDdf d = prob_diameter(ctx, 0b11);
  CHECK(d.is_dirac());
  CHECK(d.dirac_location() == doctest::Approx(1.0));
  CHECK_THROWS_AS(prob_diameter(ctx, 0), EmptySet);
  CHECK(is_prob_bounded(ctx, 0b11));
  CHECK(is_prob_bounded(ctx, 0));
}

TEST_CASE("directed distances honour the empty-set conventions") {
  const HausdorffContext ctx = unit_pair();
  CHECK(prob_distance(ctx, 0, 0b11).is_epsilon_zero());
  const DiscreteDdf to_empty = prob_distance(ctx, 0b01, 0);
  CHECK(to_empty.atoms().empty());
  CHECK(to_empty.inf_mass() == doctest::Approx(1.0));
  const DiscreteDdf pq = prob_distance(ctx, 0b01, 0b10);
  CHECK(pq.dirac_location() == doctest::Approx(1.0));
  // nearest-point collapse: distance from a point to the whole space is zero
  CHECK(prob_distance(ctx, 0b01, 0b11).is_epsilon_zero());
}

TEST_CASE("the symmetrized distance and its boundedness gate") {
  const HausdorffContext ctx = unit_pair();
  CHECK(hausdorff_distance(ctx, 0b11, 0b11).is_epsilon_zero());
  CHECK(hausdorff_distance(ctx, 0b01, 0b01).is_epsilon_zero());
  const DiscreteDdf h = hausdorff_distance(ctx, 0b01, 0b10);
  CHECK(h.dirac_location() == doctest::Approx(1.0));
  CHECK(ddf_eq(h, hausdorff_distance(ctx, 0b10, 0b01)));

  const HausdorffContext leaky = leaky_pair();
  CHECK(!is_prob_bounded(leaky, 0b11));
  CHECK_THROWS_AS(hausdorff_distance(leaky, 0b11, 0b01), NotProbBounded);
  // the induced set function stays available on such spaces
  CHECK(lambda_H(leaky, 0).is_epsilon_zero());
}

TEST_CASE("the induced set function on the two-point space") {
  const HausdorffContext ctx = unit_pair();
  CHECK(lambda_H(ctx, 0).is_epsilon_zero());
  CHECK(lambda_H(ctx, 0b01).dirac_location() == doctest::Approx(1.0));
  CHECK(lambda_H(ctx, 0b10).dirac_location() == doctest::Approx(1.0));
  // raw definition: the full-set value keeps all its mass at +inf
  const DiscreteDdf top = lambda_H(ctx, 0b11);
  CHECK(top.atoms().empty());
  CHECK(top.inf_mass() == doctest::Approx(1.0));
}

TEST_CASE("structural claims hold on generated metric spaces") {
  Rng rng(43);
  for (int it = 0; it < 3; ++it) {
    const HausdorffContext ctx(random_dirac_metric_space(rng, 5));
    const LambdaReport rep = check_lambda_theorem(ctx);
    CHECK(rep.pass());
    CHECK(rep.subset_pairs == 243);
    CHECK(rep.all_pairs == 1024);
  }
  // a single point passes trivially
  const LambdaReport tiny =
      check_lambda_theorem(HausdorffContext(random_dirac_metric_space(rng, 1)));
  CHECK(tiny.pass());
}

TEST_CASE("subset-induced spaces feed the same checks") {
  const FiniteSetFunction gamma =
      build_dirac(NumericSetFunction::additive(FiniteUniverse(3), {1, 2, 4}));
  const HausdorffContext ctx(
      from_submeasure(gamma, DeltaOp::tau_t(ScalarOp::tnorm_pi())));
  CHECK(check_lambda_theorem(ctx).pass());
}

TEST_CASE("a broken triangle is reported as an unmet precondition") {
  DistMatrix m(3);
  m.set(0, 1, epsilon(1.0));
  m.set(1, 2, epsilon(1.0));
  m.set(0, 2, epsilon(5.0));
  const HausdorffContext ctx(
      FinitePpMSpace{{"a", "b", "c"}, m, DeltaOp::tau_t(ScalarOp::tnorm_m())});
  const LambdaReport rep = check_lambda_theorem(ctx);
  CHECK(!rep.precondition_met);
  CHECK(!rep.pass());
  CHECK(rep.note.find("PRECONDITION_UNMET") != std::string::npos);
  // the theorem flags are untouched, the report fails on the gate alone
  CHECK(rep.empty_is_eps0);
  CHECK(rep.antimonotone);
  CHECK(rep.union_bound);
}

TEST_CASE("the measurable class is a small algebra on metric spaces") {
  Rng rng(47);
  const HausdorffContext ctx(random_dirac_metric_space(rng, 4));
  for (const DeltaOp& tau : {DeltaOp::tau_t(ScalarOp::tnorm_m()),
                             DeltaOp::pi_top(ScalarOp::tnorm_m())}) {
    const MeasurableReport rep = enumerate_measurable(ctx, tau);
    CHECK(rep.pass());
    CHECK(rep.candidates == 16);
    CHECK(rep.members.front() == 0);
    CHECK(rep.members.back() == 15);
  }
  Rng rng2(48);
  CHECK_THROWS_AS(enumerate_measurable(
                      HausdorffContext(random_dirac_metric_space(rng2, 11)),
                      DeltaOp::tau_t(ScalarOp::tnorm_m())),
                  BadDescriptor);
}

TEST_CASE("the restriction classifies as a measure on the atom universe") {
  Rng rng(53);
  const HausdorffContext ctx(random_dirac_metric_space(rng, 4));
  for (const DeltaOp& tau : {DeltaOp::tau_t(ScalarOp::tnorm_m()),
                             DeltaOp::pi_top(ScalarOp::tnorm_m())}) {
    const RestrictionReport rep = check_restriction_measure(ctx, tau);
    CHECK(rep.pass());
    CHECK(rep.atoms >= 1);
    CHECK(rep.disjoint_pairs > 0);
    CHECK(rep.members.size() >= 2);
  }
}

TEST_CASE("grid oracles bracket the closed forms") {
  Rng rng(59);
  const HausdorffContext ctx(random_dirac_metric_space(rng, 4));
  const double h = 1e-3;
  const std::uint32_t e = 0b1011, f = 0b0101;
  const DiscreteDdf diam = prob_diameter(ctx, e);
  const DiscreteDdf dist = prob_distance(ctx, e, f);
  const DiscreteDdf haus = hausdorff_distance(ctx, e, f);
  for (double t = 0.5; t < 10.0; t += 1.0) {
    const double dv = diameter_oracle(ctx, e, t, h);
    CHECK(dv >= diam.eval(t - 2 * h) - 1e-9);
    CHECK(dv <= diam.eval(t) + 1e-9);
    const double sv = distance_oracle(ctx, e, f, t, h);
    CHECK(sv >= dist.eval(t - 2 * h) - 1e-9);
    CHECK(sv <= dist.eval(t) + 1e-9);
    const double hv = hausdorff_oracle(ctx, e, f, t, h);
    CHECK(hv >= haus.eval(t - 2 * h) - 1e-9);
    CHECK(hv <= haus.eval(t) + 1e-9);
  }
  CHECK_THROWS_AS(diameter_oracle(ctx, e, 1.0, 0.0), BadGrid);
  CHECK_THROWS_AS(diameter_oracle(ctx, 0, 1.0, h), EmptySet);
}
