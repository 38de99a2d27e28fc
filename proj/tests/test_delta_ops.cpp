#include "doctest.h"

#include <cmath>

#include "pmmeas/delta_ops.hpp"
#include "pmmeas/errors.hpp"
#include "pmmeas/generators.hpp"

using namespace pmmeas;
using Atom = DiscreteDdf::Atom;

namespace {

void check_atoms(const DiscreteDdf& f, const std::vector<Atom>& want,
                 double inf_mass = 0.0) {
  REQUIRE(f.atoms().size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(f.atoms()[i].loc == doctest::Approx(want[i].loc).epsilon(1e-12));
    CHECK(f.atoms()[i].mass == doctest::Approx(want[i].mass).epsilon(1e-12));
  }
  CHECK(f.inf_mass() == doctest::Approx(inf_mass).epsilon(1e-12));
}

}  // namespace

TEST_CASE("tau_T(M) on a two-atom function and a unit step") {
  auto g = make_ddf({{1.0, 0.5}, {3.0, 0.5}});
  auto r = DeltaOp::tau_t(ScalarOp::tnorm_m()).apply(g, epsilon(2.0));
  check_atoms(r, {{3.0, 0.5}, {5.0, 0.5}});
}

TEST_CASE("pi_top(M) is the pointwise minimum") {
  auto g = make_ddf({{1.0, 0.5}, {3.0, 0.5}});
  auto r = DeltaOp::pi_top(ScalarOp::tnorm_m()).apply(g, epsilon(2.0));
  check_atoms(r, {{2.0, 0.5}, {3.0, 0.5}});
}

TEST_CASE("convolution of a two-atom function with itself") {
  auto g = make_ddf({{1.0, 0.5}, {3.0, 0.5}});
  auto r = DeltaOp::convolution().apply(g, g);
  check_atoms(r, {{2.0, 0.25}, {4.0, 0.5}, {6.0, 0.25}});
}

TEST_CASE("convolution tracks mass at infinity multiplicatively") {
  auto g = make_ddf({{1.0, 0.5}}, 0.5);
  auto r = DeltaOp::convolution().apply(g, g);
  check_atoms(r, {{2.0, 0.25}}, 0.75);
}

TEST_CASE("rho_LQ(K_1, W) on unit steps gives the shifted step") {
  auto r = DeltaOp::rho_lq(LOp::k_one(), ScalarOp::tnorm_w())
               .apply(epsilon(2.0), epsilon(3.0));
  check_atoms(r, {{5.0, 1.0}});
}

TEST_CASE("rho_LQ neutral element and bottom behaviour") {
  auto op = DeltaOp::rho_lq(LOp::k_one(), ScalarOp::tnorm_w());
  auto g = make_ddf({{1.0, 0.4}, {2.5, 0.6}});
  CHECK(ddf_eq(op.apply(epsilon(0.0), g), g));
  CHECK(ddf_eq(op.apply(g, epsilon(0.0)), g));
  auto bottom = epsilon(kInf);
  auto r = op.apply(bottom, bottom);
  CHECK(r.atoms().empty());
  CHECK(r.inf_mass() == doctest::Approx(1.0));
}

TEST_CASE("unit-step composition laws for the main kinds") {
  const double a = 2.5, b = 4.0;
  for (auto t : {ScalarOp::tnorm_m(), ScalarOp::tnorm_pi(), ScalarOp::tnorm_w()}) {
    auto r = DeltaOp::tau_t(t).apply(epsilon(a), epsilon(b));
    CHECK(r.is_dirac());
    CHECK(r.dirac_location() == doctest::Approx(a + b).epsilon(1e-12));
  }
  for (auto t : {ScalarOp::tnorm_m(), ScalarOp::tnorm_pi(), ScalarOp::tnorm_w(),
                 ScalarOp::tnorm_d()}) {
    auto r = DeltaOp::pi_top(t).apply(epsilon(a), epsilon(b));
    CHECK(r.is_dirac());
    CHECK(r.dirac_location() == doctest::Approx(std::max(a, b)).epsilon(1e-12));
  }
  auto r2 = DeltaOp::tau_la(LOp::k_alpha(2.0), ScalarOp::tnorm_m())
                .apply(epsilon(3.0), epsilon(4.0));
  CHECK(r2.is_dirac());
  CHECK(r2.dirac_location() == doctest::Approx(5.0).epsilon(1e-12));
  auto r3 = DeltaOp::convolution().apply(epsilon(a), epsilon(b));
  CHECK(r3.is_dirac());
  CHECK(r3.dirac_location() == doctest::Approx(a + b).epsilon(1e-12));
}

TEST_CASE("tau_T with mass at infinity caps the reachable level") {
  auto g = make_ddf({{1.0, 0.5}}, 0.5);
  auto r = DeltaOp::tau_t(ScalarOp::tnorm_m()).apply(g, epsilon(2.0));
  check_atoms(r, {{3.0, 0.5}}, 0.5);
}

TEST_CASE("tau_T specializes tau_LA at alpha one") {
  Rng rng(42);
  auto samples = random_ddfs(rng, 6, {1, 4, 8.0, 0.3, 0.3});
  for (auto t : {ScalarOp::tnorm_m(), ScalarOp::tnorm_pi(), ScalarOp::tnorm_w()}) {
    auto direct = DeltaOp::tau_t(t);
    auto general = DeltaOp::tau_la(LOp::k_one(), t);
    for (const auto& g : samples)
      for (const auto& h : samples)
        CHECK(ddf_eq(direct.apply(g, h), general.apply(g, h), 1e-12, 1e-12));
  }
}

TEST_CASE("pi_top specializes tau_LA at the max combiner") {
  Rng rng(43);
  auto samples = random_ddfs(rng, 6, {1, 4, 8.0, 0.3, 0.3});
  for (auto t : {ScalarOp::tnorm_m(), ScalarOp::tnorm_pi(), ScalarOp::tnorm_w()}) {
    auto direct = DeltaOp::pi_top(t);
    auto general = DeltaOp::tau_la(LOp::k_inf(), t);
    for (const auto& g : samples)
      for (const auto& h : samples)
        CHECK(ddf_eq(direct.apply(g, h), general.apply(g, h), 1e-9, 1e-9));
  }
}

TEST_CASE("drastic combiner is refused on general inputs, accepted on steps") {
  auto op = DeltaOp::tau_la(LOp::k_one(), ScalarOp::tnorm_d());
  auto g = make_ddf({{1.0, 0.5}, {3.0, 0.5}});
  CHECK_THROWS_AS(op.apply(g, epsilon(2.0)), NonLeftContinuousScalar);
  auto r = op.apply(epsilon(1.0), epsilon(2.0));
  CHECK(r.is_dirac());
  CHECK(r.dirac_location() == doctest::Approx(3.0));
}

TEST_CASE("grid oracle brackets the exact sup within two steps") {
  Rng rng(7);
  auto samples = random_ddfs(rng, 6, {1, 4, 6.0, 0.2, 0.3});
  std::uniform_real_distribution<double> ux(0.1, 14.0);
  const double h = 1e-3;
  std::vector<DeltaOp> ops;
  for (auto l : {LOp::k_one(), LOp::k_alpha(2.0), LOp::k_inf()})
    for (auto a : {ScalarOp::tnorm_m(), ScalarOp::tnorm_pi(), ScalarOp::tnorm_w()})
      ops.push_back(DeltaOp::tau_la(l, a));
  for (const auto& op : ops) {
    const auto& g = samples[0];
    const auto& hh = samples[1];
    auto exact = op.apply(g, hh);
    for (int i = 0; i < 8; ++i) {
      double x = ux(rng);
      double got = op.oracle_eval(g, hh, x, h);
      CHECK(got >= exact.eval(x - 2 * h) - 1e-9);
      CHECK(got <= exact.eval(x + 2 * h) + 1e-9);
    }
  }
}

TEST_CASE("grid oracle brackets the exact inf within two steps") {
  Rng rng(8);
  auto samples = random_ddfs(rng, 4, {1, 4, 6.0, 0.2, 0.3});
  std::uniform_real_distribution<double> ux(0.1, 14.0);
  const double h = 1e-3;
  for (auto l : {LOp::k_one(), LOp::k_alpha(2.0), LOp::k_inf()}) {
    auto op = DeltaOp::rho_lq(l, ScalarOp::tnorm_w());
    auto exact = op.apply(samples[0], samples[1]);
    for (int i = 0; i < 8; ++i) {
      double x = ux(rng);
      double got = op.oracle_eval(samples[0], samples[1], x, h);
      CHECK(got >= exact.eval(x - 2 * h) - 1e-9);
      CHECK(got <= exact.eval(x + 2 * h) + 1e-9);
    }
  }
}

TEST_CASE("oracle input validation") {
  CHECK_THROWS_AS(DeltaOp::tau_t(ScalarOp::tnorm_m())
                      .oracle_eval(epsilon(1.0), epsilon(2.0), 1.0, 0.0),
                  BadGrid);
  CHECK_THROWS_AS(
      DeltaOp::convolution().oracle_eval(epsilon(1.0), epsilon(2.0), 1.0, 1e-3),
      BadDescriptor);
}

TEST_CASE("oracle step function recovers a unit-step result") {
  auto op = DeltaOp::tau_t(ScalarOp::tnorm_m());
  auto r = op.oracle_step_function(epsilon(1.0), epsilon(2.0), 4.0, 0.25, 0.01);
  REQUIRE(r.atoms().size() == 1);
  CHECK(r.atoms()[0].loc == doctest::Approx(3.0).epsilon(0.1));
  CHECK(r.atoms()[0].mass == doctest::Approx(1.0));
}

TEST_CASE("triangle axioms hold for the standard operations") {
  Rng rng(11);
  auto samples = random_ddfs(rng, 7, {1, 3, 5.0, 0.25, 0.3});
  for (const auto& op :
       {DeltaOp::tau_t(ScalarOp::tnorm_m()), DeltaOp::tau_t(ScalarOp::tnorm_pi()),
        DeltaOp::tau_t(ScalarOp::tnorm_w()), DeltaOp::pi_top(ScalarOp::tnorm_m()),
        DeltaOp::convolution()}) {
    auto rep = check_triangle_axioms(op, samples);
    CHECK_MESSAGE(rep.pass(), op.name(), ": ", rep.failed);
  }
}

TEST_CASE("axiom checker flags a broken pointwise combiner") {
  Rng rng(12);
  auto samples = random_ddfs(rng, 5, {1, 3, 5.0, 0.0, 0.0});
  auto rep = check_triangle_axioms(DeltaOp::pi_top(ScalarOp::agg_am()), samples);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.neutral);
  CHECK_FALSE(rep.associative);
  CHECK_FALSE(rep.failed.empty());
}

TEST_CASE("pi_top(M) dominates the weak sup operation") {
  Rng rng(13);
  auto quads = random_quads(rng, 40, {1, 3, 6.0, 0.2, 0.3});
  auto rep = check_dominance_delta(DeltaOp::pi_top(ScalarOp::tnorm_m()),
                                   DeltaOp::tau_t(ScalarOp::tnorm_w()), quads);
  CHECK(rep.dominates);
  CHECK(rep.checked == 40);
  CHECK(rep.violations == 0);
}

TEST_CASE("dominance checker finds the planted reverse witness") {
  Rng rng(14);
  auto quads = random_quads(rng, 10, {1, 2, 4.0, 0.0, 0.5});
  quads.insert(quads.begin() + 3,
               DdfQuad{epsilon(1.0), epsilon(2.0), epsilon(2.0), epsilon(1.0)});
  auto rep = check_dominance_delta(DeltaOp::tau_t(ScalarOp::tnorm_w()),
                                   DeltaOp::pi_top(ScalarOp::tnorm_m()), quads);
  CHECK_FALSE(rep.dominates);
  CHECK(rep.violations >= 1);
  CHECK(rep.first_witness <= 3);
  CHECK(rep.worst_gap > 0.5);
}

TEST_CASE("scale equivariance holds for homogeneous kinds and fails for ordinal sums") {
  Rng rng(15);
  auto samples = random_ddfs(rng, 5, {1, 3, 3.0, 0.2, 0.3});
  const std::vector<double> cs{0.5, 2.0, 7.0};
  for (const auto& op :
       {DeltaOp::tau_t(ScalarOp::tnorm_m()), DeltaOp::tau_t(ScalarOp::tnorm_pi()),
        DeltaOp::pi_top(ScalarOp::tnorm_w()), DeltaOp::convolution(),
        DeltaOp::tau_la(LOp::k_alpha(2.0), ScalarOp::tnorm_m()),
        DeltaOp::rho_lq(LOp::k_one(), ScalarOp::tnorm_w())}) {
    auto rep = check_distributive(op, cs, samples);
    CHECK_MESSAGE(rep.distributive, op.name());
    CHECK(rep.checked == 45);
  }
  auto block = LOp::ordinal_sum({{1.0, 2.0, {1.0, 1.5, 2.0}, {0.0, 0.5, 1.0}}});
  auto rep = check_distributive(DeltaOp::tau_la(block, ScalarOp::tnorm_m()), cs,
                                {epsilon(1.2), epsilon(1.4)});
  CHECK_FALSE(rep.distributive);
}

TEST_CASE("pointwise order between sup operations") {
  Rng rng(16);
  auto samples = random_ddfs(rng, 6, {1, 3, 6.0, 0.2, 0.3});
  samples.push_back(epsilon(1.0));
  samples.push_back(epsilon(2.0));
  auto tw = DeltaOp::tau_t(ScalarOp::tnorm_w());
  auto tm = DeltaOp::tau_t(ScalarOp::tnorm_m());
  auto pm = DeltaOp::pi_top(ScalarOp::tnorm_m());
  CHECK(count_delta_leq_violations(tw, tm, samples) == 0);
  CHECK(count_delta_leq_violations(tm, pm, samples) == 0);
  CHECK(count_delta_leq_violations(pm, tm, samples) > 0);
}
