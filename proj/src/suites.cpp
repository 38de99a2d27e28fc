#include "pmmeas/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "pmmeas/errors.hpp"
#include "pmmeas/generators.hpp"
#include "pmmeas/hausdorff.hpp"
#include "pmmeas/measures.hpp"
#include "pmmeas/ppm.hpp"

namespace pmmeas {

namespace {

struct Check {
  std::string name;
  bool pass = false;
  std::string info;
};

using SuiteFn = std::vector<Check> (*)(const SuiteConfig&, Rng&);

struct SuiteDef {
  const char* name;
  const char* claim;
  SuiteFn fn;
};

std::string fmt(double x) {
  std::ostringstream o;
  o << x;
  return o.str();
}

int size_for(const SuiteConfig& c, int i) {
  return c.universe_sizes[i % c.universe_sizes.size()];
}

// ---------------------------------------------------------------- ddf

std::vector<Check> suite_ddf(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;

  {
    Check ck{"dirac-composition", true, ""};
    auto plus = [](double a, double b) { return a + b; };
    auto top = [](double a, double b) { return std::max(a, b); };
    auto radial = [](double a, double b) { return std::hypot(a, b); };
    std::vector<std::pair<DeltaOp, std::function<double(double, double)>>> laws;
    laws.emplace_back(DeltaOp::tau_t(ScalarOp::tnorm_m()), plus);
    laws.emplace_back(DeltaOp::tau_t(ScalarOp::tnorm_pi()), plus);
    laws.emplace_back(DeltaOp::tau_t(ScalarOp::tnorm_w()), plus);
    laws.emplace_back(DeltaOp::pi_top(ScalarOp::tnorm_m()), top);
    laws.emplace_back(DeltaOp::pi_top(ScalarOp::tnorm_pi()), top);
    laws.emplace_back(DeltaOp::pi_top(ScalarOp::tnorm_w()), top);
    laws.emplace_back(DeltaOp::pi_top(ScalarOp::tnorm_d()), top);
    laws.emplace_back(DeltaOp::tau_la(LOp::k_alpha(2.0), ScalarOp::tnorm_m()), radial);
    laws.emplace_back(DeltaOp::convolution(), plus);
    std::uniform_real_distribution<double> uni(0.0, 10.0);
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
      double a = uni(rng), b = uni(rng);
      for (const auto& [op, expect] : laws)
        if (!ddf_eq(op.apply(epsilon(a), epsilon(b)), epsilon(expect(a, b)), tol, 1e-9)) ++bad;
    }
    ck.pass = bad == 0;
    ck.info = "100 pairs x " + std::to_string(laws.size()) + " laws, " +
              std::to_string(bad) + " mismatches";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"rejects-malformed", true, ""};
    int caught = 0;
    try {
      make_ddf({{1.0, 0.6}});
    } catch (const NonNormalized&) {
      ++caught;
    }
    try {
      make_ddf({{-1.0, 1.0}});
    } catch (const NegativeLocation&) {
      ++caught;
    }
    try {
      make_ddf({{1.0, -0.2}, {2.0, 1.2}});
    } catch (const NegativeMass&) {
      ++caught;
    }
    ck.pass = caught == 3;
    ck.info = std::to_string(caught) + "/3 rejections observed";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"sup-oracle-bracket", true, ""};
    const double h = c.oracle_grid_step;
    DdfGenOptions opt;
    opt.max_atoms = 4;
    std::vector<DeltaOp> ops = {DeltaOp::tau_la(LOp::k_one(), ScalarOp::tnorm_m()),
                                DeltaOp::tau_la(LOp::k_alpha(2.0), ScalarOp::tnorm_w()),
                                DeltaOp::tau_la(LOp::k_inf(), ScalarOp::tnorm_pi())};
    std::uniform_real_distribution<double> ux(0.2, 8.0);
    int checked = 0, bad = 0;
    for (int p = 0; p < 5; ++p) {
      auto g = random_ddf(rng, opt), hh = random_ddf(rng, opt);
      for (const auto& op : ops) {
        auto exact = op.apply(g, hh);
        for (int k = 0; k < 8; ++k) {
          double x = ux(rng);
          double v = op.oracle_eval(g, hh, x, h);
          if (v < eval(exact, x - 2 * h) - 1e-9 || v > eval(exact, x) + 1e-9) ++bad;
          ++checked;
        }
      }
    }
    ck.pass = bad == 0;
    ck.info = std::to_string(checked) + " points, " + std::to_string(bad) + " outside bracket";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"inf-oracle-bracket", true, ""};
    const double h = c.oracle_grid_step;
    DdfGenOptions opt;
    opt.max_atoms = 4;
    std::vector<DeltaOp> ops = {DeltaOp::rho_lq(LOp::k_one(), ScalarOp::tnorm_w()),
                                DeltaOp::rho_lq(LOp::k_inf(), ScalarOp::tnorm_w())};
    std::uniform_real_distribution<double> ux(0.2, 8.0);
    int checked = 0, bad = 0;
    for (int p = 0; p < 5; ++p) {
      auto g = random_ddf(rng, opt), hh = random_ddf(rng, opt);
      for (const auto& op : ops) {
        auto exact = op.apply(g, hh);
        for (int k = 0; k < 8; ++k) {
          double x = ux(rng);
          double v = op.oracle_eval(g, hh, x, h);
          if (v < eval(exact, x - 2 * h) - 1e-9 || v > eval(exact, x + 2 * h) + 1e-9) ++bad;
          ++checked;
        }
      }
    }
    ck.pass = bad == 0;
    ck.info = std::to_string(checked) + " points, " + std::to_string(bad) + " outside bracket";
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- scalar

std::vector<Check> suite_scalar(const SuiteConfig&, Rng&) {
  std::vector<Check> out;

  {
    Check ck{"tnorm-axioms", true, ""};
    std::string failures;
    for (const auto& op : {ScalarOp::tnorm_m(), ScalarOp::tnorm_pi(), ScalarOp::tnorm_w(),
                           ScalarOp::tnorm_d()}) {
      auto r = check_tnorm_axioms(op, 0.05);
      if (!r.pass()) failures += op.name() + ":" + r.failed + " ";
    }
    ck.pass = failures.empty();
    ck.info = failures.empty() ? "M, Pi, W, D on the 0.05 grid" : failures;
    out.push_back(std::move(ck));
  }

  {
    Check ck{"mean-flagged-as-non-tnorm", true, ""};
    auto r = check_tnorm_axioms(ScalarOp::agg_am(), 0.05);
    ck.pass = !r.pass() && !r.identity_one;
    ck.info = "first failure: " + r.failed;
    out.push_back(std::move(ck));
  }

  {
    Check ck{"planted-nonassociative-flagged", true, ""};
    auto planted = ScalarOp::from_table(
        3, {0.0, 0.25, 0.5, 0.25, 0.5, 0.75, 0.5, 0.75, 1.0}, true, "planted");
    auto r = check_tnorm_axioms(planted, 0.05);
    ck.pass = !r.associative;
    ck.info = "associativity witness at (" + fmt(r.witness[0]) + ", " + fmt(r.witness[1]) +
              ", " + fmt(r.witness[2]) + ")";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"dual-is-involutive", true, ""};
    auto pi = ScalarOp::tnorm_pi();
    auto twice = ScalarOp::dual(ScalarOp::dual(pi));
    int bad = 0;
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        double x = i / 10.0, y = j / 10.0;
        if (std::abs(twice(x, y) - pi(x, y)) > 1e-12) ++bad;
      }
    ck.pass = bad == 0;
    ck.info = "121 grid points";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"mean-dominates-truncated-sum", true, ""};
    auto r = check_scalar_dominance(ScalarOp::agg_am(), ScalarOp::tnorm_w(), 0.05);
    ck.pass = r.dominates;
    ck.info = std::to_string(r.points) + " grid points, worst margin " + fmt(r.worst_margin);
    out.push_back(std::move(ck));
  }

  {
    Check ck{"reverse-dominance-refuted", true, ""};
    auto r = check_scalar_dominance(ScalarOp::tnorm_w(), ScalarOp::agg_am(), 0.05);
    ck.pass = !r.dominates;
    ck.info = "witness (" + fmt(r.witness[0]) + ", " + fmt(r.witness[1]) + ", " +
              fmt(r.witness[2]) + ", " + fmt(r.witness[3]) + ")";
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- triangle-axioms

std::vector<Check> suite_triangle(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  DdfGenOptions opt;
  opt.max_atoms = 3;
  auto samples = random_ddfs(rng, 14, opt);
  samples.push_back(epsilon(0.0));
  samples.push_back(DiscreteDdf());

  for (const auto& op : c.delta_ops) {
    Check ck{"axioms-" + op.name(), true, ""};
    auto r = check_triangle_axioms(op, samples, c.tolerance, 1e-9);
    ck.pass = r.pass();
    ck.info = r.pass() ? std::to_string(samples.size()) + " samples" : r.failed;
    out.push_back(std::move(ck));
  }

  {
    Check ck{"pointwise-mean-fails-associativity", true, ""};
    auto r = check_triangle_axioms(DeltaOp::pi_top(ScalarOp::agg_am()), samples, c.tolerance,
                                   1e-9);
    ck.pass = !r.pass();
    ck.info = "first failure: " + r.failed;
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- dominance

std::vector<Check> suite_dominance(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  auto theta = DeltaOp::pi_top(ScalarOp::tnorm_m());
  for (const auto& tau : {DeltaOp::tau_t(ScalarOp::tnorm_w()), DeltaOp::tau_t(ScalarOp::tnorm_pi()),
                          DeltaOp::pi_top(ScalarOp::tnorm_w()), DeltaOp::convolution()}) {
    Check ck{"max-product-over-" + tau.name(), true, ""};
    auto quads = random_quads(rng, 200);
    auto r = check_dominance_delta(theta, tau, quads, c.tolerance, 1e-9);
    ck.pass = r.dominates && r.checked == 200;
    ck.info = std::to_string(r.checked) + " quadruples, " + std::to_string(r.violations) +
              " violations";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"reverse-direction-refuted", true, ""};
    auto quads = random_quads(rng, 50);
    quads.push_back({epsilon(2.0), epsilon(0.0), epsilon(0.0), epsilon(2.0)});
    auto r = check_dominance_delta(DeltaOp::tau_t(ScalarOp::tnorm_w()), theta, quads,
                                   c.tolerance, 1e-9);
    ck.pass = !r.dominates;
    ck.info = std::to_string(r.violations) + " violations over " + std::to_string(r.checked);
    out.push_back(std::move(ck));
  }

  {
    Check ck{"mean-vs-sup-refuted", true, ""};
    auto quads = random_quads(rng, 50);
    quads.push_back({epsilon(1.0), epsilon(0.0), epsilon(0.0), epsilon(1.0)});
    auto r = check_dominance_delta(DeltaOp::pi_top(ScalarOp::agg_am()),
                                   DeltaOp::tau_t(ScalarOp::tnorm_m()), quads, c.tolerance,
                                   1e-9);
    ck.pass = !r.dominates;
    ck.info = std::to_string(r.violations) + " violations over " + std::to_string(r.checked);
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- measures

std::vector<Check> suite_measures(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;

  std::vector<NumericSetFunction> mus;
  std::vector<FiniteSetFunction> gammas;
  for (int i = 0; i < 10; ++i) {
    FiniteUniverse u(size_for(c, i));
    auto mu = NumericSetFunction::additive(u, random_weights(rng, u.size()));
    mus.push_back(mu);
    gammas.push_back(build_dirac(mu));
  }

  {
    Check ck{"additive-decomposes", true, ""};
    int bad = 0, pairs = 0;
    for (const auto& g : gammas)
      for (const auto& tau : {DeltaOp::tau_t(ScalarOp::tnorm_pi()), DeltaOp::tau_t(ScalarOp::tnorm_w())}) {
        auto r = classify(g, tau, tol, 1e-9);
        pairs = r.disjoint_pairs;
        if (!(r.is_measure && r.is_submeasure && r.is_antimonotone)) ++bad;
      }
    ck.pass = bad == 0;
    ck.info = "10 instances x 2 ops, " + std::to_string(pairs) + " disjoint pairs each";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"max-product-refuses-unequal-blocks", true, ""};
    auto theta = DeltaOp::pi_top(ScalarOp::tnorm_m());
    int refused = 0, witnessed = 0;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      auto r = classify(gammas[i], theta, tol, 1e-9);
      if (!r.is_measure) ++refused;
      const auto& u = gammas[i].universe();
      bool found = false;
      for (std::uint32_t e = 1; e < u.subset_count() && !found; ++e)
        for (std::uint32_t f = 1; f < u.subset_count() && !found; ++f) {
          if ((e & f) != 0) continue;
          if (std::abs(mus[i].at(e) - mus[i].at(f)) <= tol) continue;
          if (!ddf_eq(gammas[i].at(e | f), theta.apply(gammas[i].at(e), gammas[i].at(f)), tol,
                      1e-9))
            found = true;
        }
      if (found) ++witnessed;
    }
    ck.pass = refused == 10 && witnessed == 10;
    ck.info = std::to_string(refused) + "/10 refused, " + std::to_string(witnessed) +
              "/10 with unequal-value witness pairs";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"scaled-profile-asymmetry", true, ""};
    int pi_fails = 0, m_passes = 0;
    for (int i = 0; i < 5; ++i) {
      FiniteUniverse u(4);
      auto m = NumericSetFunction::additive(u, random_weights(rng, 4));
      std::uniform_real_distribution<double> um(0.3, 0.7), ul(0.2, 1.0);
      double w1 = um(rng), l1 = ul(rng);
      auto phi = make_ddf({{l1, w1}, {l1 + ul(rng), 1.0 - w1}});
      auto gamma = build_scaled_profile(m, LOp::k_one(), phi, tol);
      if (!classify(gamma, DeltaOp::tau_t(ScalarOp::tnorm_pi()), tol, 1e-9).is_measure)
        ++pi_fails;
      if (classify(gamma, DeltaOp::tau_t(ScalarOp::tnorm_m()), tol, 1e-9).is_measure)
        ++m_passes;
    }
    ck.pass = pi_fails >= 1 && m_passes == 5;
    ck.info = "product path fails " + std::to_string(pi_fails) + "/5, min path passes " +
              std::to_string(m_passes) + "/5";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"corruption-detected", true, ""};
    int detected = 0;
    for (const auto& g : gammas) {
      auto corr = corrupt_one_value(rng, g);
      if (!classify(corr.gamma, DeltaOp::tau_t(ScalarOp::tnorm_pi()), tol, 1e-9).is_measure)
        ++detected;
    }
    ck.pass = detected == 10;
    ck.info = std::to_string(detected) + "/10 corrupted instances flagged";
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- characterization

std::vector<Check> suite_characterization(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_pi());

  std::vector<FiniteSetFunction> gammas;
  for (int i = 0; i < 10; ++i)
    gammas.push_back(
        random_additive_dirac(rng, FiniteUniverse(size_for(c, i))));

  {
    Check ck{"valuation-identity-on-clean", true, ""};
    int good = 0, pairs = 0;
    for (const auto& g : gammas) {
      auto r = check_characterization(g, tau, tol, 1e-9);
      pairs = r.pairs_checked;
      if (r.consistent && r.identity_holds && r.classify_is_measure) ++good;
    }
    ck.pass = good == 10;
    ck.info = std::to_string(good) + "/10 instances, " + std::to_string(pairs) +
              " pairs on the last";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"valuation-identity-on-corrupted", true, ""};
    int good = 0;
    for (const auto& g : gammas) {
      auto corr = corrupt_one_value(rng, g);
      auto r = check_characterization(corr.gamma, tau, tol, 1e-9);
      if (r.consistent && !r.identity_holds && !r.classify_is_measure) ++good;
    }
    ck.pass = good == 10;
    ck.info = std::to_string(good) + "/10 corrupted instances stay consistent";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"submeasure-stays-consistent", true, ""};
    int good = 0;
    for (int i = 0; i < 5; ++i) {
      auto g = random_capped_dirac(rng, FiniteUniverse(4));
      auto r = check_characterization(g, DeltaOp::tau_t(ScalarOp::tnorm_w()), tol, 1e-9);
      if (r.consistent && !r.classify_is_measure) ++good;
    }
    ck.pass = good == 5;
    ck.info = std::to_string(good) + "/5 capped instances";
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- constructions

std::vector<Check> suite_constructions(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;
  auto tau_pi = DeltaOp::tau_t(ScalarOp::tnorm_pi());
  auto tau_w = DeltaOp::tau_t(ScalarOp::tnorm_w());

  {
    Check ck{"positive-scaling", true, ""};
    int good = 0, total = 0;
    for (int i = 0; i < 5; ++i) {
      auto g = random_additive_dirac(rng, FiniteUniverse(4));
      for (double s : {0.5, 2.0, 7.0}) {
        ++total;
        if (transform_scale(s, g, tau_pi, tol).verdict.is_measure) ++good;
      }
    }
    ck.pass = good == total;
    ck.info = std::to_string(good) + "/" + std::to_string(total) + " scaled instances";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"same-operation-combination", true, ""};
    int good = 0;
    for (int i = 0; i < 5; ++i) {
      FiniteUniverse u(4);
      auto g1 = random_additive_dirac(rng, u), g2 = random_additive_dirac(rng, u);
      if (transform_combine_tau(g1, g2, tau_pi, tol).verdict.is_measure) ++good;
    }
    ck.pass = good == 5;
    ck.info = std::to_string(good) + "/5 combinations stay measures";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"dominating-combination-gives-submeasure", true, ""};
    auto theta = DeltaOp::pi_top(ScalarOp::tnorm_m());
    int good = 0;
    for (int i = 0; i < 5; ++i) {
      FiniteUniverse u(4);
      auto g1 = random_additive_dirac(rng, u), g2 = random_additive_dirac(rng, u);
      auto r = transform_combine_theta(theta, g1, g2, tau_w, tol);
      if (r.dominance_ok && r.verdict.is_submeasure) ++good;
    }
    ck.pass = good == 5;
    ck.info = std::to_string(good) + "/5 combined instances are submeasures";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"dominated-aggregation", true, ""};
    int good = 0;
    for (int i = 0; i < 5; ++i) {
      FiniteUniverse u(4);
      std::vector<FiniteSetFunction> parts = {random_capped_dirac(rng, u),
                                              random_capped_dirac(rng, u)};
      auto r = aggregate(AggOp::mean(), parts, tau_w, {tau_w, tau_w}, tol, 1e-9);
      if (r.inputs_ok && r.tau_below_ok && r.dominance_ok && r.boundary_ok &&
          r.is_tau_submeasure)
        ++good;
    }
    ck.pass = good == 5;
    ck.info = std::to_string(good) + "/5 aggregated instances stay submeasures";
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- ppm

std::vector<Check> suite_ppm(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_w());
  auto theta = DeltaOp::pi_top(ScalarOp::tnorm_m());

  std::vector<FiniteSetFunction> gammas;
  std::vector<FinitePpMSpace> spaces;
  for (int i = 0; i < 5; ++i) {
    FiniteUniverse u(4);
    gammas.push_back(i % 2 == 0 ? random_capped_dirac(rng, u)
                                : random_profile_submeasure(rng, u));
    spaces.push_back(from_submeasure(gammas.back(), tau, tol, 1e-9));
  }

  {
    Check ck{"induced-pseudo-metric", true, ""};
    int good = 0, triples = 0;
    for (const auto& sp : spaces) {
      auto r = validate_space(sp.dist, sp.tau, tol, 1e-9);
      triples = r.triples;
      if (r.pass()) ++good;
    }
    ck.pass = good == 5;
    ck.info = std::to_string(good) + "/5 spaces, " + std::to_string(triples) +
              " triangle triples each";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"translation-invariance", true, ""};
    int good = 0;
    for (const auto& g : gammas)
      if (check_translation_invariance(g, tol, 1e-9)) ++good;
    ck.pass = good == 5;
    ck.info = std::to_string(good) + "/5 instances";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"non-submeasure-rejected", true, ""};
    FiniteUniverse u(2);
    FiniteSetFunction bad(u, {epsilon(0.0), epsilon(5.0), epsilon(1.0), epsilon(1.0)});
    try {
      from_submeasure(bad, tau, tol, 1e-9);
      ck.pass = false;
      ck.info = "violating input was accepted";
    } catch (const InputNotAntimonotoneSubmeasure& e) {
      ck.pass = true;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  {
    Check ck{"combination-respects-order", true, ""};
    int good = 0;
    for (int i = 0; i + 2 < static_cast<int>(spaces.size()); ++i) {
      const auto& rho = spaces[i].dist;
      const auto& sigma = spaces[i + 1].dist;
      auto varrho = combine_entrywise(theta, rho, sigma);
      bool ordered = preceq(rho, varrho, tol, 1e-9);
      auto a = oplus(theta, rho, spaces[i + 2].dist, tau, rng, 200, tol, 1e-9);
      auto b = combine_entrywise(theta, varrho, spaces[i + 2].dist);
      if (ordered && preceq(a, b, tol, 1e-9)) ++good;
    }
    ck.pass = good == 3;
    ck.info = std::to_string(good) + "/3 ordered pairs preserved";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"combination-gate-refuses", true, ""};
    try {
      oplus(DeltaOp::tau_t(ScalarOp::tnorm_w()), spaces[0].dist, spaces[1].dist,
            DeltaOp::pi_top(ScalarOp::tnorm_m()), rng, 200, tol, 1e-9);
      ck.pass = false;
      ck.info = "undominated combination was accepted";
    } catch (const DominanceUnverified& e) {
      ck.pass = true;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- semilattice

std::vector<Check> suite_semilattice(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;
  auto tau = DeltaOp::tau_t(ScalarOp::tnorm_w());
  auto theta = DeltaOp::pi_top(ScalarOp::tnorm_m());

  std::vector<DistMatrix> seed_family;
  seed_family.emplace_back(4);  // the all-zero matrix
  for (int i = 0; i < 3; ++i)
    seed_family.push_back(from_submeasure(random_capped_dirac(rng, FiniteUniverse(2)), tau,
                                          tol, 1e-9)
                              .dist);

  std::vector<DistMatrix> closed;
  {
    Check ck{"closure-terminates", true, ""};
    try {
      closed = close_under_min(seed_family, 64, tol, 1e-9);
      ck.pass = closed.size() >= seed_family.size();
      ck.info = std::to_string(closed.size()) + " members";
    } catch (const BudgetExhausted& e) {
      ck.pass = false;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  if (!closed.empty()) {
    Check ck{"bounded-semilattice", true, ""};
    auto r = check_semilattice(closed, theta, tol, 1e-9);
    ck.pass = r.pass() && r.members == static_cast<int>(closed.size());
    ck.info = r.pass() ? std::to_string(r.members) + " members verified" : r.failed;
    out.push_back(std::move(ck));

    Check bottom{"zero-matrix-is-bottom", true, ""};
    int good = 0;
    for (const auto& m : closed)
      if (preceq(seed_family[0], m, tol, 1e-9)) ++good;
    bottom.pass = good == static_cast<int>(closed.size());
    bottom.info = std::to_string(good) + "/" + std::to_string(closed.size()) +
                  " members above the bottom";
    out.push_back(std::move(bottom));

    Check corrupt{"corrupted-member-detected", true, ""};
    // Plant a half-mass atom below every location the family uses plus one
    // far beyond them, so the meet with any sibling leaves the family.
    double min_loc = 1e300;
    for (const auto& m : closed)
      for (int p = 0; p < m.points(); ++p)
        for (int q = p + 1; q < m.points(); ++q)
          for (const auto& atom : m.at(p, q).atoms())
            if (atom.loc > 0.0) min_loc = std::min(min_loc, atom.loc);
    auto broken = closed;
    broken[1].set(0, 1, make_ddf({{min_loc / 2.0, 0.5}, {1000.0, 0.5}}));
    auto rb = check_semilattice(broken, theta, tol, 1e-9);
    corrupt.pass = !rb.pass();
    corrupt.info = rb.pass() ? "perturbation went unnoticed" : rb.failed;
    out.push_back(std::move(corrupt));
  }

  {
    Check ck{"closure-budget-reported", true, ""};
    try {
      close_under_min(seed_family, 3, tol, 1e-9);
      ck.pass = false;
      ck.info = "cap was not enforced";
    } catch (const BudgetExhausted& e) {
      ck.pass = true;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- product

std::vector<Check> suite_product(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;

  {
    Check ck{"unit-step-metric-product", true, ""};
    auto a = random_dirac_metric_space(rng, 3);
    auto b = random_dirac_metric_space(rng, 4);
    try {
      auto p = product_space({&a, &b}, AggOp::min(), DeltaOp::tau_t(ScalarOp::tnorm_m()), rng,
                             tol, 1e-9);
      bool entry_ok = ddf_eq(p.dist.at(0, 1), b.dist.at(0, 1), tol, 1e-9);
      auto r = validate_space(p.dist, p.tau, tol, 1e-9);
      ck.pass = p.labels.size() == 12 && entry_ok && r.pass();
      ck.info = std::to_string(p.labels.size()) + " points, " + std::to_string(r.triples) +
                " triples";
    } catch (const Error& e) {
      ck.pass = false;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  {
    Check ck{"induced-product-sampled", true, ""};
    auto tau = DeltaOp::tau_t(ScalarOp::tnorm_w());
    auto a = from_submeasure(random_capped_dirac(rng, FiniteUniverse(4)), tau, tol, 1e-9);
    auto b = from_submeasure(random_capped_dirac(rng, FiniteUniverse(4)), tau, tol, 1e-9);
    try {
      auto p = product_space({&a, &b}, AggOp::min(), tau, rng, tol, 1e-9);
      auto want = pointwise_min(a.dist.at(0, 1), b.dist.at(0, 1));
      // coordinates (0,0) vs (1,1): both factors move
      bool entry_ok = ddf_eq(p.dist.at(0, 16 + 1), want, tol, 1e-9);
      ck.pass = p.labels.size() == 256 && entry_ok;
      ck.info = std::to_string(p.labels.size()) + " points, sampled validation";
    } catch (const Error& e) {
      ck.pass = false;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  {
    Check ck{"undominated-aggregator-rejected", true, ""};
    auto a = random_dirac_metric_space(rng, 3);
    auto b = random_dirac_metric_space(rng, 3);
    try {
      product_space({&a, &b}, AggOp::mean(), DeltaOp::tau_t(ScalarOp::tnorm_m()), rng, tol,
                    1e-9);
      ck.pass = false;
      ck.info = "mean aggregation was accepted";
    } catch (const DominanceUnverified& e) {
      ck.pass = true;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  {
    Check ck{"size-cap-enforced", true, ""};
    auto a = random_dirac_metric_space(rng, 65);
    auto b = random_dirac_metric_space(rng, 64);
    try {
      product_space({&a, &b}, AggOp::min(), DeltaOp::tau_t(ScalarOp::tnorm_m()), rng, tol,
                    1e-9);
      ck.pass = false;
      ck.info = "oversized product was accepted";
    } catch (const ProductTooLarge& e) {
      ck.pass = true;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- hausdorff

std::vector<Check> suite_hausdorff(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;

  {
    Check ck{"complement-map-structure", true, ""};
    int good = 0, subset_pairs = 0, all_pairs = 0;
    for (int i = 0; i < 5; ++i) {
      HausdorffContext ctx(random_dirac_metric_space(rng, 5));
      auto r = check_lambda_theorem(ctx, tol, 1e-9);
      subset_pairs = r.subset_pairs;
      all_pairs = r.all_pairs;
      if (r.precondition_met && r.pass()) ++good;
    }
    ck.pass = good == 5 && subset_pairs == 243 && all_pairs == 1024;
    ck.info = std::to_string(good) + "/5 spaces, " + std::to_string(subset_pairs) +
              " subset pairs, " + std::to_string(all_pairs) + " union pairs";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"two-point-closed-forms", true, ""};
    DistMatrix d(2);
    d.set(0, 1, epsilon(1.0));
    HausdorffContext ctx(
        FinitePpMSpace{{"a", "b"}, d, DeltaOp::tau_t(ScalarOp::tnorm_m())});
    bool ok = ddf_eq(prob_diameter(ctx, 3u), epsilon(1.0), tol, 1e-9);
    ok = ok && ddf_eq(prob_distance(ctx, 0u, 3u), epsilon(0.0), tol, 1e-9);
    ok = ok && prob_distance(ctx, 1u, 0u).atoms().empty();
    ok = ok && ddf_eq(hausdorff_distance(ctx, 1u, 2u), epsilon(1.0), tol, 1e-9);
    ok = ok && ddf_eq(lambda_H(ctx, 1u), epsilon(1.0), tol, 1e-9);
    ck.pass = ok;
    ck.info = "diameter, directed, symmetric and complement forms";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"grid-oracle-brackets", true, ""};
    HausdorffContext ctx(random_dirac_metric_space(rng, 4));
    const double h = 1e-2;
    const std::uint32_t e = 0b1011u, f = 0b0101u;
    auto dia = prob_diameter(ctx, e);
    auto dir = prob_distance(ctx, e, f);
    auto hd = hausdorff_distance(ctx, e, f);
    int bad = 0, checked = 0;
    for (double t = 0.5; t < 8.0; t += 1.0) {
      struct Probe {
        double got, lo, hi;
      };
      Probe probes[3] = {
          {diameter_oracle(ctx, e, t, h), eval(dia, t - 2 * h), eval(dia, t)},
          {distance_oracle(ctx, e, f, t, h), eval(dir, t - 2 * h), eval(dir, t)},
          {hausdorff_oracle(ctx, e, f, t, h), eval(hd, t - 2 * h), eval(hd, t)}};
      for (const auto& p : probes) {
        ++checked;
        if (p.got < p.lo - 1e-9 || p.got > p.hi + 1e-9) ++bad;
      }
    }
    ck.pass = bad == 0;
    ck.info = std::to_string(checked) + " probes, " + std::to_string(bad) + " outside bracket";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"unbounded-set-rejected", true, ""};
    DistMatrix d(2);
    d.set(0, 1, make_ddf({{1.0, 0.5}}, 0.5));
    HausdorffContext ctx(
        FinitePpMSpace{{"a", "b"}, d, DeltaOp::tau_t(ScalarOp::tnorm_m())});
    try {
      hausdorff_distance(ctx, 3u, 1u, tol);
      ck.pass = false;
      ck.info = "unbounded set was accepted";
    } catch (const NotProbBounded& e) {
      ck.pass = true;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  {
    Check ck{"broken-triangle-gates", true, ""};
    DistMatrix d(3);
    d.set(0, 1, epsilon(1.0));
    d.set(1, 2, epsilon(2.0));
    d.set(0, 2, epsilon(4.0));
    HausdorffContext ctx(
        FinitePpMSpace{{"a", "b", "c"}, d, DeltaOp::tau_t(ScalarOp::tnorm_m())});
    auto r = check_lambda_theorem(ctx, tol, 1e-9);
    ck.pass = !r.precondition_met && r.antimonotone && !r.note.empty();
    ck.info = r.note;
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- measurable

std::vector<Check> suite_measurable(const SuiteConfig& c, Rng& rng) {
  std::vector<Check> out;
  const double tol = c.tolerance;
  std::vector<FinitePpMSpace> spaces;
  for (int i = 0; i < 5; ++i) spaces.push_back(random_dirac_metric_space(rng, 5));
  std::vector<DeltaOp> taus = {DeltaOp::tau_t(ScalarOp::tnorm_m()),
                               DeltaOp::pi_top(ScalarOp::tnorm_m())};

  {
    Check ck{"algebra-structure", true, ""};
    int good = 0, total = 0, candidates = 0;
    for (const auto& sp : spaces)
      for (const auto& tau : taus) {
        ++total;
        HausdorffContext ctx(sp);
        auto m = enumerate_measurable(ctx, tau, tol, 1e-9);
        candidates = m.candidates;
        if (m.pass()) ++good;
      }
    ck.pass = good == total && candidates == 32;
    ck.info = std::to_string(good) + "/" + std::to_string(total) + " algebras closed, " +
              std::to_string(candidates) + " candidates each";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"restriction-is-additive", true, ""};
    int good = 0, total = 0;
    for (const auto& sp : spaces)
      for (const auto& tau : taus) {
        ++total;
        HausdorffContext ctx(sp);
        auto r = check_restriction_measure(ctx, tau, tol, 1e-9);
        if (r.pass() && r.atoms >= 1 && r.disjoint_pairs > 0) ++good;
      }
    ck.pass = good == total;
    ck.info = std::to_string(good) + "/" + std::to_string(total) + " restrictions additive";
    out.push_back(std::move(ck));
  }

  {
    Check ck{"subset-scan-cap", true, ""};
    HausdorffContext ctx(random_dirac_metric_space(rng, 11));
    try {
      enumerate_measurable(ctx, taus[0], tol, 1e-9);
      ck.pass = false;
      ck.info = "oversized scan was accepted";
    } catch (const BadDescriptor& e) {
      ck.pass = true;
      ck.info = e.what();
    }
    out.push_back(std::move(ck));
  }

  return out;
}

// ---------------------------------------------------------------- registry

const SuiteDef kSuites[] = {
    {"ddf",
     "Unit-step inputs compose exactly through every composition path, malformed "
     "distributions are rejected, and the dense-grid oracle brackets the exact "
     "construction on random inputs.",
     suite_ddf},
    {"scalar",
     "The four basic scalar operations satisfy the t-norm axioms on a dense grid, planted "
     "defects are localized with witnesses, and the arithmetic mean dominates the "
     "truncated sum.",
     suite_scalar},
    {"triangle-axioms",
     "Every configured distance composition is commutative, associative, monotone, and has "
     "the unit step at zero as neutral element on a random finite family; the pointwise "
     "mean is refuted.",
     suite_triangle},
    {"dominance",
     "The pointwise-max product dominates the sum-based compositions on sampled "
     "quadruples, and both reverse directions are refuted with witnesses.",
     suite_dominance},
    {"measures",
     "Additive unit-step set functions decompose exactly under sum-based compositions, the "
     "pointwise-max product refuses unequal blocks, scaled profiles separate the product "
     "path from the min path, and corrupted tables are flagged.",
     suite_measures},
    {"characterization",
     "Decomposability over disjoint pairs coincides with the valuation identity over all "
     "pairs, on clean, corrupted, and capped instances alike.",
     suite_characterization},
    {"constructions",
     "Positive scaling, same-operation combination, dominating combination, and dominated "
     "aggregation each preserve the advertised measure or submeasure class.",
     suite_constructions},
    {"ppm",
     "Symmetric-difference distances induced by antimonotone submeasures form "
     "translation-invariant pseudo-metric spaces, and the monotone combination respects "
     "the reversed pointwise order with its dominance gate enforced.",
     suite_ppm},
    {"semilattice",
     "Closing a family of distance matrices under the entrywise pointwise-max combination "
     "yields a bounded semilattice with the all-zero matrix at the bottom, and perturbed "
     "members are detected.",
     suite_semilattice},
    {"product",
     "Coordinatewise aggregation of finite pseudo-metric spaces under a dominating "
     "aggregator is again a pseudo-metric space, with the dominance and size guards "
     "enforced.",
     suite_product},
    {"hausdorff",
     "Set distances built from pointwise infima and suprema match their grid oracles and "
     "closed two-point forms, unbounded sets are rejected, and the complement-to-whole "
     "map is antimonotone with the union bound.",
     suite_hausdorff},
    {"measurable",
     "The cleanly splitting subsets form an algebra containing the empty and full sets, "
     "the restriction to it is additive, and the subset-scan cap is enforced.",
     suite_measurable},
};

const SuiteDef* find_suite(const std::string& name) {
  for (const auto& def : kSuites)
    if (name == def.name) return &def;
  return nullptr;
}

Rng suite_rng(const SuiteConfig& c, int index) {
  return Rng(c.seed * 0x9E3779B97F4A7C15ull + 0x100001B3ull * (index + 1));
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& def : kSuites) v.emplace_back(def.name);
    return v;
  }();
  return names;
}

std::vector<DeltaOp> default_delta_ops() {
  return {DeltaOp::tau_t(ScalarOp::tnorm_m()),
          DeltaOp::tau_t(ScalarOp::tnorm_pi()),
          DeltaOp::tau_t(ScalarOp::tnorm_w()),
          DeltaOp::pi_top(ScalarOp::tnorm_m()),
          DeltaOp::pi_top(ScalarOp::tnorm_w()),
          DeltaOp::tau_la(LOp::k_alpha(2.0), ScalarOp::tnorm_m()),
          DeltaOp::convolution()};
}

SuiteConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigParse("config: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "seed" && key != "tolerance" && key != "oracle_grid_step" &&
        key != "universe_sizes" && key != "suites" && key != "delta_ops")
      throw ConfigParse("config: unknown key '" + key + "'");
  }
  SuiteConfig c;
  try {
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    if (j.contains("oracle_grid_step"))
      c.oracle_grid_step = j.at("oracle_grid_step").get<double>();
    if (j.contains("universe_sizes"))
      c.universe_sizes = j.at("universe_sizes").get<std::vector<int>>();
    if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
    if (j.contains("delta_ops")) {
      c.delta_ops.clear();
      for (const Json& d : j.at("delta_ops")) c.delta_ops.push_back(delta_from_json(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigParse(std::string("config: ") + e.what());
  }
  if (!(c.tolerance > 0.0)) throw ConfigParse("config: tolerance must be > 0");
  if (!(c.oracle_grid_step > 0.0) || c.oracle_grid_step > 0.1)
    throw ConfigParse("config: oracle_grid_step must lie in (0, 0.1]");
  if (c.universe_sizes.empty()) throw ConfigParse("config: universe_sizes must be non-empty");
  for (int n : c.universe_sizes)
    if (n < 1 || n > 16)
      throw ConfigParse("config: universe sizes must lie in [1, 16]");
  if (c.delta_ops.empty()) throw ConfigParse("config: delta_ops must be non-empty");
  for (const auto& name : c.suites)
    if (find_suite(name) == nullptr) throw SuiteUnknown("unknown suite '" + name + "'");
  return c;
}

Json config_to_json(const SuiteConfig& c) {
  Json ops = Json::array();
  for (const auto& op : c.delta_ops) ops.push_back(delta_to_json(op));
  return Json{{"seed", c.seed},
              {"tolerance", c.tolerance},
              {"oracle_grid_step", c.oracle_grid_step},
              {"universe_sizes", c.universe_sizes},
              {"suites", c.suites},
              {"delta_ops", std::move(ops)}};
}

Json run_suites(const SuiteConfig& c) {
  for (const auto& name : c.suites)
    if (find_suite(name) == nullptr) throw SuiteUnknown("unknown suite '" + name + "'");

  auto t0 = std::chrono::steady_clock::now();
  Json suites = Json::array();
  bool all_pass = true;
  for (const auto& name : c.suites) {
    const SuiteDef* def = find_suite(name);
    int index = static_cast<int>(def - kSuites);
    Rng rng = suite_rng(c, index);
    auto ts = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    try {
      checks = def->fn(c, rng);
    } catch (const Error& e) {
      checks.push_back({"unexpected-error", false, e.what()});
    }
    bool pass = true;
    Json jchecks = Json::array();
    for (const auto& ck : checks) {
      pass = pass && ck.pass;
      jchecks.push_back(Json{{"name", ck.name}, {"pass", ck.pass}, {"info", ck.info}});
    }
    all_pass = all_pass && pass;
    suites.push_back(Json{{"name", name},
                          {"claim", def->claim},
                          {"pass", pass},
                          {"checks", std::move(jchecks)},
                          {"elapsed_ms", ms_since(ts)}});
  }
  return Json{{"schema_version", 1},
              {"parallelism", 1},
              {"config", config_to_json(c)},
              {"suites", std::move(suites)},
              {"all_pass", all_pass},
              {"elapsed_ms", ms_since(t0)}};
}

void strip_timing(Json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [key, value] : j.items()) {
      (void)key;
      strip_timing(value);
    }
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

namespace {

Json explore_nonassoc(const SuiteConfig& c, Rng& rng, int budget) {
  auto op = DeltaOp::tau_la(LOp::k_one(), ScalarOp::tnorm_d());
  const double es = 0.25, gs = std::max(c.oracle_grid_step, 0.01);
  const double x_max = 6.0;
  // A difference only counts when it survives the oracle's location slack:
  // f1 must exceed f2 even after giving f2 the benefit of a slack-wide shift.
  const double slack = es + 2 * gs;
  auto gap_beyond_slack = [&](const DiscreteDdf& f1, const DiscreteDdf& f2) {
    double worst = 0.0;
    for (double t = slack; t <= x_max - slack; t += 0.125)
      worst = std::max(worst, eval(f1, t - slack) - eval(f2, t + slack));
    return worst;
  };
  DdfGenOptions opt;
  opt.max_atoms = 2;
  opt.loc_max = 1.5;
  opt.inf_mass_prob = 0.3;
  int tried = 0, violations = 0;
  double max_gap = 0.0;
  Json witness;
  for (int k = 0; k < budget; ++k) {
    auto a = random_ddf(rng, opt), b = random_ddf(rng, opt), d = random_ddf(rng, opt);
    auto ab = op.oracle_step_function(a, b, x_max, es, gs);
    auto bc = op.oracle_step_function(b, d, x_max, es, gs);
    auto left = op.oracle_step_function(ab, d, x_max, es, gs);
    auto right = op.oracle_step_function(a, bc, x_max, es, gs);
    double gap = std::max(gap_beyond_slack(left, right), gap_beyond_slack(right, left));
    ++tried;
    if (gap > max_gap) max_gap = gap;
    if (gap > 0.05) {
      ++violations;
      if (witness.is_null())
        witness = Json{{"g", ddf_to_json(a)}, {"h", ddf_to_json(b)}, {"k", ddf_to_json(d)},
                       {"gap", gap}};
    }
  }
  Json result{{"operation", op.name()},
              {"triples_tried", tried},
              {"violations", violations},
              {"max_gap", max_gap},
              {"verdict", violations > 0 ? "associativity violations found"
                                         : "none found within budget"}};
  if (!witness.is_null()) result["witness"] = witness;
  result["budget_exhausted"] = violations == 0;
  return result;
}

Json explore_pi_top(const SuiteConfig& c, Rng& rng, int budget) {
  auto theta = DeltaOp::pi_top(ScalarOp::tnorm_m());
  int tried = 0;
  Json witness;
  for (int k = 0; k < budget && witness.is_null(); ++k) {
    int n = k == 0 ? 3 : 3 + (k % 2);
    FiniteUniverse u(n);
    std::vector<double> w =
        k == 0 ? std::vector<double>{1.0, 2.0, 4.0} : random_weights(rng, n);
    auto mu = NumericSetFunction::additive(u, w);
    auto gamma = build_dirac(mu);
    ++tried;
    for (std::uint32_t e = 1; e < u.subset_count() && witness.is_null(); ++e)
      for (std::uint32_t f = 1; f < u.subset_count() && witness.is_null(); ++f) {
        if ((e & f) != 0) continue;
        if (std::abs(mu.at(e) - mu.at(f)) <= c.tolerance) continue;
        if (!ddf_eq(gamma.at(e | f), theta.apply(gamma.at(e), gamma.at(f)), c.tolerance,
                    1e-9))
          witness = Json{{"E", u.subset_name(e)},      {"F", u.subset_name(f)},
                         {"mu_E", mu.at(e)},           {"mu_F", mu.at(f)},
                         {"additive_value", mu.at(e | f)}, {"max_value",
                          std::max(mu.at(e), mu.at(f))},   {"weights", w}};
      }
  }
  Json result{{"instances_tried", tried}, {"found", !witness.is_null()}};
  if (witness.is_null())
    result["budget_exhausted"] = true;
  else
    result["witness"] = witness;
  return result;
}

Json explore_census(const SuiteConfig& c, Rng& rng, int budget) {
  std::vector<DeltaOp> taus = {DeltaOp::tau_t(ScalarOp::tnorm_m()),
                               DeltaOp::tau_t(ScalarOp::tnorm_pi()),
                               DeltaOp::tau_t(ScalarOp::tnorm_w()),
                               DeltaOp::pi_top(ScalarOp::tnorm_m())};
  std::vector<std::vector<std::size_t>> sizes(taus.size());
  int spaces = 0;
  for (int k = 0; k < budget; ++k) {
    HausdorffContext ctx(random_dirac_metric_space(rng, 3));
    ++spaces;
    for (std::size_t t = 0; t < taus.size(); ++t)
      sizes[t].push_back(enumerate_measurable(ctx, taus[t], c.tolerance, 1e-9).members.size());
  }
  Json table = Json::array();
  for (std::size_t t = 0; t < taus.size(); ++t)
    table.push_back(Json{{"tau", taus[t].name()}, {"algebra_sizes", sizes[t]}});
  return Json{{"spaces", spaces},
              {"candidates_per_space", 8},
              {"table", std::move(table)},
              {"budget_exhausted", budget <= 0}};
}

}  // namespace

Json run_explore(const SuiteConfig& c, const std::string& mode, int budget) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(c.seed * 0x9E3779B97F4A7C15ull + 0xA5A5A5A5ull);
  Json result;
  bool pass = true;
  if (mode == "find-nonassoc") {
    result = explore_nonassoc(c, rng, budget);
  } else if (mode == "find-pi-top-violation") {
    result = explore_pi_top(c, rng, budget);
    pass = result.at("found").get<bool>();
  } else if (mode == "s-tau-census") {
    result = explore_census(c, rng, budget);
  } else {
    throw SuiteUnknown("unknown explore mode '" + mode + "'");
  }
  return Json{{"schema_version", 1}, {"mode", mode},     {"seed", c.seed},
              {"budget", budget},    {"result", result}, {"pass", pass},
              {"elapsed_ms", ms_since(t0)}};
}

}  // namespace pmmeas
