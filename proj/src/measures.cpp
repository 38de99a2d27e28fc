#include "pmmeas/measures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pmmeas/errors.hpp"

namespace pmmeas {

namespace {
constexpr int kMaxUniverse = 16;
}

FiniteUniverse::FiniteUniverse(int n) {
  if (n < 0 || n > kMaxUniverse) throw BadDescriptor("universe size out of range");
  labels_.reserve(n);
  for (int i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
}

FiniteUniverse::FiniteUniverse(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxUniverse)
    throw BadDescriptor("universe size out of range");
  for (const auto& l : labels_)
    if (l.empty()) throw BadDescriptor("empty element label");
}

std::string FiniteUniverse::subset_name(std::uint32_t mask) const {
  std::string out = "{";
  for (int i = 0; i < size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    if (out.size() > 1) out += ",";
    out += labels_[i];
  }
  return out + "}";
}

NumericSetFunction::NumericSetFunction(FiniteUniverse u, std::vector<double> values)
    : u_(std::move(u)), values_(std::move(values)) {
  if (values_.size() != u_.subset_count())
    throw BadDescriptor("value table size mismatch");
  if (values_[0] != 0.0) throw BadDescriptor("mu(empty) must be 0");
  for (double v : values_)
    if (std::isnan(v) || v < 0.0) throw NegativeInput("mu values must be >= 0");
}

NumericSetFunction NumericSetFunction::additive(const FiniteUniverse& u,
                                                const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != u.size())
    throw BadDescriptor("one weight per element required");
  std::vector<double> vals(u.subset_count(), 0.0);
  for (std::uint32_t m = 1; m < u.subset_count(); ++m)
    for (int i = 0; i < u.size(); ++i)
      if (m >> i & 1u) vals[m] += weights[i];
  return NumericSetFunction(u, std::move(vals));
}

NumericSetFunction NumericSetFunction::max_combined(
    const FiniteUniverse& u, const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != u.size())
    throw BadDescriptor("one weight per element required");
  std::vector<double> vals(u.subset_count(), 0.0);
  for (std::uint32_t m = 1; m < u.subset_count(); ++m)
    for (int i = 0; i < u.size(); ++i)
      if (m >> i & 1u) vals[m] = std::max(vals[m], weights[i]);
  return NumericSetFunction(u, std::move(vals));
}

namespace {

void require_eps0(const DiscreteDdf& f) {
  const bool ok = f.inf_mass() == 0.0 && f.atoms().size() == 1 &&
                  f.atoms()[0].loc == 0.0 && f.atoms()[0].mass == 1.0;
  if (!ok) throw BadDescriptor("value at the empty set must be epsilon(0)");
}

}  // namespace

FiniteSetFunction::FiniteSetFunction(FiniteUniverse u, std::vector<DiscreteDdf> values)
    : u_(std::move(u)), values_(std::move(values)) {
  if (values_.size() != u_.subset_count())
    throw BadDescriptor("value table size mismatch");
  require_eps0(values_[0]);
}

void FiniteSetFunction::set(std::uint32_t mask, DiscreteDdf value) {
  if (mask >= u_.subset_count()) throw BadDescriptor("subset index out of range");
  if (mask == 0) require_eps0(value);
  values_[mask] = std::move(value);
}

ClassifyReport classify(const FiniteSetFunction& gamma, const DeltaOp& tau,
                        double tol, double loc_tol) {
  ClassifyReport rep;
  const std::uint32_t n = gamma.universe().subset_count();
  auto name = [&gamma](std::uint32_t m) { return gamma.universe().subset_name(m); };
  for (std::uint32_t e = 0; e < n; ++e)
    for (std::uint32_t f = 0; f < n; ++f) {
      if (e & f) continue;
      ++rep.disjoint_pairs;
      if (!rep.is_measure && !rep.is_submeasure) continue;
      const DiscreteDdf combined = tau.apply(gamma.at(e), gamma.at(f));
      if (rep.is_measure && !ddf_eq(gamma.at(e | f), combined, tol, loc_tol)) {
        rep.is_measure = false;
        rep.measure_w = {true, e, f, name(e) + " vs " + name(f)};
      }
      if (rep.is_submeasure && !ddf_leq(combined, gamma.at(e | f), tol, loc_tol)) {
        rep.is_submeasure = false;
        rep.submeasure_w = {true, e, f, name(e) + " vs " + name(f)};
      }
    }
  for (std::uint32_t f = 0; f < n && rep.is_antimonotone; ++f)
    for (std::uint32_t e = f;; e = (e - 1) & f) {  // all subsets e of f
      if (e != f) {
        ++rep.subset_pairs;
        if (!ddf_leq(gamma.at(f), gamma.at(e), tol, loc_tol)) {
          rep.is_antimonotone = false;
          rep.antimonotone_w = {true, e, f, name(e) + " subset of " + name(f)};
          break;
        }
      }
      if (e == 0) break;
    }
  for (std::uint32_t e = 0; e < n && rep.superadditive_all; ++e)
    for (std::uint32_t f = 0; f < n; ++f) {
      ++rep.all_pairs;
      const DiscreteDdf combined = tau.apply(gamma.at(e), gamma.at(f));
      if (!ddf_leq(combined, gamma.at(e | f), tol, loc_tol)) {
        rep.superadditive_all = false;
        rep.superadditive_w = {true, e, f, name(e) + " vs " + name(f)};
        break;
      }
    }
  return rep;
}

CharacterizationReport check_characterization(const FiniteSetFunction& gamma,
                                              const DeltaOp& tau, double tol,
                                              double loc_tol) {
  CharacterizationReport rep;
  const std::uint32_t n = gamma.universe().subset_count();
  for (std::uint32_t e = 0; e < n && rep.identity_holds; ++e)
    for (std::uint32_t f = 0; f < n; ++f) {
      ++rep.pairs_checked;
      const DiscreteDdf lhs = tau.apply(gamma.at(e | f), gamma.at(e & f));
      const DiscreteDdf rhs = tau.apply(gamma.at(e), gamma.at(f));
      if (!ddf_eq(lhs, rhs, tol, loc_tol)) {
        rep.identity_holds = false;
        rep.witness = {true, e, f,
                       gamma.universe().subset_name(e) + " vs " +
                           gamma.universe().subset_name(f)};
        break;
      }
    }
  rep.classify_is_measure = classify(gamma, tau, tol, loc_tol).is_measure;
  rep.consistent = rep.identity_holds == rep.classify_is_measure;
  return rep;
}

FiniteSetFunction build_dirac(const NumericSetFunction& mu) {
  std::vector<DiscreteDdf> vals;
  vals.reserve(mu.universe().subset_count());
  for (std::uint32_t m = 0; m < mu.universe().subset_count(); ++m)
    vals.push_back(epsilon(mu.at(m)));
  return FiniteSetFunction(mu.universe(), std::move(vals));
}

FiniteSetFunction build_scaled_profile(const NumericSetFunction& m, const LOp& l,
                                       const DiscreteDdf& phi, double tol) {
  const std::uint32_t n = m.universe().subset_count();
  for (std::uint32_t e = 0; e < n; ++e)
    for (std::uint32_t f = 0; f < n; ++f) {
      if (e & f) continue;
      const double want = l(m.at(e), m.at(f));
      if (std::fabs(m.at(e | f) - want) > tol)
        throw NotLDecomposable("m is not " + l.name() + "-decomposable at " +
                               m.universe().subset_name(e) + " vs " +
                               m.universe().subset_name(f));
    }
  std::vector<DiscreteDdf> vals;
  vals.reserve(n);
  for (std::uint32_t e = 0; e < n; ++e)
    vals.push_back(scalar_multiply(m.at(e), phi));
  return FiniteSetFunction(m.universe(), std::move(vals));
}

namespace {

void require_measure(const FiniteSetFunction& g, const DeltaOp& tau, double tol,
                     double loc_tol, const char* which) {
  if (!classify(g, tau, tol, loc_tol).is_measure)
    throw InputNotMeasure(std::string(which) + " is not a " + tau.name() +
                          "-decomposable measure");
}

void require_same_universe(const FiniteSetFunction& a, const FiniteSetFunction& b) {
  if (!(a.universe() == b.universe()))
    throw BadDescriptor("set functions live on different universes");
}

}  // namespace

TransformResult transform_scale(double c, const FiniteSetFunction& gamma,
                                const DeltaOp& tau, double tol, double loc_tol) {
  require_measure(gamma, tau, tol, loc_tol, "input");
  auto dist = check_distributive(tau, {c}, gamma.values(), tol, loc_tol);
  if (!dist.distributive)
    throw NotDistributive(tau.name() + " is not scale-equivariant at c = " +
                          std::to_string(c));
  std::vector<DiscreteDdf> vals;
  vals.reserve(gamma.values().size());
  for (const auto& v : gamma.values()) vals.push_back(scalar_multiply(c, v));
  TransformResult out{FiniteSetFunction(gamma.universe(), std::move(vals)), {}, true};
  out.verdict = classify(out.gamma, tau, tol, loc_tol);
  return out;
}

TransformResult transform_combine_tau(const FiniteSetFunction& g1,
                                      const FiniteSetFunction& g2,
                                      const DeltaOp& tau, double tol,
                                      double loc_tol) {
  require_same_universe(g1, g2);
  require_measure(g1, tau, tol, loc_tol, "first input");
  require_measure(g2, tau, tol, loc_tol, "second input");
  std::vector<DiscreteDdf> vals;
  vals.reserve(g1.values().size());
  for (std::uint32_t m = 0; m < g1.universe().subset_count(); ++m)
    vals.push_back(tau.apply(g1.at(m), g2.at(m)));
  TransformResult out{FiniteSetFunction(g1.universe(), std::move(vals)), {}, true};
  out.verdict = classify(out.gamma, tau, tol, loc_tol);
  return out;
}

TransformResult transform_combine_theta(const DeltaOp& theta,
                                        const FiniteSetFunction& g1,
                                        const FiniteSetFunction& g2,
                                        const DeltaOp& tau, double tol,
                                        double loc_tol) {
  require_same_universe(g1, g2);
  require_measure(g1, tau, tol, loc_tol, "first input");
  require_measure(g2, tau, tol, loc_tol, "second input");
  const std::uint32_t n = g1.universe().subset_count();
  std::vector<DdfQuad> quads;
  for (std::uint32_t e = 0; e < n; ++e)
    for (std::uint32_t f = 0; f < n; ++f)
      if (!(e & f)) quads.push_back({g1.at(e), g1.at(f), g2.at(e), g2.at(f)});
  std::vector<DiscreteDdf> vals;
  vals.reserve(n);
  for (std::uint32_t m = 0; m < n; ++m)
    vals.push_back(theta.apply(g1.at(m), g2.at(m)));
  TransformResult out{FiniteSetFunction(g1.universe(), std::move(vals)), {}, true};
  out.dominance_ok = check_dominance_delta(theta, tau, quads, tol, loc_tol).dominates;
  out.verdict = classify(out.gamma, tau, tol, loc_tol);
  return out;
}

AggOp AggOp::mean() {
  return {"Pi_AM", [](const std::vector<double>& v) {
            double s = 0.0;
            for (double x : v) s += x;
            return v.empty() ? 1.0 : s / static_cast<double>(v.size());
          }};
}

AggOp AggOp::min() {
  return {"Pi_M", [](const std::vector<double>& v) {
            double s = 1.0;
            for (double x : v) s = std::min(s, x);
            return s;
          }};
}

DiscreteDdf apply_agg(const AggOp& alpha, const std::vector<const DiscreteDdf*>& fs) {
  return pointwise_combine(fs, alpha.f);
}

AggregateResult aggregate(const AggOp& alpha,
                          const std::vector<FiniteSetFunction>& gammas,
                          const DeltaOp& tau, const std::vector<DeltaOp>& taus,
                          double tol, double loc_tol) {
  if (gammas.empty() || gammas.size() != taus.size())
    throw BadDescriptor("aggregate needs one tau_i per gamma_i");
  for (std::size_t i = 1; i < gammas.size(); ++i)
    require_same_universe(gammas[0], gammas[i]);
  const std::uint32_t n = gammas[0].universe().subset_count();
  const std::size_t k = gammas.size();
  AggregateResult out{FiniteSetFunction(gammas[0].universe(),
                                        std::vector<DiscreteDdf>(n, epsilon(0.0))),
                      true, true, true, true, false, ""};
  for (std::size_t i = 0; i < k; ++i) {
    if (!classify(gammas[i], taus[i], tol, loc_tol).is_submeasure) {
      out.inputs_ok = false;
      out.note = "input " + std::to_string(i) + " is not a " + taus[i].name() +
                 "-submeasure";
    }
    if (count_delta_leq_violations(tau, taus[i], gammas[i].values(), tol, loc_tol) >
        0) {
      out.tau_below_ok = false;
      if (out.note.empty())
        out.note = tau.name() + " not below " + taus[i].name() + " on samples";
    }
  }
  const DiscreteDdf e0 = epsilon(0.0);
  {
    std::vector<const DiscreteDdf*> zeros(k, &e0);
    if (!ddf_eq(apply_agg(alpha, zeros), e0, tol, loc_tol)) out.boundary_ok = false;
  }
  for (std::uint32_t m = 0; m < n; ++m) {
    std::vector<const DiscreteDdf*> col;
    col.reserve(k);
    for (const auto& g : gammas) col.push_back(&g.at(m));
    out.gamma.set(m, apply_agg(alpha, col));
  }
  // alpha must dominate tau on the tuples the disjoint pairs induce:
  // alpha(tau(g1_E,g1_F),...) >= tau(alpha(column E), alpha(column F)).
  for (std::uint32_t e = 0; e < n && out.dominance_ok; ++e)
    for (std::uint32_t f = 0; f < n; ++f) {
      if (e & f) continue;
      std::vector<DiscreteDdf> taued;
      taued.reserve(k);
      for (const auto& g : gammas) taued.push_back(tau.apply(g.at(e), g.at(f)));
      std::vector<const DiscreteDdf*> ptrs;
      for (const auto& t : taued) ptrs.push_back(&t);
      const DiscreteDdf lhs = apply_agg(alpha, ptrs);
      const DiscreteDdf rhs = tau.apply(out.gamma.at(e), out.gamma.at(f));
      if (!ddf_leq(rhs, lhs, tol, loc_tol)) {
        out.dominance_ok = false;
        if (out.note.empty())
          out.note = alpha.name + " failed to dominate " + tau.name() + " at " +
                     gammas[0].universe().subset_name(e) + " vs " +
                     gammas[0].universe().subset_name(f);
        break;
      }
    }
  out.is_tau_submeasure = classify(out.gamma, tau, tol, loc_tol).is_submeasure;
  return out;
}

}  // namespace pmmeas
