#include "pmmeas/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pmmeas/errors.hpp"

namespace pmmeas {

namespace {

constexpr int kMaxContextPoints = 16;
constexpr int kMaxScanPoints = 10;

void require_subset(const HausdorffContext& ctx, std::uint32_t e) {
  if ((e & ~ctx.full_mask()) != 0)
    throw BadDescriptor("subset mask outside the point set");
}

std::vector<int> bits(std::uint32_t mask) {
  std::vector<int> out;
  for (int p = 0; mask != 0; ++p, mask >>= 1)
    if (mask & 1u) out.push_back(p);
  return out;
}

double vec_min(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

double vec_max(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end());
}

// inf_{p in e} sup_{q in f} of the CDFs, as a step function
DiscreteDdf directed(const HausdorffContext& ctx, std::uint32_t e,
                     std::uint32_t f) {
  if (e == 0) return epsilon(0.0);
  if (f == 0) return DiscreteDdf();  // sup over {} = 0: all mass at +inf
  const DistMatrix& d = ctx.space().dist;
  std::vector<DiscreteDdf> sups;
  for (int p : bits(e)) {
    std::vector<const DiscreteDdf*> row;
    for (int q : bits(f)) row.push_back(&d.at(p, q));
    sups.push_back(pointwise_combine(row, vec_max));
  }
  std::vector<const DiscreteDdf*> ptrs;
  ptrs.reserve(sups.size());
  for (const DiscreteDdf& s : sups) ptrs.push_back(&s);
  return pointwise_combine(ptrs, vec_min);
}

DiscreteDdf hausdorff_raw(const HausdorffContext& ctx, std::uint32_t e,
                          std::uint32_t f) {
  return pointwise_min(directed(ctx, e, f), directed(ctx, f, e));
}

// the same quantity as a single CDF evaluation at s
double directed_at(const HausdorffContext& ctx, std::uint32_t e,
                   std::uint32_t f, double s) {
  if (e == 0) return 1.0;
  const DistMatrix& d = ctx.space().dist;
  double inf = 1.0;
  for (int p : bits(e)) {
    double sup = 0.0;
    for (int q : bits(f)) sup = std::max(sup, d.at(p, q).eval(s));
    inf = std::min(inf, sup);
  }
  return inf;
}

double diameter_at(const HausdorffContext& ctx, std::uint32_t e, double s) {
  const DistMatrix& d = ctx.space().dist;
  const std::vector<int> ps = bits(e);
  double inf = 1.0;
  for (int p : ps)
    for (int q : ps) inf = std::min(inf, d.at(p, q).eval(s));
  return inf;
}

template <typename Fn>
double sup_before(Fn&& fn, double t, double step) {
  if (step <= 0.0) throw BadGrid("oracle step must be positive");
  double best = 0.0;
  for (long long k = 0; static_cast<double>(k) * step < t; ++k)
    best = std::max(best, fn(static_cast<double>(k) * step));
  return best;
}

std::vector<DiscreteDdf> lambda_table(const HausdorffContext& ctx) {
  const std::uint32_t full = ctx.full_mask();
  std::vector<DiscreteDdf> out;
  out.reserve(full + 1);
  for (std::uint32_t e = 0; e <= full; ++e)
    out.push_back(hausdorff_raw(ctx, full & ~e, full));
  return out;
}

}  // namespace

HausdorffContext::HausdorffContext(FinitePpMSpace space)
    : space_(std::move(space)) {
  if (space_.dist.points() > kMaxContextPoints)
    throw BadDescriptor("subset scans are capped at 16 points");
}

bool is_separated(const HausdorffContext& ctx, double tol) {
  const DistMatrix& d = ctx.space().dist;
  for (int p = 0; p < d.points(); ++p)
    for (int q = p + 1; q < d.points(); ++q)
      if (d.at(p, q).is_epsilon_zero(tol)) return false;
  return true;
}

DiscreteDdf prob_diameter(const HausdorffContext& ctx, std::uint32_t e) {
  require_subset(ctx, e);
  if (e == 0) throw EmptySet("the probabilistic diameter needs a non-empty set");
  const DistMatrix& d = ctx.space().dist;
  const std::vector<int> ps = bits(e);
  std::vector<const DiscreteDdf*> pairs;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      pairs.push_back(&d.at(ps[i], ps[j]));
  if (pairs.empty()) return epsilon(0.0);
  return pointwise_combine(pairs, vec_min);
}

bool is_prob_bounded(const HausdorffContext& ctx, std::uint32_t e, double tol) {
  require_subset(ctx, e);
  if (e == 0) return true;
  return prob_diameter(ctx, e).inf_mass() <= tol;
}

DiscreteDdf prob_distance(const HausdorffContext& ctx, std::uint32_t e,
                          std::uint32_t f) {
  require_subset(ctx, e);
  require_subset(ctx, f);
  return directed(ctx, e, f);
}

DiscreteDdf hausdorff_distance(const HausdorffContext& ctx, std::uint32_t e,
                               std::uint32_t f, double tol) {
  require_subset(ctx, e);
  require_subset(ctx, f);
  if (!is_prob_bounded(ctx, e, tol) || !is_prob_bounded(ctx, f, tol))
    throw NotProbBounded("both sets must have finite-mass diameters");
  return hausdorff_raw(ctx, e, f);
}

DiscreteDdf lambda_H(const HausdorffContext& ctx, std::uint32_t e) {
  require_subset(ctx, e);
  return hausdorff_raw(ctx, ctx.full_mask() & ~e, ctx.full_mask());
}

LambdaReport check_lambda_theorem(const HausdorffContext& ctx, double tol,
                                  double loc_tol) {
  LambdaReport rep;
  const SpaceReport space_rep =
      validate_space(ctx.space().dist, ctx.space().tau, tol, loc_tol,
                     ctx.points());
  if (!space_rep.pass()) {
    rep.precondition_met = false;
    rep.note = "PRECONDITION_UNMET: " + space_rep.witness;
    return rep;
  }
  const std::vector<DiscreteDdf> lam = lambda_table(ctx);
  const std::uint32_t full = ctx.full_mask();
  rep.empty_is_eps0 = lam[0].is_epsilon_zero(tol);
  for (std::uint32_t f = 0; f <= full && rep.antimonotone; ++f) {
    for (std::uint32_t e = f;; e = (e - 1) & f) {
      ++rep.subset_pairs;
      if (!ddf_leq(lam[f], lam[e], tol, loc_tol)) {
        rep.antimonotone = false;
        rep.note = "antimonotonicity fails at a subset pair";
        break;
      }
      if (e == 0) break;
    }
  }
  for (std::uint32_t e = 0; e <= full && rep.union_bound; ++e)
    for (std::uint32_t f = 0; f <= full; ++f) {
      ++rep.all_pairs;
      if (!ddf_leq(lam[e | f], pointwise_min(lam[e], lam[f]), tol, loc_tol)) {
        rep.union_bound = false;
        rep.note = "the union upper bound fails at a pair";
        break;
      }
    }
  return rep;
}

MeasurableReport enumerate_measurable(const HausdorffContext& ctx,
                                      const DeltaOp& tau, double tol,
                                      double loc_tol) {
  if (ctx.points() > kMaxScanPoints)
    throw BadDescriptor("the measurability scan is capped at 10 points");
  MeasurableReport rep;
  const std::uint32_t full = ctx.full_mask();
  const std::vector<DiscreteDdf> lam = lambda_table(ctx);
  std::vector<char> member(full + 1, 0);
  for (std::uint32_t e = 0; e <= full; ++e) {
    ++rep.candidates;
    bool ok = true;
    for (std::uint32_t g = 0; g <= full && ok; ++g)
      ok = ddf_eq(lam[g], tau.apply(lam[g & e], lam[g & ~e & full]), tol,
                  loc_tol);
    if (ok) {
      member[e] = 1;
      rep.members.push_back(e);
    }
  }
  rep.has_empty = member[0] != 0;
  rep.has_full = member[full] != 0;
  for (std::uint32_t e : rep.members) {
    if (!member[full & ~e]) rep.complement_closed = false;
    for (std::uint32_t f : rep.members)
      if (!member[e | f]) rep.union_closed = false;
  }
  return rep;
}

RestrictionReport check_restriction_measure(const HausdorffContext& ctx,
                                            const DeltaOp& tau, double tol,
                                            double loc_tol) {
  RestrictionReport rep;
  const MeasurableReport m = enumerate_measurable(ctx, tau, tol, loc_tol);
  rep.members = m.members;
  rep.algebra_ok = m.pass();
  if (!rep.algebra_ok) {
    rep.note = "the measurable class is not an algebra; restriction skipped";
    return rep;
  }
  const std::vector<DiscreteDdf> lam = lambda_table(ctx);
  for (std::size_t i = 0; i < rep.members.size(); ++i)
    for (std::size_t j = i; j < rep.members.size(); ++j) {
      const std::uint32_t e = rep.members[i], f = rep.members[j];
      if ((e & f) != 0) continue;
      ++rep.disjoint_pairs;
      if (!ddf_eq(lam[e | f], tau.apply(lam[e], lam[f]), tol, loc_tol)) {
        rep.additive_ok = false;
        rep.note = "decomposition fails on a disjoint member pair";
      }
    }
  // atoms: minimal non-empty members; in an algebra they partition the
  // points and index the restriction as a plain universe
  std::vector<std::uint32_t> atoms;
  for (std::uint32_t a : rep.members) {
    if (a == 0) continue;
    bool minimal = true;
    for (std::uint32_t b : rep.members)
      if (b != 0 && b != a && (b & a) == b) minimal = false;
    if (minimal) atoms.push_back(a);
  }
  rep.atoms = static_cast<int>(atoms.size());
  std::uint32_t covered = 0;
  for (std::uint32_t a : atoms) {
    if ((covered & a) != 0) {
      rep.algebra_ok = false;
      rep.note = "atoms overlap; the member list is inconsistent";
      return rep;
    }
    covered |= a;
  }
  if (covered != ctx.full_mask()) {
    rep.algebra_ok = false;
    rep.note = "atoms do not cover the point set";
    return rep;
  }
  const FiniteUniverse u(rep.atoms);
  std::vector<DiscreteDdf> values;
  values.reserve(1u << rep.atoms);
  for (std::uint32_t s = 0; s < (1u << rep.atoms); ++s) {
    std::uint32_t pm = 0;
    for (int i = 0; i < rep.atoms; ++i)
      if (s & (1u << i)) pm |= atoms[i];
    values.push_back(lam[pm]);
  }
  const ClassifyReport cls =
      classify(FiniteSetFunction(u, std::move(values)), tau, tol, loc_tol);
  rep.classify_is_measure = cls.is_measure;
  if (!cls.is_measure && rep.note.empty())
    rep.note = "the restriction does not classify as a measure";
  return rep;
}

double diameter_oracle(const HausdorffContext& ctx, std::uint32_t e, double t,
                       double step) {
  require_subset(ctx, e);
  if (e == 0) throw EmptySet("the probabilistic diameter needs a non-empty set");
  return sup_before([&](double s) { return diameter_at(ctx, e, s); }, t, step);
}

double distance_oracle(const HausdorffContext& ctx, std::uint32_t e,
                       std::uint32_t f, double t, double step) {
  require_subset(ctx, e);
  require_subset(ctx, f);
  return sup_before([&](double s) { return directed_at(ctx, e, f, s); }, t,
                    step);
}

double hausdorff_oracle(const HausdorffContext& ctx, std::uint32_t e,
                        std::uint32_t f, double t, double step) {
  require_subset(ctx, e);
  require_subset(ctx, f);
  return sup_before(
      [&](double s) {
        return std::min(directed_at(ctx, e, f, s), directed_at(ctx, f, e, s));
      },
      t, step);
}

}  // namespace pmmeas
