#include "pmmeas/ppm.hpp"

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pmmeas/errors.hpp"

namespace pmmeas {

namespace {

constexpr int kMaxProductPoints = 4096;
constexpr int kMaxSubsetPoints = 64;

void require_index(int n, int p) {
  if (p < 0 || p >= n) throw BadDescriptor("point index out of range");
}

bool is_meet(const DeltaOp& theta) {
  return theta.kind() == DeltaOp::Kind::PiTop && theta.scalar().name() == "M";
}

int find_member(const std::vector<DistMatrix>& fam, const DistMatrix& m,
                double tol, double loc_tol) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (matrices_eq(fam[i], m, tol, loc_tol)) return static_cast<int>(i);
  return -1;
}

std::vector<const DiscreteDdf*> as_ptrs(const std::vector<DiscreteDdf>& fs) {
  std::vector<const DiscreteDdf*> out;
  out.reserve(fs.size());
  for (const DiscreteDdf& f : fs) out.push_back(&f);
  return out;
}

}  // namespace

DistMatrix::DistMatrix(int points) : n_(points) {
  if (points <= 0) throw BadDescriptor("a point set needs at least one point");
  cells_.assign(static_cast<std::size_t>(n_) * n_, epsilon(0.0));
}

const DiscreteDdf& DistMatrix::at(int p, int q) const {
  require_index(n_, p);
  require_index(n_, q);
  return cells_[static_cast<std::size_t>(p) * n_ + q];
}

void DistMatrix::set(int p, int q, DiscreteDdf value) {
  require_index(n_, p);
  require_index(n_, q);
  if (p == q) throw BadDescriptor("diagonal entries are fixed at epsilon(0)");
  cells_[static_cast<std::size_t>(p) * n_ + q] = value;
  cells_[static_cast<std::size_t>(q) * n_ + p] = std::move(value);
}

bool matrices_eq(const DistMatrix& a, const DistMatrix& b, double tol,
                 double loc_tol) {
  if (a.points() != b.points()) return false;
  for (int p = 0; p < a.points(); ++p)
    for (int q = p + 1; q < a.points(); ++q)
      if (!ddf_eq(a.at(p, q), b.at(p, q), tol, loc_tol)) return false;
  return true;
}

SpaceReport validate_space(const DistMatrix& d, const DeltaOp& tau, double tol,
                           double loc_tol, int exhaustive_cap, Rng* rng,
                           int sampled) {
  SpaceReport rep;
  const int n = d.points();
  for (int p = 0; p < n; ++p) {
    if (!d.at(p, p).is_epsilon_zero(tol)) {
      rep.diagonal_ok = false;
      rep.witness = "dist(p,p) != epsilon(0) at p=" + std::to_string(p);
      return rep;
    }
  }
  auto triple_ok = [&](int p, int q, int r) {
    ++rep.triples;
    const DiscreteDdf bound = tau.apply(d.at(p, q), d.at(q, r));
    if (ddf_leq(bound, d.at(p, r), tol, loc_tol)) return true;
    rep.triangle_ok = false;
    rep.witness = "triangle fails at (" + std::to_string(p) + "," +
                  std::to_string(q) + "," + std::to_string(r) + ")";
    return false;
  };
  if (n <= exhaustive_cap) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          if (!triple_ok(p, q, r)) return rep;
  } else {
    if (rng == nullptr)
      throw BadDescriptor("triangle sampling on a large space needs a generator");
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < sampled; ++i)
      if (!triple_ok(pick(*rng), pick(*rng), pick(*rng))) return rep;
  }
  return rep;
}

FinitePpMSpace from_submeasure(const FiniteSetFunction& gamma, const DeltaOp& tau,
                               double tol, double loc_tol) {
  const ClassifyReport cls = classify(gamma, tau, tol, loc_tol);
  const FiniteUniverse& u = gamma.universe();
  if (!cls.is_submeasure || !cls.is_antimonotone) {
    const PairWitness& w =
        !cls.is_submeasure ? cls.submeasure_w : cls.antimonotone_w;
    throw InputNotAntimonotoneSubmeasure(
        "not an antimonotone submeasure for " + tau.name() + "; witness (" +
        u.subset_name(w.e) + ", " + u.subset_name(w.f) + ")");
  }
  const std::uint32_t m = u.subset_count();
  if (m > static_cast<std::uint32_t>(kMaxSubsetPoints))
    throw BadDescriptor("the induced point set exceeds 64 points");
  FinitePpMSpace s{std::vector<std::string>{}, DistMatrix(static_cast<int>(m)),
                   tau};
  s.labels.reserve(m);
  for (std::uint32_t e = 0; e < m; ++e) s.labels.push_back(u.subset_name(e));
  for (std::uint32_t e = 0; e < m; ++e)
    for (std::uint32_t f = e + 1; f < m; ++f)
      s.dist.set(static_cast<int>(e), static_cast<int>(f), gamma.at(e ^ f));
  const SpaceReport rep =
      validate_space(s.dist, tau, tol, loc_tol, static_cast<int>(m));
  if (!rep.pass())
    throw InputNotAntimonotoneSubmeasure(
        "the induced distances break the pseudo-metric axioms: " + rep.witness);
  return s;
}

bool check_translation_invariance(const FiniteSetFunction& gamma, double tol,
                                  double loc_tol) {
  const std::uint32_t m = gamma.universe().subset_count();
  for (std::uint32_t e = 0; e < m; ++e)
    for (std::uint32_t f = 0; f < m; ++f)
      for (std::uint32_t g = 0; g < m; ++g)
        if (!ddf_eq(gamma.at(e ^ g), gamma.at((e ^ f) ^ (f ^ g)), tol, loc_tol))
          return false;
  return true;
}

DistMatrix combine_entrywise(const DeltaOp& theta, const DistMatrix& a,
                             const DistMatrix& b) {
  if (a.points() != b.points())
    throw PointSetMismatch("combining pseudo-metrics on different point sets");
  DistMatrix out(a.points());
  for (int p = 0; p < a.points(); ++p)
    for (int q = p + 1; q < a.points(); ++q)
      out.set(p, q, theta.apply(a.at(p, q), b.at(p, q)));
  return out;
}

DistMatrix oplus(const DeltaOp& theta, const DistMatrix& rho,
                 const DistMatrix& varrho, const DeltaOp& tau, Rng& rng,
                 int count, double tol, double loc_tol) {
  if (rho.points() != varrho.points())
    throw PointSetMismatch("combining pseudo-metrics on different point sets");
  const std::vector<DdfQuad> quads = random_quads(rng, count);
  const DeltaDominanceReport dom =
      check_dominance_delta(theta, tau, quads, tol, loc_tol);
  if (!dom.dominates)
    throw DominanceUnverified(theta.name() + " failed to dominate " + tau.name() +
                              " on " + std::to_string(dom.violations) + " of " +
                              std::to_string(dom.checked) +
                              " sampled quadruples");
  DistMatrix out = combine_entrywise(theta, rho, varrho);
  const SpaceReport rep =
      validate_space(out, tau, tol, loc_tol, kMaxSubsetPoints, &rng);
  if (!rep.pass())
    throw DominanceUnverified(
        "the combination is not a pseudo-metric; check the inputs: " +
        rep.witness);
  return out;
}

bool preceq(const DistMatrix& rho, const DistMatrix& varrho, double tol,
            double loc_tol) {
  if (rho.points() != varrho.points())
    throw PointSetMismatch("comparing pseudo-metrics on different point sets");
  for (int p = 0; p < rho.points(); ++p)
    for (int q = p + 1; q < rho.points(); ++q)
      if (!ddf_leq(varrho.at(p, q), rho.at(p, q), tol, loc_tol)) return false;
  return true;
}

std::vector<DistMatrix> close_under_min(std::vector<DistMatrix> family, int cap,
                                        double tol, double loc_tol) {
  if (family.empty()) return family;
  const int n = family.front().points();
  for (const DistMatrix& m : family)
    if (m.points() != n)
      throw PointSetMismatch("family members live on different point sets");
  std::vector<DistMatrix> out;
  for (DistMatrix& m : family)
    if (find_member(out, m, tol, loc_tol) < 0) out.push_back(std::move(m));
  const DeltaOp meet_op = DeltaOp::pi_top(ScalarOp::tnorm_m());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      DistMatrix mm = combine_entrywise(meet_op, out[i], out[j]);
      if (find_member(out, mm, tol, loc_tol) < 0) {
        if (static_cast<int>(out.size()) >= cap)
          throw BudgetExhausted("min-closure exceeds " + std::to_string(cap) +
                                " members");
        out.push_back(std::move(mm));
      }
    }
  }
  return out;
}

SemilatticeReport check_semilattice(const std::vector<DistMatrix>& family,
                                    const DeltaOp& theta, double tol,
                                    double loc_tol) {
  SemilatticeReport rep;
  rep.members = static_cast<int>(family.size());
  if (family.empty()) {
    rep.closed = false;
    rep.failed = "empty family";
    return rep;
  }
  const int n = family.front().points();
  for (const DistMatrix& m : family)
    if (m.points() != n)
      throw PointSetMismatch("family members live on different point sets");
  const DeltaOp meet_op = DeltaOp::pi_top(ScalarOp::tnorm_m());
  const int k = rep.members;

  auto note = [&rep](bool& flag, const std::string& what) {
    if (rep.failed.empty()) rep.failed = what;
    flag = false;
  };

  const DistMatrix nu(n);
  for (int i = 0; i < k && rep.neutral; ++i) {
    if (!matrices_eq(combine_entrywise(meet_op, nu, family[i]), family[i], tol,
                     loc_tol) ||
        !preceq(nu, family[i], tol, loc_tol))
      note(rep.neutral, "the constant epsilon(0) is not neutral for member " +
                            std::to_string(i));
  }

  std::vector<std::vector<int>> meet(k, std::vector<int>(k, -1));
  std::vector<std::vector<char>> le(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      le[i][j] = preceq(family[i], family[j], tol, loc_tol) ? 1 : 0;

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      const DistMatrix m = combine_entrywise(meet_op, family[i], family[j]);
      if (rep.commutative &&
          !matrices_eq(m, combine_entrywise(meet_op, family[j], family[i]), tol,
                       loc_tol))
        note(rep.commutative, "min-combination is not commutative at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ")");
      if (i == j && rep.idempotent && !matrices_eq(m, family[i], tol, loc_tol))
        note(rep.idempotent,
             "min-combination is not idempotent at member " + std::to_string(i));
      const int idx = find_member(family, m, tol, loc_tol);
      meet[i][j] = meet[j][i] = idx;
      if (idx < 0 && rep.closed)
        note(rep.closed, "min-combination of members " + std::to_string(i) +
                             " and " + std::to_string(j) + " left the family");
      // property (i) in both orders: the combination absorbs exactly when
      // the absorbed member comes later in the order
      const bool eq_j = matrices_eq(m, family[j], tol, loc_tol);
      const bool eq_i = matrices_eq(m, family[i], tol, loc_tol);
      if (rep.property_i && (le[i][j] != eq_j || le[j][i] != eq_i))
        note(rep.property_i, "property (i) fails for members (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ")");
    }
  }

  const bool fast = is_meet(theta) && rep.closed;
  if (fast) {
    for (int s = 0; s < k && rep.property_ii; ++s)
      for (int r = 0; r < k && rep.property_ii; ++r)
        for (int q = 0; q < k; ++q) {
          const int lhs = meet[meet[s][r]][meet[s][q]];
          const int rhs = meet[s][meet[r][q]];
          if (lhs < 0 || rhs < 0 || !le[lhs][rhs]) {
            note(rep.property_ii, "property (ii) fails at triple (" +
                                      std::to_string(s) + "," +
                                      std::to_string(r) + "," +
                                      std::to_string(q) + ")");
            break;
          }
        }
  } else {
    for (int s = 0; s < k && rep.property_ii; ++s) {
      std::vector<DistMatrix> sc;
      sc.reserve(k);
      for (int r = 0; r < k; ++r)
        sc.push_back(combine_entrywise(theta, family[s], family[r]));
      for (int r = 0; r < k && rep.property_ii; ++r)
        for (int q = 0; q < k; ++q) {
          const DistMatrix lhs = combine_entrywise(meet_op, sc[r], sc[q]);
          const DistMatrix rhs = combine_entrywise(
              theta, family[s],
              combine_entrywise(meet_op, family[r], family[q]));
          if (!preceq(lhs, rhs, tol, loc_tol)) {
            note(rep.property_ii, "property (ii) fails at triple (" +
                                      std::to_string(s) + "," +
                                      std::to_string(r) + "," +
                                      std::to_string(q) + ")");
            break;
          }
        }
    }
  }
  return rep;
}

AggDominanceReport sampled_agg_dominance(const AggOp& alpha, const DeltaOp& tau,
                                         int arity, Rng& rng, int count,
                                         const DdfGenOptions& opt, double tol,
                                         double loc_tol) {
  if (arity <= 0) throw BadDescriptor("aggregation arity must be positive");
  AggDominanceReport rep;
  for (int it = 0; it < count; ++it) {
    const std::vector<DiscreteDdf> gs = random_ddfs(rng, arity, opt);
    const std::vector<DiscreteDdf> hs = random_ddfs(rng, arity, opt);
    std::vector<DiscreteDdf> taus;
    taus.reserve(arity);
    for (int i = 0; i < arity; ++i) taus.push_back(tau.apply(gs[i], hs[i]));
    const DiscreteDdf lhs = apply_agg(alpha, as_ptrs(taus));
    const DiscreteDdf rhs =
        tau.apply(apply_agg(alpha, as_ptrs(gs)), apply_agg(alpha, as_ptrs(hs)));
    ++rep.checked;
    if (!ddf_leq(rhs, lhs, tol, loc_tol)) {
      ++rep.violations;
      rep.dominates = false;
    }
  }
  return rep;
}

FinitePpMSpace product_space(const std::vector<const FinitePpMSpace*>& spaces,
                             const AggOp& alpha, const DeltaOp& tau, Rng& rng,
                             double tol, double loc_tol, int exhaustive_cap,
                             int sampled) {
  if (spaces.empty()) throw BadDescriptor("a product needs at least one factor");
  const int arity = static_cast<int>(spaces.size());
  const std::vector<DiscreteDdf> probes = random_ddfs(rng, 10);
  for (const FinitePpMSpace* s : spaces) {
    if (s == nullptr) throw BadDescriptor("null factor");
    if (count_delta_leq_violations(tau, s->tau, probes, tol, loc_tol) != 0)
      throw DominanceUnverified("the product op " + tau.name() +
                                " is not below the factor op " +
                                s->tau.name() + " on the sampled pairs");
  }
  const AggDominanceReport dom =
      sampled_agg_dominance(alpha, tau, arity, rng, 200, {}, tol, loc_tol);
  if (!dom.dominates)
    throw DominanceUnverified(alpha.name + " failed to dominate " + tau.name() +
                              " on " + std::to_string(dom.violations) + " of " +
                              std::to_string(dom.checked) + " sampled tuples");

  long long total = 1;
  for (const FinitePpMSpace* s : spaces) {
    total *= s->dist.points();
    if (total > kMaxProductPoints)
      throw ProductTooLarge("product has more than " +
                            std::to_string(kMaxProductPoints) + " points");
  }
  const int n = static_cast<int>(total);
  std::vector<std::vector<int>> coord(n, std::vector<int>(arity));
  for (int idx = 0; idx < n; ++idx) {
    int rest = idx;
    for (int a = arity - 1; a >= 0; --a) {
      const int sz = spaces[a]->dist.points();
      coord[idx][a] = rest % sz;
      rest /= sz;
    }
  }
  FinitePpMSpace out{std::vector<std::string>{}, DistMatrix(n), tau};
  out.labels.reserve(n);
  for (int idx = 0; idx < n; ++idx) {
    std::string label;
    for (int a = 0; a < arity; ++a) {
      if (a > 0) label += "|";
      label += spaces[a]->labels[coord[idx][a]];
    }
    out.labels.push_back(std::move(label));
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      std::vector<const DiscreteDdf*> comps;
      comps.reserve(arity);
      for (int a = 0; a < arity; ++a)
        comps.push_back(&spaces[a]->dist.at(coord[p][a], coord[q][a]));
      out.dist.set(p, q, apply_agg(alpha, comps));
    }
  const SpaceReport rep = validate_space(out.dist, tau, tol, loc_tol,
                                         exhaustive_cap, &rng, sampled);
  if (!rep.pass())
    throw DominanceUnverified("the product failed its verification scan: " +
                              rep.witness);
  return out;
}

FinitePpMSpace random_dirac_metric_space(Rng& rng, int points, double w_lo,
                                         double w_hi) {
  if (points <= 0) throw BadDescriptor("a point set needs at least one point");
  if (!(w_lo > 0.0) || !(w_hi >= w_lo))
    throw BadDescriptor("edge weights need 0 < w_lo <= w_hi");
  std::uniform_real_distribution<double> w(w_lo, w_hi);
  std::vector<std::vector<double>> d(points, std::vector<double>(points, 0.0));
  for (int p = 0; p < points; ++p)
    for (int q = p + 1; q < points; ++q) d[p][q] = d[q][p] = w(rng);
  for (int k = 0; k < points; ++k)
    for (int i = 0; i < points; ++i)
      for (int j = 0; j < points; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  FinitePpMSpace s{std::vector<std::string>{}, DistMatrix(points),
                   DeltaOp::tau_t(ScalarOp::tnorm_m())};
  s.labels.reserve(points);
  for (int p = 0; p < points; ++p) s.labels.push_back("p" + std::to_string(p));
  for (int p = 0; p < points; ++p)
    for (int q = p + 1; q < points; ++q) s.dist.set(p, q, epsilon(d[p][q]));
  return s;
}

}  // namespace pmmeas
