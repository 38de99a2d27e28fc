#include "pmmeas/delta_ops.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pmmeas/errors.hpp"

namespace pmmeas {

namespace {

// Augmented atom grid: location 0 prepended, values are right limits
// (cumulative mass including the atom at the location itself).
struct AugGrid {
  std::vector<double> loc;  // 0 = loc[0] < loc[1] < ...
  std::vector<double> cum;  // cum[k] = F(loc[k]+)
};

AugGrid augment(const DiscreteDdf& f) {
  AugGrid a;
  a.loc.push_back(0.0);
  a.cum.push_back(f.eval_plus(0.0));
  for (const auto& at : f.atoms()) {
    if (at.loc == 0.0) continue;  // already folded into the 0 entry
    a.loc.push_back(at.loc);
    a.cum.push_back(f.eval_plus(at.loc));
  }
  return a;
}

bool zero_one_valued(const DiscreteDdf& f, double tol) {
  double run = 0.0;
  for (const auto& at : f.atoms()) {
    run += at.mass;
    if (run > tol && std::fabs(run - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace

DeltaOp DeltaOp::tau_t(ScalarOp t) {
  DeltaOp op;
  op.kind_ = Kind::TauT;
  op.name_ = "tau_T(" + t.name() + ")";
  op.scalar_ = std::move(t);
  op.l_ = LOp::k_one();
  return op;
}

DeltaOp DeltaOp::tau_la(LOp l, ScalarOp a) {
  DeltaOp op;
  op.kind_ = Kind::TauLA;
  op.name_ = "tau_LA(" + l.name() + "," + a.name() + ")";
  op.scalar_ = std::move(a);
  op.l_ = std::move(l);
  return op;
}

DeltaOp DeltaOp::pi_top(ScalarOp top) {
  DeltaOp op;
  op.kind_ = Kind::PiTop;
  op.name_ = "pi_top(" + top.name() + ")";
  op.scalar_ = std::move(top);
  op.l_ = LOp::k_inf();
  return op;
}

DeltaOp DeltaOp::rho_lq(LOp l, ScalarOp q) {
  DeltaOp op;
  op.kind_ = Kind::RhoLQ;
  op.name_ = "rho_LQ(" + l.name() + "," + q.name() + ")";
  op.dual_ = ScalarOp::dual(q);
  op.scalar_ = std::move(q);
  op.l_ = std::move(l);
  return op;
}

DeltaOp DeltaOp::convolution() { return DeltaOp(); }

namespace {

DiscreteDdf corner_sup(const LOp& l, const ScalarOp& a, const DiscreteDdf& g,
                       const DiscreteDdf& h) {
  if (!a.left_continuous() &&
      !(zero_one_valued(g, kDefaultTol) && zero_one_valued(h, kDefaultTol))) {
    throw NonLeftContinuousScalar(a.name() + " has no exact sup path on general inputs");
  }
  AugGrid ag = augment(g);
  AugGrid ah = augment(h);
  // Candidate jump locations with the sup value attained just above them.
  std::vector<std::pair<double, double>> cand;  // (location, value)
  cand.reserve(ag.loc.size() * ah.loc.size());
  for (std::size_t i = 0; i < ag.loc.size(); ++i)
    for (std::size_t j = 0; j < ah.loc.size(); ++j)
      cand.emplace_back(l(ag.loc[i], ah.loc[j]), a(ag.cum[i], ah.cum[j]));
  std::sort(cand.begin(), cand.end());
  std::vector<DiscreteDdf::Atom> atoms;
  double run = 0.0;
  for (const auto& [loc, val] : cand) {
    if (val > run) {
      atoms.push_back({loc, val - run});
      run = val;
    }
  }
  return make_ddf(std::move(atoms), 1.0 - run);
}

// Constant pieces of a step CDF: piece k covers (loc[k], loc[k+1]] at level
// cum[k], with loc.back() opening the unbounded piece.
struct PieceSet {
  std::vector<double> loc;
  std::vector<double> cum;
};

PieceSet pieces(const DiscreteDdf& f) {
  AugGrid a = augment(f);
  return {std::move(a.loc), std::move(a.cum)};
}

// Exact inf of Qd(G(u), H(v)) over the curve L(u, v) = x.  The curve meets
// the interior of piece pair (k, l) iff L(loc_g[k], loc_h[l]) < x and
// L(loc_g[k+1], loc_h[l+1]) >= x (one-past-the-end location is +inf, where L
// is absorbing).  The endpoints (0, x) and (x, 0) are always on the curve.
double exact_inf_at(const LOp& l, const ScalarOp& qd, const PieceSet& pg,
                    const PieceSet& ph, const DiscreteDdf& g,
                    const DiscreteDdf& h, double x) {
  double best = std::min(qd(0.0, h.eval(x)), qd(g.eval(x), 0.0));
  const std::size_t m = pg.loc.size(), n = ph.loc.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (l(pg.loc[k], ph.loc[0]) >= x) break;  // larger k only grows L
    for (std::size_t j = 0; j < n; ++j) {
      if (l(pg.loc[k], ph.loc[j]) >= x) break;
      const bool last = (k + 1 == m) || (j + 1 == n);
      if (last || l(pg.loc[k + 1], ph.loc[j + 1]) >= x)
        best = std::min(best, qd(pg.cum[k], ph.cum[j]));
    }
  }
  return best;
}

DiscreteDdf exact_inf(const LOp& l, const ScalarOp& qd, const DiscreteDdf& g,
                      const DiscreteDdf& h) {
  PieceSet pg = pieces(g);
  PieceSet ph = pieces(h);
  // The inf is constant between consecutive values of L over the boundary
  // grid, so one midpoint evaluation per gap determines the whole function.
  std::vector<double> bounds;
  bounds.reserve(pg.loc.size() * ph.loc.size());
  for (double u : pg.loc)
    for (double v : ph.loc) bounds.push_back(l(u, v));
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  std::vector<DiscreteDdf::Atom> atoms;
  double run = 0.0;
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    const double next = (j + 1 < bounds.size()) ? bounds[j + 1] : bounds[j] + 2.0;
    const double level =
        exact_inf_at(l, qd, pg, ph, g, h, 0.5 * (bounds[j] + next));
    if (level > run) {
      atoms.push_back({bounds[j], level - run});
      run = level;
    } else if (level < run - kDefaultTol) {
      throw BadDescriptor(qd.name() +
                          " is not monotone; rho needs a 1-Lipschitz Q");
    }
  }
  return make_ddf(std::move(atoms), 1.0 - run);
}

DiscreteDdf convolve(const DiscreteDdf& g, const DiscreteDdf& h) {
  std::vector<DiscreteDdf::Atom> atoms;
  atoms.reserve(g.atoms().size() * h.atoms().size());
  for (const auto& ga : g.atoms())
    for (const auto& ha : h.atoms())
      atoms.push_back({ga.loc + ha.loc, ga.mass * ha.mass});
  const double inf = 1.0 - (1.0 - g.inf_mass()) * (1.0 - h.inf_mass());
  return make_ddf(std::move(atoms), inf);
}

}  // namespace

DiscreteDdf DeltaOp::apply(const DiscreteDdf& g, const DiscreteDdf& h) const {
  switch (kind_) {
    case Kind::TauT:
    case Kind::TauLA:
      return corner_sup(l_, scalar_, g, h);
    case Kind::PiTop: {
      const ScalarOp& top = scalar_;
      return pointwise_combine({&g, &h}, [&top](const std::vector<double>& v) {
        return top(v[0], v[1]);
      });
    }
    case Kind::RhoLQ:
      return exact_inf(l_, dual_, g, h);
    case Kind::Convolution:
      return convolve(g, h);
  }
  throw BadDescriptor("unknown delta op kind");
}

double DeltaOp::oracle_eval(const DiscreteDdf& g, const DiscreteDdf& h, double x,
                            double step) const {
  if (!(step > 0.0) || !std::isfinite(step)) throw BadGrid("oracle step must be positive");
  if (kind_ == Kind::Convolution)
    throw BadDescriptor("convolution has no sup/inf oracle");
  if (!(x > 0.0)) return 0.0;
  const std::size_t n = static_cast<std::size_t>(std::floor(x / step + 1e-9));
  if (kind_ == Kind::PiTop) return scalar_(g.eval(x), h.eval(x));
  if (sup_kind()) {
    // sup over the grid points inside {L < x}; v*(u) is non-increasing in u.
    double best = 0.0;
    std::size_t vi = n;
    for (std::size_t ui = 0; ui <= n; ++ui) {
      const double u = ui * step;
      if (l_(u, 0.0) >= x) break;
      while (vi > 0 && l_(u, vi * step) >= x) --vi;
      if (l_(u, vi * step) >= x) break;
      best = std::max(best, scalar_(g.eval(u), h.eval(vi * step)));
    }
    return best;
  }
  // inf over grid points bracketing the curve {L = x}.  For each u take the
  // smallest grid v at or past the curve and its predecessor, so flat curve
  // segments are probed at their low end.  u = x is sampled exactly to keep
  // the (x, 0) endpoint.
  double best = std::min(dual_(0.0, h.eval(x)), dual_(g.eval(x), 0.0));
  std::size_t vlo = n + 1;
  for (std::size_t ui = 0; ui <= n; ++ui) {
    const double u = ui * step;
    while (vlo > 0 && l_(u, (vlo - 1) * step) >= x) --vlo;
    const double va = std::min(vlo * step, x);
    best = std::min(best, dual_(g.eval(u), h.eval(va)));
    if (vlo > 0) best = std::min(best, dual_(g.eval(u), h.eval((vlo - 1) * step)));
  }
  return best;
}

DiscreteDdf DeltaOp::oracle_step_function(const DiscreteDdf& g,
                                          const DiscreteDdf& h, double x_max,
                                          double eval_step,
                                          double grid_step) const {
  if (!(eval_step > 0.0) || !(x_max > 0.0)) throw BadGrid("bad oracle range");
  std::vector<DiscreteDdf::Atom> atoms;
  double run = 0.0;
  for (double x = eval_step; x <= x_max + 1e-12; x += eval_step) {
    const double v = std::min(1.0, std::max(run, oracle_eval(g, h, x, grid_step)));
    if (v > run) {
      atoms.push_back({x - eval_step, v - run});
      run = v;
    }
  }
  return make_ddf(std::move(atoms), 1.0 - run);
}

TriangleAxiomReport check_triangle_axioms(const DeltaOp& op,
                                          const std::vector<DiscreteDdf>& samples,
                                          double tol, double loc_tol) {
  TriangleAxiomReport rep;
  const std::size_t n = samples.size();
  const DiscreteDdf e0 = epsilon(0.0);
  auto note = [&rep](bool& flag, const std::string& what) {
    if (rep.failed.empty()) rep.failed = what;
    flag = false;
  };
  for (std::size_t i = 0; i < n && rep.neutral; ++i) {
    if (!ddf_eq(op.apply(e0, samples[i]), samples[i], tol, loc_tol) ||
        !ddf_eq(op.apply(samples[i], e0), samples[i], tol, loc_tol))
      note(rep.neutral, "epsilon(0) not neutral at sample " + std::to_string(i));
  }
  std::vector<std::vector<DiscreteDdf>> pair_val(n, std::vector<DiscreteDdf>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pair_val[i][j] = op.apply(samples[i], samples[j]);
  for (std::size_t i = 0; i < n && rep.commutative; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!ddf_eq(pair_val[i][j], pair_val[j][i], tol, loc_tol)) {
        note(rep.commutative, "commutativity fails at pair (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
        break;
      }
  for (std::size_t i = 0; i < n && rep.associative; ++i)
    for (std::size_t j = 0; j < n && rep.associative; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!ddf_eq(op.apply(pair_val[i][j], samples[k]),
                    op.apply(samples[i], pair_val[j][k]), tol, loc_tol)) {
          note(rep.associative, "associativity fails at triple (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) +
                                    ")");
          break;
        }
      }
  const std::size_t probes = std::min<std::size_t>(n, 6);
  for (std::size_t i = 0; i < n && rep.monotone; ++i)
    for (std::size_t j = 0; j < n && rep.monotone; ++j) {
      if (i != j && ddf_leq(samples[i], samples[j], tol, loc_tol)) {
        for (std::size_t k = 0; k < probes; ++k)
          if (!ddf_leq(pair_val[i][k], pair_val[j][k], tol, loc_tol)) {
            note(rep.monotone, "monotonicity fails lifting sample " +
                                   std::to_string(i) + " <= " + std::to_string(j));
            break;
          }
      }
      if (i < j && rep.monotone) {
        const DiscreteDdf lo = pointwise_min(samples[i], samples[j]);
        for (std::size_t k = 0; k < probes; ++k)
          if (!ddf_leq(op.apply(lo, samples[k]), op.apply(samples[i], samples[k]), tol,
                       loc_tol)) {
            note(rep.monotone, "monotonicity fails under pointwise-min lowering of sample " +
                                   std::to_string(i));
            break;
          }
      }
    }
  return rep;
}

DeltaDominanceReport check_dominance_delta(const DeltaOp& theta, const DeltaOp& tau,
                                           const std::vector<DdfQuad>& quads,
                                           double tol, double loc_tol) {
  DeltaDominanceReport rep;
  for (std::size_t q = 0; q < quads.size(); ++q) {
    const auto& [g1, h1, g2, h2] = quads[q];
    const DiscreteDdf lhs = theta.apply(tau.apply(g1, h1), tau.apply(g2, h2));
    const DiscreteDdf rhs = tau.apply(theta.apply(g1, g2), theta.apply(h1, h2));
    ++rep.checked;
    if (!ddf_leq(rhs, lhs, tol, loc_tol)) {
      ++rep.violations;
      rep.dominates = false;
      if (rep.first_witness < 0) rep.first_witness = static_cast<int>(q);
      rep.worst_gap = std::max(rep.worst_gap, ddf_gap(rhs, lhs, loc_tol));
    }
  }
  return rep;
}

DistributivityReport check_distributive(const DeltaOp& op, const std::vector<double>& cs,
                                        const std::vector<DiscreteDdf>& samples,
                                        double tol, double loc_tol) {
  DistributivityReport rep;
  for (double c : cs)
    for (std::size_t i = 0; i < samples.size(); ++i)
      for (std::size_t j = i; j < samples.size(); ++j) {
        const DiscreteDdf lhs = scalar_multiply(c, op.apply(samples[i], samples[j]));
        const DiscreteDdf rhs =
            op.apply(scalar_multiply(c, samples[i]), scalar_multiply(c, samples[j]));
        ++rep.checked;
        if (!ddf_eq(lhs, rhs, tol, loc_tol)) {
          ++rep.violations;
          if (rep.distributive) rep.worst_c = c;
          rep.distributive = false;
        }
      }
  return rep;
}

int count_delta_leq_violations(const DeltaOp& op1, const DeltaOp& op2,
                               const std::vector<DiscreteDdf>& samples, double tol,
                               double loc_tol) {
  int bad = 0;
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i; j < samples.size(); ++j)
      if (!ddf_leq(op1.apply(samples[i], samples[j]),
                   op2.apply(samples[i], samples[j]), tol, loc_tol))
        ++bad;
  return bad;
}

}  // namespace pmmeas
