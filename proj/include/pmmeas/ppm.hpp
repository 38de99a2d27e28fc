#ifndef PMMEAS_PPM_HPP
#define PMMEAS_PPM_HPP

#include <string>
#include <vector>

#include "pmmeas/generators.hpp"
#include "pmmeas/measures.hpp"

namespace pmmeas {

// Symmetric matrix of distribution functions with an exact epsilon(0)
// diagonal: the value object for pseudo-metrics on a finite point set.
class DistMatrix {
 public:
  explicit DistMatrix(int points);  // constant epsilon(0), the bottom element
  int points() const { return n_; }
  const DiscreteDdf& at(int p, int q) const;
  void set(int p, int q, DiscreteDdf value);  // p != q; writes both triangles

 private:
  int n_ = 0;
  std::vector<DiscreteDdf> cells_;
};

bool matrices_eq(const DistMatrix& a, const DistMatrix& b, double tol = kDefaultTol,
                 double loc_tol = kDefaultTol);

struct FinitePpMSpace {
  std::vector<std::string> labels;
  DistMatrix dist;
  DeltaOp tau;
};

struct SpaceReport {
  bool diagonal_ok = true;
  bool triangle_ok = true;
  int triples = 0;
  std::string witness;
  bool pass() const { return diagonal_ok && triangle_ok; }
};

// Diagonal and triangle scan: dist(p,r) >= tau(dist(p,q), dist(q,r)).
// Exhaustive up to exhaustive_cap points; beyond that `sampled` random
// triples drawn from rng (required then).
SpaceReport validate_space(const DistMatrix& d, const DeltaOp& tau,
                           double tol = kDefaultTol, double loc_tol = kDefaultTol,
                           int exhaustive_cap = 64, Rng* rng = nullptr,
                           int sampled = 2000);

// rho_{E,F} := gamma(E xor F) over all subsets as points.  Requires gamma to
// be an antimonotone tau-submeasure (InputNotAntimonotoneSubmeasure); the
// resulting space is verified exhaustively before being returned.
FinitePpMSpace from_submeasure(const FiniteSetFunction& gamma, const DeltaOp& tau,
                               double tol = kDefaultTol,
                               double loc_tol = kDefaultTol);

// rho(E,G) = rho(E xor F, F xor G) for the subset-indexed pseudo-metric.
bool check_translation_invariance(const FiniteSetFunction& gamma,
                                  double tol = kDefaultTol,
                                  double loc_tol = kDefaultTol);

// Entrywise theta with no premise checking (building block).
DistMatrix combine_entrywise(const DeltaOp& theta, const DistMatrix& a,
                             const DistMatrix& b);

// The monotone combination: checks theta >> tau on `count` random quadruples
// (DominanceUnverified when violated), combines entrywise, and re-validates
// the result against tau.
DistMatrix oplus(const DeltaOp& theta, const DistMatrix& rho,
                 const DistMatrix& varrho, const DeltaOp& tau, Rng& rng,
                 int count = 200, double tol = kDefaultTol,
                 double loc_tol = kDefaultTol);

// rho precedes varrho when rho_{p,q} >= varrho_{p,q} pointwise everywhere
// (the order is reversed on purpose: larger CDFs mean smaller distances).
bool preceq(const DistMatrix& rho, const DistMatrix& varrho,
            double tol = kDefaultTol, double loc_tol = kDefaultTol);

// Fixpoint of pairwise pointwise-min combinations; throws BudgetExhausted
// when the closure would exceed cap members.
std::vector<DistMatrix> close_under_min(std::vector<DistMatrix> family,
                                        int cap = 64, double tol = kDefaultTol,
                                        double loc_tol = kDefaultTol);

struct SemilatticeReport {
  bool closed = true;
  bool idempotent = true;
  bool commutative = true;
  bool neutral = true;     // the constant epsilon(0) matrix is the bottom
  bool property_i = true;  // rho preceq varrho iff min-combination = varrho
  bool property_ii = true; // (s+r)^(s+q) preceq s+(r^q) with + = theta, ^ = min
  int members = 0;
  std::string failed;
  bool pass() const {
    return closed && idempotent && commutative && neutral && property_i &&
           property_ii;
  }
};

// Verifies the bounded-semilattice structure of the family under pointwise
// min, plus property (ii) for the given theta (assumed to dominate the
// family's tau).  When theta is itself pointwise min, all combinations
// resolve through a memoized meet table, making the triple scan index
// arithmetic.
SemilatticeReport check_semilattice(const std::vector<DistMatrix>& family,
                                    const DeltaOp& theta,
                                    double tol = kDefaultTol,
                                    double loc_tol = kDefaultTol);

struct AggDominanceReport {
  bool dominates = true;
  int checked = 0;
  int violations = 0;
};

// Sampled n-ary dominance: alpha(tau(G_i,H_i)) >= tau(alpha(G), alpha(H)).
AggDominanceReport sampled_agg_dominance(const AggOp& alpha, const DeltaOp& tau,
                                         int arity, Rng& rng, int count = 200,
                                         const DdfGenOptions& opt = {},
                                         double tol = kDefaultTol,
                                         double loc_tol = kDefaultTol);

// Cartesian product with entrywise alpha over the coordinate distances.
// Premises checked by sampling: alpha >> tau and tau <= tau_i for each
// factor (DominanceUnverified).  Size cap 4096 points (ProductTooLarge);
// the result is verified like validate_space (sampled beyond the cap).
FinitePpMSpace product_space(const std::vector<const FinitePpMSpace*>& spaces,
                             const AggOp& alpha, const DeltaOp& tau, Rng& rng,
                             double tol = kDefaultTol,
                             double loc_tol = kDefaultTol,
                             int exhaustive_cap = 64, int sampled = 2000);

// Unit-step metric space: dist(p,q) = epsilon(d(p,q)) for a random numeric
// metric obtained by shortest-path completion of uniform weights; a PM-space
// under tau_T(M).
FinitePpMSpace random_dirac_metric_space(Rng& rng, int points,
                                         double w_lo = 1.0, double w_hi = 10.0);

}  // namespace pmmeas

#endif
