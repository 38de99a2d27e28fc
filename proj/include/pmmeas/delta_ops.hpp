#ifndef PMMEAS_DELTA_OPS_HPP
#define PMMEAS_DELTA_OPS_HPP

#include <array>
#include <string>
#include <vector>

#include "pmmeas/ddf.hpp"
#include "pmmeas/scalar_ops.hpp"

namespace pmmeas {

// Binary operation on finitely supported distance distribution functions.
//
// Kinds and their definitions at each x > 0:
//   tau_t(T)       sup over u + v = x of T(G(u), H(v))
//   tau_la(L, A)   sup over L(u, v) = x of A(G(u), H(v))
//   pi_top(top)    top(G(x), H(x)) pointwise
//   rho_lq(L, Q)   inf over L(u, v) = x of Qd(G(u), H(v)), Qd the dual of Q
//   convolution    distribution of the independent sum
//
// apply() runs an exact step-function algorithm.  For the sup kinds this
// enumerates corner pairs over the atom grids (right-limit values), which
// reproduces the supremum exactly for monotone left-continuous A.  Scalar ops
// flagged non-left-continuous are refused on general inputs
// (NonLeftContinuousScalar) but accepted when both arguments are {0,1}-valued
// steps, where the corner formula is exact regardless; use oracle_eval
// otherwise.  The inf kind enumerates the constant pieces the constraint
// curve actually visits, plus the two endpoint configurations (u = 0 and
// v = 0), again exactly.  Results are canonical left-continuous steps.
class DeltaOp {
 public:
  enum class Kind { TauT, TauLA, PiTop, RhoLQ, Convolution };

  static DeltaOp tau_t(ScalarOp t);
  static DeltaOp tau_la(LOp l, ScalarOp a);
  static DeltaOp pi_top(ScalarOp top);
  static DeltaOp rho_lq(LOp l, ScalarOp q);
  static DeltaOp convolution();

  DiscreteDdf apply(const DiscreteDdf& g, const DiscreteDdf& h) const;

  // Dense-grid evaluation of the defining sup/inf at a single point, using
  // only CDF evaluations on the grid {0, step, 2 step, ...}.  Independent of
  // the exact path; the two agree within a 2 * step location slack.  Throws
  // BadGrid for step <= 0.
  double oracle_eval(const DiscreteDdf& g, const DiscreteDdf& h, double x,
                     double step) const;

  // Step function assembled from oracle_eval on {eval_step, 2 eval_step, ...}
  // up to x_max.  Used by exploratory probes for ops with no exact path.
  DiscreteDdf oracle_step_function(const DiscreteDdf& g, const DiscreteDdf& h,
                                   double x_max, double eval_step,
                                   double grid_step) const;

  Kind kind() const { return kind_; }
  const ScalarOp& scalar() const { return scalar_; }  // T / A / top / Q
  const LOp& l() const { return l_; }
  const std::string& name() const { return name_; }
  bool sup_kind() const { return kind_ != Kind::RhoLQ; }

 private:
  DeltaOp() = default;
  Kind kind_ = Kind::Convolution;
  ScalarOp scalar_ = ScalarOp::tnorm_m();
  ScalarOp dual_ = ScalarOp::tnorm_m();  // dual of scalar_, RhoLQ only
  LOp l_ = LOp::k_one();
  std::string name_ = "convolution";
};

struct TriangleAxiomReport {
  bool commutative = true;
  bool associative = true;
  bool monotone = true;
  bool neutral = true;
  bool pass() const { return commutative && associative && monotone && neutral; }
  std::string failed;  // description of the first failure
};

// Verifies the triangle-function axioms on a finite sample family:
// commutativity and associativity over all pairs/triples, neutrality of
// epsilon(0), and monotonicity w.r.t. ddf_leq.  Monotonicity uses both the
// comparable sampled pairs and derived pairs (pointwise min against each
// argument) so the check cannot be vacuous.  Comparisons allow loc_tol of
// jump-location jitter.
TriangleAxiomReport check_triangle_axioms(const DeltaOp& op,
                                          const std::vector<DiscreteDdf>& samples,
                                          double tol = kDefaultTol,
                                          double loc_tol = kDefaultTol);

struct DeltaDominanceReport {
  bool dominates = true;
  int violations = 0;
  int checked = 0;
  int first_witness = -1;  // index into the quadruple list
  double worst_gap = 0.0;  // largest pointwise excess of rhs over lhs
};

using DdfQuad = std::array<DiscreteDdf, 4>;

// Checks theta(tau(G1,H1), tau(G2,H2)) >= tau(theta(G1,G2), theta(H1,H2))
// on the given quadruples (G1, H1, G2, H2).
DeltaDominanceReport check_dominance_delta(const DeltaOp& theta, const DeltaOp& tau,
                                           const std::vector<DdfQuad>& quads,
                                           double tol = kDefaultTol,
                                           double loc_tol = kDefaultTol);

struct DistributivityReport {
  bool distributive = true;
  int violations = 0;
  int checked = 0;
  double worst_c = 0.0;  // scale factor of the first violation
};

// Checks c (.) op(G,H) = op(c (.) G, c (.) H) for every c and sample pair.
DistributivityReport check_distributive(const DeltaOp& op,
                                        const std::vector<double>& cs,
                                        const std::vector<DiscreteDdf>& samples,
                                        double tol = kDefaultTol,
                                        double loc_tol = kDefaultTol);

// Pointwise comparison op1 <= op2 over sampled pairs; returns the number of
// violating pairs (0 means op1(G,H) <= op2(G,H) held throughout).
int count_delta_leq_violations(const DeltaOp& op1, const DeltaOp& op2,
                               const std::vector<DiscreteDdf>& samples,
                               double tol = kDefaultTol, double loc_tol = kDefaultTol);

}  // namespace pmmeas

#endif
