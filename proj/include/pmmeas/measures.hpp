#ifndef PMMEAS_MEASURES_HPP
#define PMMEAS_MEASURES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pmmeas/ddf.hpp"
#include "pmmeas/delta_ops.hpp"

namespace pmmeas {

// Finite ground set; subsets are bitmasks over the element labels, the ring
// is the full power set.  Size capped at 16 so exhaustive pair scans stay
// tractable.
class FiniteUniverse {
 public:
  explicit FiniteUniverse(int n);
  explicit FiniteUniverse(std::vector<std::string> labels);
  int size() const { return static_cast<int>(labels_.size()); }
  std::uint32_t subset_count() const { return 1u << labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string subset_name(std::uint32_t mask) const;  // "{a,c}", "{}" for 0
  bool operator==(const FiniteUniverse& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
};

// Numeric set function with mu(empty) = 0; values may be +inf.
class NumericSetFunction {
 public:
  NumericSetFunction(FiniteUniverse u, std::vector<double> values);
  static NumericSetFunction additive(const FiniteUniverse& u,
                                     const std::vector<double>& weights);
  static NumericSetFunction max_combined(const FiniteUniverse& u,
                                         const std::vector<double>& weights);
  const FiniteUniverse& universe() const { return u_; }
  double at(std::uint32_t mask) const { return values_[mask]; }

 private:
  FiniteUniverse u_;
  std::vector<double> values_;
};

// Total map subset -> distribution function with gamma(empty) = epsilon(0)
// held exactly.
class FiniteSetFunction {
 public:
  FiniteSetFunction(FiniteUniverse u, std::vector<DiscreteDdf> values);
  const FiniteUniverse& universe() const { return u_; }
  const DiscreteDdf& at(std::uint32_t mask) const { return values_[mask]; }
  void set(std::uint32_t mask, DiscreteDdf value);  // mask 0 must stay epsilon(0)
  const std::vector<DiscreteDdf>& values() const { return values_; }

 private:
  FiniteUniverse u_;
  std::vector<DiscreteDdf> values_;
};

struct PairWitness {
  bool found = false;
  std::uint32_t e = 0;
  std::uint32_t f = 0;
  std::string note;
};

struct ClassifyReport {
  // gamma(E u F) = tau(gamma_E, gamma_F) over disjoint pairs
  bool is_measure = true;
  // gamma(E u F) >= tau(gamma_E, gamma_F) over disjoint pairs
  bool is_submeasure = true;
  // E subset of F implies gamma_E >= gamma_F
  bool is_antimonotone = true;
  // the submeasure inequality over arbitrary (not only disjoint) pairs
  bool superadditive_all = true;
  PairWitness measure_w, submeasure_w, antimonotone_w, superadditive_w;
  int disjoint_pairs = 0;
  int subset_pairs = 0;
  int all_pairs = 0;
};

ClassifyReport classify(const FiniteSetFunction& gamma, const DeltaOp& tau,
                        double tol = kDefaultTol, double loc_tol = kDefaultTol);

// Valuation identity tau(gamma(E u F), gamma(E n F)) = tau(gamma_E, gamma_F)
// over ALL pairs; its verdict must agree with classify().is_measure.
struct CharacterizationReport {
  bool identity_holds = true;
  bool classify_is_measure = true;
  bool consistent = true;
  PairWitness witness;
  int pairs_checked = 0;
};

CharacterizationReport check_characterization(const FiniteSetFunction& gamma,
                                              const DeltaOp& tau,
                                              double tol = kDefaultTol,
                                              double loc_tol = kDefaultTol);

// gamma_E = epsilon(mu(E)).
FiniteSetFunction build_dirac(const NumericSetFunction& mu);

// gamma_E = m(E) (.) phi.  Requires m to be L-decomposable on disjoint pairs
// (throws NotLDecomposable with the witness pair otherwise).
FiniteSetFunction build_scaled_profile(const NumericSetFunction& m, const LOp& l,
                                       const DiscreteDdf& phi,
                                       double tol = kDefaultTol);

struct TransformResult {
  FiniteSetFunction gamma;
  ClassifyReport verdict;
  bool dominance_ok = true;  // combine_theta only: theta dominated tau on the
                             // induced quadruples
};

// Scaling c (.) gamma.  Inputs must classify as tau-measures
// (InputNotMeasure); tau must be scale-equivariant for this c over the
// input's values (NotDistributive).
TransformResult transform_scale(double c, const FiniteSetFunction& gamma,
                                const DeltaOp& tau, double tol = kDefaultTol,
                                double loc_tol = kDefaultTol);

// zeta_E = tau(gamma1_E, gamma2_E); both inputs must be tau-measures.
TransformResult transform_combine_tau(const FiniteSetFunction& g1,
                                      const FiniteSetFunction& g2,
                                      const DeltaOp& tau, double tol = kDefaultTol,
                                      double loc_tol = kDefaultTol);

// zeta_E = theta(gamma1_E, gamma2_E); both inputs must be tau-measures.  The
// result is a tau-submeasure when theta dominates tau; dominance is checked
// on the quadruples the disjoint pairs induce and reported in dominance_ok.
TransformResult transform_combine_theta(const DeltaOp& theta,
                                        const FiniteSetFunction& g1,
                                        const FiniteSetFunction& g2,
                                        const DeltaOp& tau, double tol = kDefaultTol,
                                        double loc_tol = kDefaultTol);

// n-ary pointwise aggregation on [0,1] values.
struct AggOp {
  std::string name;
  std::function<double(const std::vector<double>&)> f;
  static AggOp mean();
  static AggOp min();
};

DiscreteDdf apply_agg(const AggOp& alpha, const std::vector<const DiscreteDdf*>& fs);

// gamma_E = alpha(gamma1_E, ..., gammaN_E).  Preconditions are verified and
// reported rather than thrown: each gamma_i must be a tau_i-submeasure, tau
// must sit below every tau_i on the induced samples, and alpha must dominate
// tau on the induced tuples.  The aggregate is returned regardless; the
// verdict reflects what was established.
struct AggregateResult {
  FiniteSetFunction gamma;
  bool inputs_ok = true;
  bool tau_below_ok = true;
  bool dominance_ok = true;
  bool boundary_ok = true;  // alpha(eps0, ..., eps0) = eps0
  bool is_tau_submeasure = false;
  std::string note;
};

AggregateResult aggregate(const AggOp& alpha,
                          const std::vector<FiniteSetFunction>& gammas,
                          const DeltaOp& tau, const std::vector<DeltaOp>& taus,
                          double tol = kDefaultTol, double loc_tol = kDefaultTol);

}  // namespace pmmeas

#endif
