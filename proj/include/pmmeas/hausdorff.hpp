#ifndef PMMEAS_HAUSDORFF_HPP
#define PMMEAS_HAUSDORFF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pmmeas/measures.hpp"
#include "pmmeas/ppm.hpp"

namespace pmmeas {

// A finite pseudo-metric space with its full power set as the subset system.
// Subsets are bitmasks over point indices; at most 16 points so exhaustive
// subset scans stay tractable.
class HausdorffContext {
 public:
  explicit HausdorffContext(FinitePpMSpace space);
  const FinitePpMSpace& space() const { return space_; }
  int points() const { return space_.dist.points(); }
  std::uint32_t full_mask() const { return (1u << points()) - 1u; }

 private:
  FinitePpMSpace space_;
};

// No two distinct points at distance epsilon(0).
bool is_separated(const HausdorffContext& ctx, double tol = kDefaultTol);

// Pointwise inf of the pair distances inside E; epsilon(0) on singletons.
// Throws EmptySet for E = 0.
DiscreteDdf prob_diameter(const HausdorffContext& ctx, std::uint32_t e);

// The diameter reaches total mass 1 at finite locations.  The empty set
// counts as bounded.
bool is_prob_bounded(const HausdorffContext& ctx, std::uint32_t e,
                     double tol = kDefaultTol);

// Directed set distance inf_{p in E} sup_{q in F} of the CDFs, with the
// empty-set conventions inf over {} = 1 and sup over {} = 0: the distance
// from the empty set is epsilon(0), the distance TO the empty set puts all
// mass at +inf.
DiscreteDdf prob_distance(const HausdorffContext& ctx, std::uint32_t e,
                          std::uint32_t f);

// Pointwise min of the two directed distances; symmetric.  Both sets must be
// probabilistically bounded (NotProbBounded).
DiscreteDdf hausdorff_distance(const HausdorffContext& ctx, std::uint32_t e,
                               std::uint32_t f, double tol = kDefaultTol);

// The induced set function: the Hausdorff distance between the complement of
// E and the whole point set, taken raw (no boundedness gate, so the result
// may carry mass at +inf).
DiscreteDdf lambda_H(const HausdorffContext& ctx, std::uint32_t e);

struct LambdaReport {
  bool precondition_met = true;  // the space passes its own triangle scan
  bool empty_is_eps0 = true;
  bool antimonotone = true;   // E subset of F implies lambda_E >= lambda_F
  bool union_bound = true;    // lambda_{E u F} <= min(lambda_E, lambda_F)
  int subset_pairs = 0;
  int all_pairs = 0;
  std::string note;
  bool pass() const {
    return precondition_met && empty_is_eps0 && antimonotone && union_bound;
  }
};

// Exhaustive check of the three structural claims about lambda_H.  A space
// that fails its own triangle scan short-circuits with precondition_met
// false and the theorem flags untouched.
LambdaReport check_lambda_theorem(const HausdorffContext& ctx,
                                  double tol = kDefaultTol,
                                  double loc_tol = kDefaultTol);

struct MeasurableReport {
  std::vector<std::uint32_t> members;  // sorted subset masks
  bool has_empty = false;
  bool has_full = false;
  bool complement_closed = true;
  bool union_closed = true;
  int candidates = 0;
  bool pass() const {
    return has_empty && has_full && complement_closed && union_closed;
  }
};

// E is measurable when every G splits cleanly: lambda_G = tau(lambda_{G n E},
// lambda_{G n E^c}).  Returns the full member list plus the algebra
// structure flags, all checked exhaustively.  Capped at 10 points.
MeasurableReport enumerate_measurable(const HausdorffContext& ctx,
                                      const DeltaOp& tau,
                                      double tol = kDefaultTol,
                                      double loc_tol = kDefaultTol);

struct RestrictionReport {
  std::vector<std::uint32_t> members;
  int atoms = 0;
  bool algebra_ok = true;
  bool additive_ok = true;  // lambda_{E u F} = tau(lambda_E, lambda_F) on
                            // disjoint member pairs
  bool classify_is_measure = true;
  int disjoint_pairs = 0;
  std::string note;
  bool pass() const { return algebra_ok && additive_ok && classify_is_measure; }
};

// Restricts lambda_H to the measurable members, checks the decomposition
// identity on disjoint pairs, and cross-classifies the restriction as a
// tau-measure on the atom-generated universe.
RestrictionReport check_restriction_measure(const HausdorffContext& ctx,
                                            const DeltaOp& tau,
                                            double tol = kDefaultTol,
                                            double loc_tol = kDefaultTol);

// Literal sup_{s < t} grid oracles over {0, step, 2 step, ...}, using only
// CDF evaluations.  Each agrees with its closed form within a 2 * step
// location slack.  Throws BadGrid for step <= 0; the diameter oracle throws
// EmptySet like its closed form.
double diameter_oracle(const HausdorffContext& ctx, std::uint32_t e, double t,
                       double step);
double distance_oracle(const HausdorffContext& ctx, std::uint32_t e,
                       std::uint32_t f, double t, double step);
double hausdorff_oracle(const HausdorffContext& ctx, std::uint32_t e,
                        std::uint32_t f, double t, double step);

}  // namespace pmmeas

#endif
