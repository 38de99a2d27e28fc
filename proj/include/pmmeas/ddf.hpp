#ifndef PMMEAS_DDF_HPP
#define PMMEAS_DDF_HPP

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "pmmeas/errors.hpp"

namespace pmmeas {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Default tolerance for value comparisons between distribution functions.
inline constexpr double kDefaultTol = 1e-9;

// Mass-balance tolerance: every stored DiscreteDdf satisfies
// |sum of atom masses + mass at infinity - 1| <= kMassBalanceTol.
inline constexpr double kMassBalanceTol = 1e-12;

// A finitely supported distance distribution function: a left-continuous
// step CDF on [0, +inf] with F(0) = 0 and F(+inf) = 1.  Stored as a list of
// atoms (location, mass) with strictly increasing locations plus an optional
// mass at +inf.  eval(x) sums the masses strictly below x, so the function
// is left-continuous by construction.
class DiscreteDdf {
 public:
  struct Atom {
    double loc;
    double mass;
  };

  DiscreteDdf() : inf_mass_(1.0) {}  // no atoms: all mass at +inf

  // F(x) = sum of masses at locations < x.  F(+inf) = 1 by definition.
  // Total for any real x; x < 0 gives 0.
  double eval(double x) const;

  // Right limit F(x+) = sum of masses at locations <= x.
  double eval_plus(double x) const;

  const std::vector<Atom>& atoms() const { return atoms_; }
  double inf_mass() const { return inf_mass_; }

  // sup over finite x of F(x), i.e. 1 - inf_mass.
  double total_finite_mass() const;

  // Single atom of mass ~1 (ignoring dust below tol)?
  bool is_dirac(double tol = kDefaultTol) const;
  // Location of the single atom; kInf when all mass sits at +inf.
  // Only meaningful when is_dirac() holds.
  double dirac_location() const;

  bool is_epsilon_zero(double tol = kDefaultTol) const;

 private:
  friend DiscreteDdf make_ddf(std::vector<Atom>, double, double);
  std::vector<Atom> atoms_;
  std::vector<double> cum_;  // cum_[i] = sum of masses 0..i
  double inf_mass_;
};

// Validates, sorts, merges duplicate locations, drops zero masses and
// rescales so the masses balance exactly.  Throws NegativeLocation,
// NegativeMass, or NonNormalized (total off by more than norm_tol).
DiscreteDdf make_ddf(std::vector<DiscreteDdf::Atom> atoms, double inf_mass = 0.0,
                     double norm_tol = kDefaultTol);

// Dirac step at a: F(x) = 1 iff x > a.  a = +inf gives all mass at +inf.
DiscreteDdf epsilon(double a);

double eval(const DiscreteDdf& f, double x);

// (c (.) G)(x) = G(x / c) for finite c > 0; c = 0 and c = +inf both give
// epsilon(0).  Throws NegativeInput for c < 0.
DiscreteDdf scalar_multiply(double c, const DiscreteDdf& g);

// Pointwise order G <= H + tol.
//
// With loc_tol = 0 the comparison is taken at every location in the union of
// the two atom sets plus one point beyond the last atom, which is exact for
// step functions.  A positive loc_tol instead compares on the open intervals
// between consecutive union locations (at midpoints), skipping intervals
// shorter than 2 * loc_tol; that forgives one-ulp location jitter between
// step functions computed along different arithmetic routes.
bool ddf_leq(const DiscreteDdf& g, const DiscreteDdf& h, double tol = kDefaultTol,
             double loc_tol = 0.0);

bool ddf_eq(const DiscreteDdf& g, const DiscreteDdf& h, double tol = kDefaultTol,
            double loc_tol = 0.0);

// Largest pointwise gap max_x (G(x) - H(x)) restricted to the comparison
// points of ddf_leq (same loc_tol semantics).  Positive when G exceeds H.
double ddf_gap(const DiscreteDdf& g, const DiscreteDdf& h, double loc_tol = 0.0);

// Sample F on {0, step, 2*step, ...} up to x_max inclusive.
// Throws BadGrid when step <= 0 or x_max <= 0.
std::vector<std::pair<double, double>> grid_sample(const DiscreteDdf& f,
                                                   double x_max, double step);

// Pointwise min / max of two step functions (both again step functions).
DiscreteDdf pointwise_min(const DiscreteDdf& g, const DiscreteDdf& h);
DiscreteDdf pointwise_max(const DiscreteDdf& g, const DiscreteDdf& h);

// General pointwise combinator: result(x) = f(F_1(x), ..., F_n(x)) for a
// monotone level map f with f(0,...,0) >= 0.  The result carries an atom at 0
// when f of the all-zero vector is positive (empty-family conventions rely on
// this).  Throws std::invalid_argument if f turns out non-monotone along the
// sweep.
DiscreteDdf pointwise_combine(const std::vector<const DiscreteDdf*>& inputs,
                              const std::function<double(const std::vector<double>&)>& f);

}  // namespace pmmeas

#endif
