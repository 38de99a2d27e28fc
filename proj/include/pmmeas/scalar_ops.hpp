#ifndef PMMEAS_SCALAR_OPS_HPP
#define PMMEAS_SCALAR_OPS_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pmmeas/errors.hpp"

namespace pmmeas {

// Binary operation on [0,1].  Built-in kinds:
//   M   min                       W   max(x + y - 1, 0)
//   Pi  product                   D   min(x,y) if max(x,y) = 1, else 0
//   AM  arithmetic mean
// plus the dual of a quasi-copula, Qd(x,y) = x + y - Q(x,y), a value table
// with bilinear interpolation, and an arbitrary closure (not serializable).
class ScalarOp {
 public:
  enum class Kind { M, Pi, W, D, AM, Dual, Table, Closure };

  // Evaluates the operation; throws OutOfUnitInterval when an argument is
  // outside [0,1] by more than a small slack (1e-9).  Arguments within the
  // slack are clamped, which absorbs rounding from upstream mass sums.
  double operator()(double x, double y) const;

  Kind kind() const { return kind_; }
  bool left_continuous() const { return left_continuous_; }
  const std::string& name() const { return name_; }
  const ScalarOp* base() const { return base_.get(); }     // Dual only
  const std::vector<double>& table() const { return table_; }  // Table only
  int table_n() const { return table_n_; }

  static ScalarOp tnorm_m();
  static ScalarOp tnorm_pi();
  static ScalarOp tnorm_w();
  static ScalarOp tnorm_d();
  static ScalarOp agg_am();
  static ScalarOp dual(const ScalarOp& q);
  // n x n values of the op on the uniform grid, row-major in x.
  static ScalarOp from_table(int n, std::vector<double> values, bool left_continuous,
                             std::string name = "table");
  static ScalarOp closure(std::string name, std::function<double(double, double)> fn,
                          bool left_continuous);

 private:
  ScalarOp() = default;
  Kind kind_ = Kind::M;
  bool left_continuous_ = true;
  std::string name_ = "M";
  std::shared_ptr<const ScalarOp> base_;
  std::vector<double> table_;
  int table_n_ = 0;
  std::function<double(double, double)> fn_;
};

struct TnormAxiomReport {
  bool commutative = true;
  bool associative = true;
  bool monotone = true;
  bool identity_one = true;
  bool pass() const { return commutative && associative && monotone && identity_one; }
  std::array<double, 3> witness{};  // first failing grid point
  std::string failed;               // which axiom broke first
};

// Checks the t-norm axioms on the uniform grid with the given step.
// Throws BadGrid for step outside (0, 0.5].
TnormAxiomReport check_tnorm_axioms(const ScalarOp& op, double grid_step,
                                    double tol = 1e-9);

struct ScalarDominanceReport {
  bool dominates = true;
  double worst_margin = 0.0;             // min over grid of lhs - rhs
  std::array<double, 4> witness{};       // first violating (x, y, u, v)
  long points = 0;
};

// Scans f(g(x,y), g(u,v)) >= g(f(x,u), f(y,v)) over the 4-d uniform grid.
// Throws BadGrid for step outside (0, 0.5].
ScalarDominanceReport check_scalar_dominance(const ScalarOp& f, const ScalarOp& g,
                                             double grid_step);

// Binary operation on [0, +inf] with 0 as neutral element.  Kinds:
//   k_alpha   (u^a + v^a)^(1/a),  a > 0
//   k_inf     max(u, v)
//   ordinal   ordinal sum: inv_l(l(u) + l(v)) when both arguments fall in the
//             same block (lo, hi), max(u, v) otherwise.  Each block's scale l
//             is stored compactified: a strictly increasing piecewise-linear
//             table for phi = l / (1 + l) from [lo, hi] onto [0, 1], so l
//             genuinely reaches +inf at hi and stays serializable.
class LOp {
 public:
  enum class Kind { KAlpha, KInf, Ordinal };

  struct Block {
    double lo = 0.0, hi = 1.0;
    std::vector<double> x;  // knots, x.front() = lo, x.back() = hi
    std::vector<double> t;  // phi values, strictly increasing 0 -> 1
  };

  // Evaluates; arguments may be +inf.  Throws NegativeInput on u < 0 or v < 0.
  double operator()(double u, double v) const;

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::string& name() const { return name_; }

  static LOp k_alpha(double alpha);  // BadDescriptor unless alpha > 0
  static LOp k_one() { return k_alpha(1.0); }
  static LOp k_inf();
  static LOp ordinal_sum(std::vector<Block> blocks);

 private:
  LOp() = default;
  Kind kind_ = Kind::KAlpha;
  double alpha_ = 1.0;
  std::vector<Block> blocks_;
  std::string name_ = "K_1";
};

struct LPropsReport {
  bool neutral = true;
  bool commutative = true;
  bool associative = true;
  bool jointly_strict = true;
  bool pass() const { return neutral && commutative && associative && jointly_strict; }
  std::string failed;
  std::array<double, 4> witness{};
};

// Samples the defining properties of the [0,inf] family on seeded uniform
// draws from [0, range]: exact neutrality of 0, commutativity and
// associativity within tol, joint strict monotonicity on ordered pairs.
LPropsReport check_l_properties(const LOp& l, double range = 10.0, int samples = 300,
                                unsigned seed = 1, double tol = 1e-9);

}  // namespace pmmeas

#endif
