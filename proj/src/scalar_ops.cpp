#include "pmmeas/scalar_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "pmmeas/ddf.hpp"  // kInf

namespace pmmeas {

namespace {

constexpr double kUnitSlack = 1e-9;

double clamp_unit(double x, const char* who) {
  if (std::isnan(x) || x < -kUnitSlack || x > 1.0 + kUnitSlack) {
    std::ostringstream os;
    os << who << ": argument " << x << " outside [0,1]";
    throw OutOfUnitInterval(os.str());
  }
  return std::min(std::max(x, 0.0), 1.0);
}

}  // namespace

double ScalarOp::operator()(double x, double y) const {
  x = clamp_unit(x, name_.c_str());
  y = clamp_unit(y, name_.c_str());
  switch (kind_) {
    case Kind::M:
      return std::min(x, y);
    case Kind::Pi:
      return x * y;
    case Kind::W:
      return std::max(x + y - 1.0, 0.0);
    case Kind::D:
      if (x == 1.0) return y;
      if (y == 1.0) return x;
      return 0.0;
    case Kind::AM:
      return 0.5 * (x + y);
    case Kind::Dual:
      return x + y - (*base_)(x, y);
    case Kind::Table: {
      // bilinear interpolation on the uniform n x n grid
      const int n = table_n_;
      double fx = x * (n - 1), fy = y * (n - 1);
      int i = std::min(static_cast<int>(fx), n - 2);
      int j = std::min(static_cast<int>(fy), n - 2);
      double ax = fx - i, ay = fy - j;
      auto v = [&](int a, int b) { return table_[a * n + b]; };
      return (1 - ax) * (1 - ay) * v(i, j) + ax * (1 - ay) * v(i + 1, j) +
             (1 - ax) * ay * v(i, j + 1) + ax * ay * v(i + 1, j + 1);
    }
    case Kind::Closure:
      return fn_(x, y);
  }
  return 0.0;  // unreachable
}

ScalarOp ScalarOp::tnorm_m() {
  ScalarOp op;
  op.kind_ = Kind::M;
  op.name_ = "M";
  return op;
}

ScalarOp ScalarOp::tnorm_pi() {
  ScalarOp op;
  op.kind_ = Kind::Pi;
  op.name_ = "Pi";
  return op;
}

ScalarOp ScalarOp::tnorm_w() {
  ScalarOp op;
  op.kind_ = Kind::W;
  op.name_ = "W";
  return op;
}

ScalarOp ScalarOp::tnorm_d() {
  ScalarOp op;
  op.kind_ = Kind::D;
  op.name_ = "D";
  op.left_continuous_ = false;
  return op;
}

ScalarOp ScalarOp::agg_am() {
  ScalarOp op;
  op.kind_ = Kind::AM;
  op.name_ = "AM";
  return op;
}

ScalarOp ScalarOp::dual(const ScalarOp& q) {
  ScalarOp op;
  op.kind_ = Kind::Dual;
  op.base_ = std::make_shared<ScalarOp>(q);
  op.left_continuous_ = q.left_continuous();
  op.name_ = "dual(" + q.name() + ")";
  return op;
}

ScalarOp ScalarOp::from_table(int n, std::vector<double> values, bool left_continuous,
                              std::string name) {
  if (n < 2 || values.size() != static_cast<size_t>(n) * n)
    throw BadDescriptor("table op needs n >= 2 and n*n values");
  for (double v : values)
    if (std::isnan(v) || v < 0.0 || v > 1.0)
      throw BadDescriptor("table op values must lie in [0,1]");
  ScalarOp op;
  op.kind_ = Kind::Table;
  op.table_n_ = n;
  op.table_ = std::move(values);
  op.left_continuous_ = left_continuous;
  op.name_ = std::move(name);
  return op;
}

ScalarOp ScalarOp::closure(std::string name, std::function<double(double, double)> fn,
                           bool left_continuous) {
  ScalarOp op;
  op.kind_ = Kind::Closure;
  op.fn_ = std::move(fn);
  op.left_continuous_ = left_continuous;
  op.name_ = std::move(name);
  return op;
}

namespace {

std::vector<double> unit_grid(double step) {
  if (!(step > 0.0) || step > 0.5) throw BadGrid("grid step must be in (0, 0.5]");
  std::vector<double> g;
  long n = static_cast<long>(std::floor(1.0 / step + 1e-9));
  for (long k = 0; k <= n; ++k) g.push_back(std::min(1.0, k * step));
  if (g.back() < 1.0) g.push_back(1.0);
  return g;
}

}  // namespace

TnormAxiomReport check_tnorm_axioms(const ScalarOp& op, double grid_step, double tol) {
  auto g = unit_grid(grid_step);
  TnormAxiomReport r;
  auto fail = [&](const char* what, double x, double y, double z) {
    if (!r.failed.empty()) return;
    r.failed = what;
    r.witness = {x, y, z};
  };
  for (double x : g) {
    if (std::abs(op(x, 1.0) - x) > tol) {
      r.identity_one = false;
      fail("identity", x, 1.0, 0.0);
    }
    for (double y : g) {
      if (std::abs(op(x, y) - op(y, x)) > tol) {
        r.commutative = false;
        fail("commutativity", x, y, 0.0);
      }
      for (double z : g) {
        if (std::abs(op(op(x, y), z) - op(x, op(y, z))) > tol) {
          r.associative = false;
          fail("associativity", x, y, z);
        }
      }
    }
  }
  // monotonicity along adjacent grid columns
  for (size_t i = 0; i + 1 < g.size() && r.monotone; ++i)
    for (double y : g)
      if (op(g[i], y) > op(g[i + 1], y) + tol) {
        r.monotone = false;
        fail("monotonicity", g[i], y, 0.0);
      }
  return r;
}

ScalarDominanceReport check_scalar_dominance(const ScalarOp& f, const ScalarOp& g,
                                             double grid_step) {
  auto grid = unit_grid(grid_step);
  ScalarDominanceReport r;
  r.worst_margin = kInf;
  const double eps = 1e-12;
  for (double x : grid)
    for (double y : grid)
      for (double u : grid) {
        double gxy = g(x, y);
        for (double v : grid) {
          double lhs = f(gxy, g(u, v));
          double rhs = g(f(x, u), f(y, v));
          double margin = lhs - rhs;
          ++r.points;
          if (margin < r.worst_margin) r.worst_margin = margin;
          if (margin < -eps && r.dominates) {
            r.dominates = false;
            r.witness = {x, y, u, v};
          }
        }
      }
  return r;
}

// ---------------------------------------------------------------------------
// LOp

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  // xs strictly increasing; x within [xs.front(), xs.back()]
  size_t hi = 1;
  while (hi + 1 < xs.size() && xs[hi] < x) ++hi;
  double w = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
  return ys[hi - 1] + w * (ys[hi] - ys[hi - 1]);
}

}  // namespace

double LOp::operator()(double u, double v) const {
  if (std::isnan(u) || std::isnan(v) || u < 0.0 || v < 0.0)
    throw NegativeInput(name_ + ": arguments must be >= 0");
  if (u == 0.0) return v;  // exact neutrality
  if (v == 0.0) return u;
  if (u == kInf || v == kInf) return kInf;
  switch (kind_) {
    case Kind::KAlpha: {
      if (alpha_ == 1.0) return u + v;
      if (alpha_ == 2.0) return std::sqrt(u * u + v * v);
      return std::pow(std::pow(u, alpha_) + std::pow(v, alpha_), 1.0 / alpha_);
    }
    case Kind::KInf:
      return std::max(u, v);
    case Kind::Ordinal: {
      for (const auto& b : blocks_) {
        if (u > b.lo && u < b.hi && v > b.lo && v < b.hi) {
          double tu = interp(b.x, b.t, u);
          double tv = interp(b.x, b.t, v);
          double lu = tu / (1.0 - tu);
          double lv = tv / (1.0 - tv);
          double s = lu + lv;
          double ts = s / (1.0 + s);  // s = inf cannot happen here (tu, tv < 1)
          return interp(b.t, b.x, ts);
        }
      }
      return std::max(u, v);
    }
  }
  return 0.0;  // unreachable
}

LOp LOp::k_alpha(double alpha) {
  if (!(alpha > 0.0)) throw BadDescriptor("k_alpha needs alpha > 0");
  LOp l;
  l.kind_ = Kind::KAlpha;
  l.alpha_ = alpha;
  std::ostringstream os;
  os << "K_" << alpha;
  l.name_ = os.str();
  return l;
}

LOp LOp::k_inf() {
  LOp l;
  l.kind_ = Kind::KInf;
  l.name_ = "K_inf";
  return l;
}

LOp LOp::ordinal_sum(std::vector<Block> blocks) {
  if (blocks.empty()) throw BadDescriptor("ordinal sum needs at least one block");
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.lo < b.lo; });
  double prev_hi = -1.0;
  for (const auto& b : blocks) {
    if (!(b.lo >= 0.0) || !(b.hi > b.lo))
      throw BadDescriptor("ordinal block needs 0 <= lo < hi");
    if (b.lo < prev_hi) throw BadDescriptor("ordinal blocks overlap");
    prev_hi = b.hi;
    if (b.x.size() != b.t.size() || b.x.size() < 2)
      throw BadDescriptor("ordinal block table needs matching x/t, size >= 2");
    if (b.x.front() != b.lo || b.x.back() != b.hi || b.t.front() != 0.0 ||
        b.t.back() != 1.0)
      throw BadDescriptor("ordinal block table must span [lo,hi] -> [0,1]");
    for (size_t i = 1; i < b.x.size(); ++i)
      if (!(b.x[i] > b.x[i - 1]) || !(b.t[i] > b.t[i - 1]))
        throw BadDescriptor("ordinal block table must be strictly increasing");
  }
  LOp l;
  l.kind_ = Kind::Ordinal;
  l.blocks_ = std::move(blocks);
  l.name_ = "ordinal";
  return l;
}

LPropsReport check_l_properties(const LOp& l, double range, int samples, unsigned seed,
                                double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, range);
  LPropsReport r;
  auto fail = [&](const char* what, double a, double b, double c, double d) {
    if (!r.failed.empty()) return;
    r.failed = what;
    r.witness = {a, b, c, d};
  };
  for (int k = 0; k < samples; ++k) {
    double u = uni(rng), v = uni(rng), w = uni(rng);
    if (l(u, 0.0) != u || l(0.0, v) != v) {
      r.neutral = false;
      fail("neutrality", u, v, 0, 0);
    }
    if (std::abs(l(u, v) - l(v, u)) > tol) {
      r.commutative = false;
      fail("commutativity", u, v, 0, 0);
    }
    if (std::abs(l(l(u, v), w) - l(u, l(v, w))) > tol) {
      r.associative = false;
      fail("associativity", u, v, w, 0);
    }
    double du = uni(rng) * 0.2 + 1e-6, dv = uni(rng) * 0.2 + 1e-6;
    if (!(l(u + du, v + dv) > l(u, v))) {
      r.jointly_strict = false;
      fail("joint strictness", u, v, u + du, v + dv);
    }
  }
  return r;
}

}  // namespace pmmeas
