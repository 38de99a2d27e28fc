#include "pmmeas/ddf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pmmeas {

namespace {

// Masses below this are treated as numerical dust and dropped.
constexpr double kDust = 1e-15;

int lower_index(const std::vector<DiscreteDdf::Atom>& atoms, double x) {
  // first index with loc >= x
  int lo = 0, hi = static_cast<int>(atoms.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (atoms[mid].loc < x)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

int upper_index(const std::vector<DiscreteDdf::Atom>& atoms, double x) {
  // first index with loc > x
  int lo = 0, hi = static_cast<int>(atoms.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (atoms[mid].loc <= x)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

double DiscreteDdf::eval(double x) const {
  if (x == kInf) return 1.0;
  int idx = lower_index(atoms_, x);
  return idx == 0 ? 0.0 : cum_[idx - 1];
}

double DiscreteDdf::eval_plus(double x) const {
  if (x == kInf) return 1.0;
  int idx = upper_index(atoms_, x);
  return idx == 0 ? 0.0 : cum_[idx - 1];
}

double DiscreteDdf::total_finite_mass() const {
  return atoms_.empty() ? 0.0 : cum_.back();
}

bool DiscreteDdf::is_dirac(double tol) const {
  if (atoms_.empty()) return inf_mass_ >= 1.0 - tol;
  return atoms_.size() == 1 && atoms_[0].mass >= 1.0 - tol;
}

double DiscreteDdf::dirac_location() const {
  return atoms_.empty() ? kInf : atoms_[0].loc;
}

bool DiscreteDdf::is_epsilon_zero(double tol) const {
  return is_dirac(tol) && !atoms_.empty() && atoms_[0].loc <= tol;
}

DiscreteDdf make_ddf(std::vector<DiscreteDdf::Atom> atoms, double inf_mass,
                     double norm_tol) {
  for (const auto& a : atoms) {
    if (!(a.loc >= 0.0) || a.loc == kInf || std::isnan(a.loc)) {
      std::ostringstream os;
      os << "atom location " << a.loc << " outside [0, +inf)";
      throw NegativeLocation(os.str());
    }
    if (!(a.mass >= 0.0) || std::isnan(a.mass)) {
      std::ostringstream os;
      os << "atom mass " << a.mass << " at location " << a.loc;
      throw NegativeMass(os.str());
    }
  }
  if (!(inf_mass >= -norm_tol)) throw NegativeMass("mass at +inf is negative");
  inf_mass = std::max(inf_mass, 0.0);

  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.loc < b.loc; });

  // merge exactly-equal locations, drop dust
  std::vector<DiscreteDdf::Atom> merged;
  merged.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!merged.empty() && merged.back().loc == a.loc)
      merged.back().mass += a.mass;
    else
      merged.push_back(a);
  }
  std::erase_if(merged, [](const auto& a) { return a.mass < kDust; });

  double total = inf_mass;
  for (const auto& a : merged) total += a.mass;
  if (std::abs(total - 1.0) > norm_tol) {
    std::ostringstream os;
    os << "masses sum to " << total << ", expected 1 within " << norm_tol;
    throw NonNormalized(os.str());
  }

  DiscreteDdf f;
  f.atoms_ = std::move(merged);
  f.inf_mass_ = inf_mass / total;
  f.cum_.resize(f.atoms_.size());
  double run = 0.0;
  for (size_t i = 0; i < f.atoms_.size(); ++i) {
    f.atoms_[i].mass /= total;
    run += f.atoms_[i].mass;
    f.cum_[i] = run;
  }
  if (f.inf_mass_ < kDust) {
    // snap: boundedness predicates test inf_mass == 0
    f.inf_mass_ = 0.0;
    if (!f.cum_.empty()) f.cum_.back() = 1.0;
  }
  return f;
}

DiscreteDdf epsilon(double a) {
  if (a == kInf) return make_ddf({}, 1.0);
  if (!(a >= 0.0)) throw NegativeLocation("epsilon at negative location");
  return make_ddf({{a, 1.0}}, 0.0);
}

double eval(const DiscreteDdf& f, double x) { return f.eval(x); }

DiscreteDdf scalar_multiply(double c, const DiscreteDdf& g) {
  if (std::isnan(c) || c < 0.0) throw NegativeInput("scalar_multiply needs c >= 0");
  if (c == 0.0 || c == kInf) return epsilon(0.0);
  std::vector<DiscreteDdf::Atom> atoms = g.atoms();
  for (auto& a : atoms) a.loc *= c;
  return make_ddf(std::move(atoms), g.inf_mass());
}

namespace {

std::vector<double> merged_locations(const DiscreteDdf& g, const DiscreteDdf& h) {
  std::vector<double> locs;
  locs.reserve(g.atoms().size() + h.atoms().size());
  for (const auto& a : g.atoms()) locs.push_back(a.loc);
  for (const auto& a : h.atoms()) locs.push_back(a.loc);
  std::sort(locs.begin(), locs.end());
  locs.erase(std::unique(locs.begin(), locs.end()), locs.end());
  return locs;
}

// Comparison points shared by ddf_leq / ddf_gap.  loc_tol = 0: the union
// locations plus one point past the last atom.  loc_tol > 0: midpoints of
// the gaps between consecutive union locations wider than 2 * loc_tol.
std::vector<double> comparison_points(const DiscreteDdf& g, const DiscreteDdf& h,
                                      double loc_tol) {
  std::vector<double> locs = merged_locations(g, h);
  std::vector<double> pts;
  if (loc_tol <= 0.0) {
    pts = locs;
    pts.push_back(locs.empty() ? 1.0 : locs.back() + 1.0);
    return pts;
  }
  double prev = 0.0;
  for (double c : locs) {
    if (c - prev > 2.0 * loc_tol) pts.push_back(0.5 * (prev + c));
    prev = c;
  }
  pts.push_back(prev + 1.0);
  return pts;
}

}  // namespace

bool ddf_leq(const DiscreteDdf& g, const DiscreteDdf& h, double tol, double loc_tol) {
  for (double x : comparison_points(g, h, loc_tol))
    if (g.eval(x) > h.eval(x) + tol) return false;
  return true;
}

bool ddf_eq(const DiscreteDdf& g, const DiscreteDdf& h, double tol, double loc_tol) {
  for (double x : comparison_points(g, h, loc_tol))
    if (std::abs(g.eval(x) - h.eval(x)) > tol) return false;
  return true;
}

double ddf_gap(const DiscreteDdf& g, const DiscreteDdf& h, double loc_tol) {
  double worst = -kInf;
  for (double x : comparison_points(g, h, loc_tol))
    worst = std::max(worst, g.eval(x) - h.eval(x));
  return worst;
}

std::vector<std::pair<double, double>> grid_sample(const DiscreteDdf& f,
                                                   double x_max, double step) {
  if (!(step > 0.0)) throw BadGrid("step must be > 0");
  if (!(x_max > 0.0)) throw BadGrid("x_max must be > 0");
  std::vector<std::pair<double, double>> out;
  long n = static_cast<long>(std::floor(x_max / step + 1e-9));
  out.reserve(n + 1);
  for (long k = 0; k <= n; ++k) {
    double x = k * step;
    out.emplace_back(x, f.eval(x));
  }
  return out;
}

DiscreteDdf pointwise_combine(const std::vector<const DiscreteDdf*>& inputs,
                              const std::function<double(const std::vector<double>&)>& f) {
  const size_t n = inputs.size();
  std::vector<double> locs;
  for (const auto* p : inputs)
    for (const auto& a : p->atoms()) locs.push_back(a.loc);
  std::sort(locs.begin(), locs.end());
  locs.erase(std::unique(locs.begin(), locs.end()), locs.end());

  std::vector<double> level(n, 0.0);
  double base = f(level);  // value on (0, first location]
  if (base < 0.0 || base > 1.0 + 1e-9)
    throw std::invalid_argument("pointwise_combine: level map out of [0,1]");

  std::vector<DiscreteDdf::Atom> atoms;
  double run = 0.0;
  if (base > 0.0) {
    atoms.push_back({0.0, base});
    run = base;
  }
  std::vector<size_t> cursor(n, 0);
  for (double c : locs) {
    for (size_t i = 0; i < n; ++i) {
      const auto& as = inputs[i]->atoms();
      while (cursor[i] < as.size() && as[cursor[i]].loc <= c) {
        level[i] += as[cursor[i]].mass;
        ++cursor[i];
      }
    }
    double v = f(level);
    if (v < run - 1e-9)
      throw std::invalid_argument("pointwise_combine: non-monotone level map");
    if (v > run) {
      if (!atoms.empty() && atoms.back().loc == c)
        atoms.back().mass += v - run;
      else
        atoms.push_back({c, v - run});
      run = v;
    }
  }
  return make_ddf(std::move(atoms), 1.0 - run);
}

DiscreteDdf pointwise_min(const DiscreteDdf& g, const DiscreteDdf& h) {
  return pointwise_combine({&g, &h}, [](const std::vector<double>& v) {
    return std::min(v[0], v[1]);
  });
}

DiscreteDdf pointwise_max(const DiscreteDdf& g, const DiscreteDdf& h) {
  return pointwise_combine({&g, &h}, [](const std::vector<double>& v) {
    return std::max(v[0], v[1]);
  });
}

}  // namespace pmmeas
