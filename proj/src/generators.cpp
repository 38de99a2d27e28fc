#include "pmmeas/generators.hpp"

#include <algorithm>

#include "pmmeas/errors.hpp"

namespace pmmeas {

DiscreteDdf random_ddf(Rng& rng, const DdfGenOptions& opt) {
  std::uniform_int_distribution<int> natoms(opt.min_atoms, opt.max_atoms);
  std::uniform_real_distribution<double> uloc(0.0, opt.loc_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = natoms(rng);
  double inf_mass = 0.0;
  if (opt.inf_mass_prob > 0.0 && unit(rng) < opt.inf_mass_prob)
    inf_mass = unit(rng) * opt.inf_mass_max;
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = unit(rng) + 1e-3;  // keep every atom visible
    total += x;
  }
  std::vector<DiscreteDdf::Atom> atoms(n);
  for (int i = 0; i < n; ++i) {
    double loc = uloc(rng);
    atoms[i] = {loc == 0.0 ? opt.loc_max : loc, w[i] / total * (1.0 - inf_mass)};
  }
  return make_ddf(std::move(atoms), inf_mass);
}

std::vector<DiscreteDdf> random_ddfs(Rng& rng, int count, const DdfGenOptions& opt) {
  std::vector<DiscreteDdf> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_ddf(rng, opt));
  return out;
}

DiscreteDdf random_dirac(Rng& rng, double loc_max) {
  std::uniform_real_distribution<double> uloc(0.0, loc_max);
  return epsilon(uloc(rng));
}

std::vector<DdfQuad> random_quads(Rng& rng, int count, const DdfGenOptions& opt,
                                  double dirac_fraction) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<DdfQuad> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    DdfQuad q;
    for (auto& f : q)
      f = unit(rng) < dirac_fraction ? random_dirac(rng, opt.loc_max)
                                     : random_ddf(rng, opt);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<double> random_weights(Rng& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> uw(lo, hi);
  std::vector<double> w(n);
  for (double& x : w) x = uw(rng);
  return w;
}

FiniteSetFunction random_additive_dirac(Rng& rng, const FiniteUniverse& u) {
  return build_dirac(NumericSetFunction::additive(u, random_weights(rng, u.size())));
}

namespace {

NumericSetFunction capped_additive(Rng& rng, const FiniteUniverse& u) {
  const auto w = random_weights(rng, u.size());
  auto mu = NumericSetFunction::additive(u, w);
  std::uniform_real_distribution<double> ucap(0.4, 0.8);
  const double cap = ucap(rng) * mu.at(u.subset_count() - 1);
  std::vector<double> vals(u.subset_count());
  for (std::uint32_t m = 0; m < u.subset_count(); ++m)
    vals[m] = std::min(cap, mu.at(m));
  return NumericSetFunction(u, std::move(vals));
}

}  // namespace

FiniteSetFunction random_capped_dirac(Rng& rng, const FiniteUniverse& u) {
  return build_dirac(capped_additive(rng, u));
}

FiniteSetFunction random_profile_submeasure(Rng& rng, const FiniteUniverse& u) {
  const auto m = capped_additive(rng, u);
  std::uniform_real_distribution<double> uloc(0.2, 1.5);
  std::uniform_real_distribution<double> umass(0.3, 0.7);
  const double l1 = uloc(rng);
  const double p = umass(rng);
  const DiscreteDdf phi = make_ddf({{l1, p}, {l1 + uloc(rng), 1.0 - p}});
  std::vector<DiscreteDdf> vals;
  vals.reserve(u.subset_count());
  for (std::uint32_t e = 0; e < u.subset_count(); ++e)
    vals.push_back(scalar_multiply(m.at(e), phi));
  return FiniteSetFunction(u, std::move(vals));
}

Corrupted corrupt_one_value(Rng& rng, const FiniteSetFunction& gamma) {
  const std::uint32_t n = gamma.universe().subset_count();
  if (n < 2) throw BadDescriptor("nothing to corrupt on an empty universe");
  std::uniform_int_distribution<std::uint32_t> pick(1, n - 1);
  const std::uint32_t mask = pick(rng);
  Corrupted out{gamma, mask};
  DdfGenOptions opt;
  opt.min_atoms = 2;
  opt.max_atoms = 3;
  DiscreteDdf repl = random_ddf(rng, opt);
  while (ddf_eq(repl, gamma.at(mask))) repl = random_ddf(rng, opt);
  out.gamma.set(mask, std::move(repl));
  return out;
}

}  // namespace pmmeas
