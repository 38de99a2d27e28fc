#ifndef PMMEAS_GENERATORS_HPP
#define PMMEAS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "pmmeas/ddf.hpp"
#include "pmmeas/delta_ops.hpp"
#include "pmmeas/measures.hpp"

namespace pmmeas {

using Rng = std::mt19937_64;

struct DdfGenOptions {
  int min_atoms = 1;
  int max_atoms = 3;
  double loc_max = 10.0;
  double inf_mass_prob = 0.0;  // chance of parking some mass at +inf
  double inf_mass_max = 0.3;
};

// Random finitely supported distribution function: uniform locations in
// (0, loc_max], Dirichlet-style masses summing to one.
DiscreteDdf random_ddf(Rng& rng, const DdfGenOptions& opt = {});

std::vector<DiscreteDdf> random_ddfs(Rng& rng, int count,
                                     const DdfGenOptions& opt = {});

// Unit step at a uniform location in [0, loc_max].
DiscreteDdf random_dirac(Rng& rng, double loc_max = 10.0);

// Quadruples for dominance checks: a mix of general and unit-step entries so
// violations expressible on steps are reachable.
std::vector<DdfQuad> random_quads(Rng& rng, int count,
                                  const DdfGenOptions& opt = {},
                                  double dirac_fraction = 0.25);

std::vector<double> random_weights(Rng& rng, int n, double lo = 0.2,
                                   double hi = 5.0);

// gamma_E = epsilon(sum of weights in E): an additive generator, a measure
// under every sum-based operation.
FiniteSetFunction random_additive_dirac(Rng& rng, const FiniteUniverse& u);

// Same but with the sum clipped at a cap below the total weight, which
// breaks additivity while keeping subadditivity and monotonicity: an
// antimonotone submeasure that is not a measure.
FiniteSetFunction random_capped_dirac(Rng& rng, const FiniteUniverse& u);

// gamma_E = m(E) (.) phi for a capped-additive m and a random two-atom
// profile phi: a non-Dirac antimonotone submeasure.
FiniteSetFunction random_profile_submeasure(Rng& rng, const FiniteUniverse& u);

struct Corrupted {
  FiniteSetFunction gamma;
  std::uint32_t mask;  // the replaced subset (never the empty set)
};

// Replaces one non-empty subset's value with an unrelated multi-atom
// function; theorem checkers must notice.
Corrupted corrupt_one_value(Rng& rng, const FiniteSetFunction& gamma);

}  // namespace pmmeas

#endif
