#ifndef PMMEAS_SUITES_HPP
#define PMMEAS_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pmmeas/delta_ops.hpp"
#include "pmmeas/json_io.hpp"

namespace pmmeas {

// Canonical suite order; run_suites executes any subset of these.
const std::vector<std::string>& all_suite_names();

// The operations the triangle-axioms suite exercises when the config does
// not name its own list.
std::vector<DeltaOp> default_delta_ops();

struct SuiteConfig {
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  double oracle_grid_step = 1e-3;
  std::vector<int> universe_sizes = {4, 5};
  std::vector<std::string> suites = all_suite_names();
  std::vector<DeltaOp> delta_ops = default_delta_ops();
};

// Reads {"seed", "tolerance", "oracle_grid_step", "universe_sizes",
// "suites", "delta_ops"}; every key optional, unknown keys rejected.
// Throws ConfigParse on malformed values and SuiteUnknown for suite names
// outside all_suite_names().  An explicit empty "suites" array selects
// nothing (run_suites then emits an empty passing report).
SuiteConfig config_from_json(const Json& j);
Json config_to_json(const SuiteConfig& c);

// Runs the selected suites sequentially and returns the report:
//   {"schema_version": 1, "parallelism": 1, "config": {...},
//    "suites": [{"name", "claim", "pass",
//                "checks": [{"name", "pass", "info"}], "elapsed_ms"}],
//    "all_pass": b, "elapsed_ms": ms}
// Identical configs produce identical reports up to the timing fields.
// Failures inside a suite (including reported-not-fatal budget stops) show
// up as failing checks, never as exceptions.
Json run_suites(const SuiteConfig& c);

// Deletes every "elapsed_ms" field in place so two reports can be compared
// byte for byte.
void strip_timing(Json& j);

// Exploratory probes, reported in the same envelope:
//   find-nonassoc           random triples through the grid oracle for a
//                           composition with no exact path; informational,
//                           "pass" is always true
//   find-pi-top-violation   searches additive instances for a disjoint pair
//                           the pointwise-max product fails on; "pass" is
//                           whether a witness was found within the budget
//   s-tau-census            sizes of the cleanly-splitting subset algebra
//                           over random three-point spaces; informational
// The budget caps the number of instances tried; exhaustion is reported in
// the result, not thrown.  Throws SuiteUnknown for an unknown mode.
Json run_explore(const SuiteConfig& c, const std::string& mode, int budget);

}  // namespace pmmeas

#endif
