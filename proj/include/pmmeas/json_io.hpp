#ifndef PMMEAS_JSON_IO_HPP
#define PMMEAS_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "pmmeas/ddf.hpp"
#include "pmmeas/delta_ops.hpp"
#include "pmmeas/measures.hpp"
#include "pmmeas/ppm.hpp"
#include "pmmeas/scalar_ops.hpp"

namespace pmmeas {

using Json = nlohmann::json;

// Serial forms.  All from_json readers throw ConfigParse on anything
// malformed: wrong type, missing field, unknown kind, or payload values the
// constructors reject.
//
//   distribution   {"atoms": [[loc, mass], ...], "inf_mass": m}
//   scalar op      {"kind": "tnorm-M" | "tnorm-Pi" | "tnorm-W" | "tnorm-D"
//                           | "agg-AM"}
//                  {"kind": "dual", "base": <scalar>}
//                  {"kind": "table", "n": k, "values": [k*k row-major],
//                   "left_continuous": b, "name": s}
//   l op           {"kind": "K_alpha", "alpha": a}
//                  {"kind": "K_inf"}
//                  {"kind": "ordinal_sum", "blocks":
//                      [{"lo": .., "hi": .., "x": [..], "t": [..]}, ...]}
//   delta op       {"kind": "tau_T",  "T": <scalar>}
//                  {"kind": "tau_LA", "L": <l op>, "A": <scalar>}
//                  {"kind": "pi_top", "top": <scalar>}
//                  {"kind": "rho_LQ", "L": <l op>, "Q": <scalar>}
//                  {"kind": "convolution"}
//   set function   {"universe": [labels], "values": {"<mask>": <distribution>}}
//                  (decimal subset masks; every mask must be present)
//   space          {"points": [labels], "tau": <delta op>,
//                   "dist": {"<p>|<q>": <distribution>}} for p < q; the
//                  diagonal is implicit, missing off-diagonal entries default
//                  to the unit step at zero.
//
// Closure-valued scalar ops have no serial form; scalar_to_json throws
// ConfigParse for them.

Json ddf_to_json(const DiscreteDdf& f);
DiscreteDdf ddf_from_json(const Json& j);

Json scalar_to_json(const ScalarOp& op);
ScalarOp scalar_from_json(const Json& j);

Json l_to_json(const LOp& l);
LOp l_from_json(const Json& j);

Json delta_to_json(const DeltaOp& op);
DeltaOp delta_from_json(const Json& j);

Json set_function_to_json(const FiniteSetFunction& gamma);
FiniteSetFunction set_function_from_json(const Json& j);

Json space_to_json(const FinitePpMSpace& s);
FinitePpMSpace space_from_json(const Json& j);

// CSV rendering of grid_sample: header "x,F(x)" then one row per grid point.
std::string ddf_to_csv(const DiscreteDdf& f, double x_max, double step);

// Whole-file helpers; both throw IoFailure with the path in the message.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pmmeas

#endif
