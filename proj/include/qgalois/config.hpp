#pragma once

#include <string>

#include "qgalois/cartan.hpp"
#include "qgalois/params.hpp"
#include "qgalois/scalar.hpp"

namespace qgalois {

// Engine configuration: one Cartan datum, the quantum parameter q, and the
// upper lambda entries. The JSON document shape is
//   "cartan": {"family": "A", "rank": 2}  or  {"matrix": [[2,-1],[-1,2]], "d": [1,1]}
//   "q":      {"num": 2, "den": 1}        (den optional; values may be
//                                          integers or decimal strings)
//   "lambda": [[1, 2, 3, 1], ...]         (i, j, numerator, denominator)
// Missing q defaults to 2; missing lambda defaults to the trivial family.
struct EngineConfig {
    CartanDatum cartan;
    Scalar q;
    LambdaEntries lambda;
};

// Rank-two A family with q = 2 and lambda_12 = 3.
EngineConfig default_config();

// Parses a JSON document (resp. reads and parses a file). Malformed
// documents raise Error with a description; the parameter invariants
// themselves are enforced later by config_params.
EngineConfig parse_config(const std::string& json_text);
EngineConfig load_config(const std::string& path);

// Validates and binds the configuration into a ParamSet.
ParamSet config_params(const EngineConfig& cfg);

}  // namespace qgalois
