#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hmi/density.hpp"
#include "hmi/factorization.hpp"
#include "hmi/ideal.hpp"
#include "hmi/logdensity.hpp"
#include "hmi/network.hpp"
#include "hmi/partitions.hpp"
#include "hmi/simplicial.hpp"

namespace hmi {

using Json = nlohmann::ordered_json;

// Parses JSON text, reporting syntax errors as ParseError with the offset.
Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

// {"p": 5, "facets": [[1,2,3],...]}; "vertices" is written only when the
// ground set is not 1..p.
Json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

// {"p": 9, "generators": [[1,6],...]}, same "vertices" rule.
Json to_json(const SquareFreeIdeal& ideal);
SquareFreeIdeal ideal_from_json(const Json& j);

Json to_json(const Factorization& factorization);

// {"mean": [...], "precision": [[...],...]}
Json to_json(const GaussianSpec& spec);
GaussianSpec gaussian_from_json(const Json& j);

// {"p": 2, "coeffs": {"11": "5", "10": "2"}}; keys are binary digit strings
// or comma separated indices.
Json to_json(const MECSpec& spec);
MECSpec mec_from_json(const Json& j);

// {"nodes": [...], "edges": [{"id":1,"u":1,"v":2},...], "input": 1, "output": 4}
Json to_json(const Network& network);
Network network_from_json(const Json& j);

// {"1,0": "1/2", "0,1": 0.25, ...}. Numbers are read through their decimal
// text, so 0.1 is exactly 1/10.
ExactMomentTable moments_from_json(const Json& j);
Json to_json(const ExactMomentTable& table);

// Density description:
//   {"family": "gaussian", "mean": ..., "precision": ...} (family optional)
//   {"family": "mec", "p": 2, "coeffs": {...}, "box": [lo, hi]}
//   {"family": "product", "factors": [{"kind": "normal"|"logistic", "location": 0, "scale": 1}]}
DensityOracle density_from_json(const Json& j, const IntegrationOptions& options = {});

}  // namespace hmi
