#pragma once

#include <json.hpp>

#include "twistlap/limits.hpp"
#include "twistlap/operators.hpp"
#include "twistlap/spectral.hpp"

namespace twistlap {

using json = nlohmann::json;

// Rational -> "p/q" (or "p" when q = 1).
json to_json(const Rational& r);

// BiPoly -> [{"i":, "j":, "c": "p/q"}, ...] sorted by (i, j).
json to_json(const BiPoly& p);

// {"pi_multiple": "p/q"} or {"divergent": true}.
json to_json(const MomentResult& m);

// {"identity":, "probes":, "passed":, "failure": null | {...}}.
json to_json(const OperatorReport& r);

// {"m":, "n":, "nu":, "points": [{"kappa":, "diff":}], "order":, "match":}.
json to_json(const ConvergenceReport& r);

// {"kappa":, "nu":, "entries": [{"m":, "n":, "routes_equal":, "jacobi_ratio":}]}.
json to_json(const RouteCrosscheck& r);

json to_json(const WeightedFn& f);

// Shortest-round-trip decimal with up to 17 significant digits.
std::string format_double(double v);

}  // namespace twistlap
