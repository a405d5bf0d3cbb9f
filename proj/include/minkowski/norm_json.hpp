#pragma once

#include "minkowski/norm.hpp"

#include "json.hpp"

#include <string>

namespace minkowski {

using json = nlohmann::json;

/// Norm-spec JSON: {"kind": "pnorm" | "polygon" | "hexagonal" | "lens" |
/// "euclidean" | "revolution" | "radial" | "linear", ...payload}.
/// Throws NormSpecError on malformed input.
Norm norm_from_json(const json& j);
json norm_to_json(const Norm& norm);

/// Accepts a JSON file path, inline JSON, or a shorthand: euclidean, l1, linf,
/// diamond, square, hexagonal, lens, p:<p>, euclidean3, revolution-hexagonal.
Norm parse_norm_argument(const std::string& arg);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

}  // namespace minkowski
