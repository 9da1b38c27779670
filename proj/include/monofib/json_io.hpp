#pragma once

#include "monofib/catalog.hpp"
#include "monofib/fibration.hpp"
#include "monofib/pullback.hpp"
#include "monofib/stabilization.hpp"
#include "monofib/universality.hpp"

#include <json.hpp>

#include <string>

namespace monofib {

using Json = nlohmann::json;

/// Fibration files:
///
///   {"base": {"boundary": d, "genus": h},
///    "bundle": [{"label": str, "matrix": [[int]], "perm": [1-based ints]}],
///    "cycles": [{"curve": {"class": "nonsep" | {"sep": [[g1,b1],[g2,b2]]},
///                          "hom": [int], "label": str},
///                "sign": 1 | -1}],
///    "fiber": {"boundary": b, "genus": g}}
///
/// Keys are sorted on output; unknown keys and non-integer numbers are rejected
/// on input with InputError.
Json curve_to_json(const Curve& c);
Curve curve_from_json(const Json& j, const SurfaceSpec& surface);

Json fibration_to_json(const LefschetzFibration& f);
LefschetzFibration fibration_from_json(const Json& j);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

LefschetzFibration parse_fibration(const std::string& text);
LefschetzFibration read_fibration_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json invariants_to_json(const InvariantReport& r);
Json universality_to_json(const UniversalityReport& r);
Json witness_to_json(const WitnessResult& w);
Json reduce_to_json(const ReduceResult& r);

/// Every shipped catalog: F_{1,0} and F_{g,1} for g = 1..max_genus.
Json catalog_to_json(int max_genus = 6);

}  // namespace monofib
