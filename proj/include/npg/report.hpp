#pragma once

// JSON encodings shared by the CLI and the tests. Doubles are written with 17
// significant digits so outputs round-trip and compare byte for byte.

#include "npg/constants_pipeline.hpp"
#include "npg/limit_point_sets.hpp"
#include "npg/tuples.hpp"

#include "json.hpp"

#include <string>

namespace npg {

using Json = nlohmann::ordered_json;

std::string format_double(double v);

/// [num, den] as integers when they fit in 64 bits, decimal strings otherwise.
Json rational_pair(const Rational& q);
Json integer_json(const Integer& z);

/// {"intervals":[[lo_num,lo_den,hi_num,hi_den],...]}; an unbounded piece has
/// hi_num = 1, hi_den = 0.
Json to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const Json& j);

Json to_json(const GreedyTrace& trace);
Json to_json(const MeasureCheck& check);
Json to_json(const SieveConstants& c);
Json to_json(const ErdosRankinResult& r);

}  // namespace npg
