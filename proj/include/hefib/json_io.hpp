#pragma once

#include <json.hpp>

#include "hefib/bounds.hpp"
#include "hefib/enumerator.hpp"
#include "hefib/indices.hpp"
#include "hefib/invariants.hpp"
#include "hefib/ruled_surface.hpp"

namespace hefib {

// Exact-value serialization: every Rat and Int renders as a decimal string
// ("p" or "p/q"), never as a JSON number, so nothing is rounded. Small
// structural integers (g, b, slots, box sizes) stay JSON numbers. Key order
// is fixed for byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const SingularityIndices& si);
Json to_json(const FibrationNumerics& nu);
Json to_json(const GenusBound& gb);
Json to_json(const FeasibleCase& fc);
Json to_json(const ClassifyResult& r);
Json to_json(const DivisorClass& d);
Json to_json(const DoubleCoverInvariants& inv);
Json to_json(const ExampleSurface& ex);
Json to_json(const VerifyReport& rep);
Json to_json(const MinPairing& mp);

}  // namespace hefib
