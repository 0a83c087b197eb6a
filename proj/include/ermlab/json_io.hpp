#pragma once

#include <json.hpp>

#include "ermlab/core.hpp"
#include "ermlab/decomposition.hpp"
#include "ermlab/erm.hpp"
#include "ermlab/hypothesis_class.hpp"

namespace ermlab {

using Json = nlohmann::json;

// Points serialize as arrays of 0/1, least significant variable first.
Json to_json(const Bits& x);
Bits bits_from_json(const Json& j);

// {"n": int, "examples": [{"x": [...], "y": 0|1}, ...]}
Json to_json(const Dataset& data);
Dataset dataset_from_json(const Json& j);

// {"n": int, "support": [{"x": [...], "y": 0|1, "p": float}, ...]}
Json to_json(const FiniteDistribution& dist);
FiniteDistribution distribution_from_json(const Json& j);

// Tagged by "kind"; see README for the per-variant fields.
Json to_json(const Hypothesis& h);
Hypothesis hypothesis_from_json(const Json& j);

Json to_json(const Predicate& p);
Predicate predicate_from_json(const Json& j);

// {"family": str, "n": int, "params": {...}, "predicate": null | {...}}
Json class_descriptor_json(const HypothesisClass& cls);
HypothesisClass class_from_descriptor(const Json& j);

Json to_json(const ErmResult& r);
Json to_json(const RiskDecomposition& d);
Json to_json(const SampleStats& s);
Json to_json(const TradeoffReport& r);

} // namespace ermlab
