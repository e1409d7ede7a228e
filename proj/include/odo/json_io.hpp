#pragma once

// JSON documents for scales, full-group elements, decompositions, decision
// reports and oracle checks. Integers that fit in 64 bits are JSON numbers,
// larger ones are decimal strings.

#include "odo/decide.hpp"
#include "odo/fullgroup.hpp"
#include "odo/oracle.hpp"
#include "odo/worked_examples.hpp"

#include <json.hpp>

#include <string>

namespace odo {

using Json = nlohmann::json;

Json int_to_json(const Int& value);
Int int_from_json(const Json& j, const std::string& where);

// Strict: unknown keys and missing required keys raise Parse errors.
ZdScale scale_from_json(const Json& j);
Json scale_to_json(const ZdScale& scale);
ZdScale load_scale(const std::string& path);
Json load_json(const std::string& path);

// The tower must reach the element's depth.
FullGroupElement element_from_json(const TowerPtr& tower, const Json& j);
Json element_to_json(const FullGroupElement& f);
// Level and depth of an element document, read without building it.
std::pair<unsigned, unsigned> element_shape(const Json& j);

Json decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const TowerPtr& tower, const Json& j);

Json invariants_block(const ScaleInvariants& inv);
Json certificate_to_json(const TrivialityCertificate& cert);
Json report_to_json(const DecisionReport& report);
Json check_to_json(const CheckReport& check);
Json example_to_json(const ExampleRecord& record);

}  // namespace odo
