#pragma once

#include "json.hpp"
#include "tracecode/report.hpp"

namespace tracecode {

using Json = nlohmann::ordered_json;

Json params_json(const FieldParams& params);
Json report_to_json(const CodeReport& report);

} // namespace tracecode
