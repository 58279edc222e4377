#pragma once

#include "su12/configuration.hpp"
#include "su12/git.hpp"
#include "su12/mat2.hpp"
#include "su12/stability.hpp"

#include <json.hpp>

#include <string_view>
#include <vector>

namespace su12::io {

using Json = nlohmann::ordered_json;

Json to_json(const TruncatedSeries& s);
/// Array of scalar strings; the truncation order is the array length.
TruncatedSeries series_from_json(const Json& j);
Json to_json(const Mat2& m);

/// "zero" | "inf" | {"t": "<scalar>"}
Json to_json(const FiberPoint& x);
FiberPoint fiber_point_from_json(const Json& j);

/// {"base": "<label>", "points": [...]}
Json to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

/// A JSON array of configurations; empty or whitespace-only text is an empty list.
/// Throws ParseError on malformed input.
std::vector<Configuration> parse_configurations(std::string_view text);

Json to_json(const MonomialIndex& m);

/// Integer as a JSON number when it fits in 64 bits, otherwise a decimal string.
Json to_json(const mpz_class& z);

} // namespace su12::io
