#pragma once

#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

namespace loglens {

/// Finds the first balanced `{...}` span in a model reply that parses as a
/// JSON object, skipping any preamble or trailing chatter. Braces inside
/// string literals do not count toward nesting.
std::optional<nlohmann::json> extract_json_object(std::string_view reply);

}  // namespace loglens
