#pragma once

#include <span>
#include <string>

#include "loglens/gateway/model_gateway.hpp"
#include "loglens/parsing/category.hpp"

namespace loglens::parsing {

/// Lines of the uploaded file shown to the recognizer.
inline constexpr std::size_t kRecognizerSampleLines = 10;

/// Asks the model which of the sixteen families the sample belongs to.
/// Only the first kRecognizerSampleLines lines are sent. A reply without a
/// usable {"category": ...} object is retried once.
///
/// Throws UnknownCategoryError when the second reply still names no known
/// category, GatewayError on transport failure, EmptyInputError on no lines.
LogCategory identify_log_type(std::span<const std::string> sample_lines,
                              const gateway::ModelGateway& gateway);

}  // namespace loglens::parsing
