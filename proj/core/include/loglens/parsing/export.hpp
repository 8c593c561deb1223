#pragma once

#include <span>
#include <string>
#include <vector>

#include "loglens/parsing/drain.hpp"

namespace loglens::parsing {

inline constexpr std::string_view kTemplatesCsvHeader = "EventId,EventTemplate,Occurrences";

/// Template table in discovery order, header row first.
std::string export_templates_csv(std::span<const EventTemplate> templates);

/// Template rows without the header, one CSV-formatted string per row.
std::vector<std::string> template_csv_rows(std::span<const EventTemplate> templates);

/// LineId, the header fields, Content, EventId; one row per input line.
std::string export_structured_csv(const StructuredLog& structured);

}  // namespace loglens::parsing
