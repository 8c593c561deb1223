#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace loglens::csv {

/// RFC-4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in double quotes with inner quotes doubled.
std::string quote_field(std::string_view field);

std::string format_row(const std::vector<std::string>& fields);

/// Parses RFC-4180 text into rows. Quoted fields may span lines.
std::vector<std::vector<std::string>> parse(std::string_view text);

}  // namespace loglens::csv
