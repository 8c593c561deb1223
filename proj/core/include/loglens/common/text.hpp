#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loglens::text {

/// Splits raw file content into lines. A trailing '\n' does not open an
/// extra empty line; '\r' before '\n' is kept as part of the line.
std::vector<std::string> split_lines(std::string_view raw);

/// Like split_lines but every element keeps its own terminator, so that
/// concatenating the pieces reproduces `raw` exactly.
std::vector<std::string_view> split_lines_keep_newline(std::string_view raw);

std::vector<std::string> split_whitespace(std::string_view s);
std::size_t count_whitespace_tokens(std::string_view s);

std::string to_lower(std::string_view s);

/// Python str.strip() semantics over ASCII whitespace.
std::string_view strip(std::string_view s);

bool contains_digit(std::string_view s);

/// Case-insensitive (ASCII) substring test.
bool icontains(std::string_view haystack, std::string_view needle);

bool iequals(std::string_view a, std::string_view b);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t value);

/// Renders a string the way Python's repr() would for printable text.
std::string py_repr(std::string_view s);

/// Renders a list of strings as Python's repr() of a list: ['a', 'b'].
std::string py_repr(const std::vector<std::string>& items);

}  // namespace loglens::text
