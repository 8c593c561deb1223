#pragma once

#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace loglens::parsing {

struct DrainConfig;

inline constexpr std::string_view kWildcard = "<*>";

struct PreprocessedLine {
    /// One value per header field of the log format, empty when the line did
    /// not match the format.
    std::vector<std::string> header_fields;
    std::string content;
    /// `content` with every mask match replaced by "<*>", split on whitespace.
    std::vector<std::string> tokens;
    bool matched_format = false;
};

/// Compiled form of a DrainConfig's log format and masks. Immutable after
/// construction and safe to share between threads.
class LinePreprocessor {
public:
    explicit LinePreprocessor(const DrainConfig& config);

    PreprocessedLine operator()(std::string_view line) const;

    /// Header field names in format order, excluding Content.
    const std::vector<std::string>& header_names() const noexcept { return header_names_; }

private:
    std::vector<std::string> field_names_;
    std::vector<std::string> header_names_;
    std::size_t content_field_ = 0;
    std::regex format_;
    std::vector<std::regex> masks_;
};

/// Convenience wrapper that compiles `config` for a single line.
PreprocessedLine preprocess_line(std::string_view line, const DrainConfig& config);

}  // namespace loglens::parsing
