#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "loglens/parsing/drain.hpp"

namespace loglens::search {

inline constexpr std::size_t kDefaultMaxLines = 200;

struct LineMatch {
    std::size_t line_id = 0;  // 1-based
    std::string text;

    friend bool operator==(const LineMatch&, const LineMatch&) = default;
};

/// Matched lines in file order. `total` counts every match even after
/// truncation; `shown == matches.size()`; `truncated == (total > shown)`.
struct SearchResult {
    std::vector<LineMatch> matches;
    std::size_t total = 0;
    bool truncated = false;
    std::size_t shown = 0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Lines containing any keyword as a case-insensitive substring. Throws
/// EmptyKeywordsError when no non-empty keyword is given.
SearchResult keyword_search(std::span<const std::string> raw_lines,
                            std::span<const std::string> keywords);

struct EventSearchResult {
    SearchResult result;
    /// Template rows for the requested ids that exist, in request order.
    std::vector<parsing::EventTemplate> relevant_templates;
    /// Requested ids with no template.
    std::vector<std::string> unknown_event_ids;

    friend bool operator==(const EventSearchResult&, const EventSearchResult&) = default;
};

/// Rows whose event id is in `event_ids`. `raw_lines` supplies the line
/// text (the structured log holds only the parsed content).
EventSearchResult event_search(const parsing::StructuredLog& structured,
                               std::span<const parsing::EventTemplate> templates,
                               std::span<const std::string> raw_lines,
                               std::span<const std::string> event_ids);

/// Keeps the first `max_lines` matches; `total` is left untouched.
SearchResult truncate_context(SearchResult result, std::size_t max_lines);

}  // namespace loglens::search
