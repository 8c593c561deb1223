#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Stage prompts sent to the chat model. Renderers substitute values into
// fixed text; everything outside the substitution sites is byte-stable and
// covered by the prompt-fidelity tests.
namespace loglens::prompts {

/// System message used for every chat call.
extern const std::string_view kSystemMessage;

/// The Llama-3 chat frame wrapping the system message and a user prompt,
/// for backends that take a single raw completion string.
std::string render_llama_frame(std::string_view query_str);

std::string render_recognizer(const std::vector<std::string>& categories,
                              const std::vector<std::string>& log_lines);

std::string render_router_level1(std::string_view question);
std::string render_router_level2(std::string_view question);

struct AllEventContext {
    std::string log_file_name;
    /// Template table rows without the CSV header, already CSV-formatted.
    std::vector<std::string> template_rows;
    std::string first_line;
    std::string last_line;
    std::size_t line_count = 0;
    std::size_t template_count = 0;
    std::string question;
};

std::string render_all_event(const AllEventContext& ctx);

std::string render_retrieve(std::string_view context_str, std::string_view query_str);

struct MatchedLinesContext {
    std::size_t total = 0;
    /// Python-list rendering of keywords or event ids.
    std::string selector;
    bool truncated = false;
    std::size_t max_lines = 0;
    /// Matched lines (already trimmed when truncated), newline-joined.
    std::string context;
    std::string question;
};

std::string render_search(const MatchedLinesContext& ctx);

/// `relevant_events` is the Python-list rendering of the template rows.
std::string render_event(const MatchedLinesContext& ctx, std::string_view relevant_events);

}  // namespace loglens::prompts
