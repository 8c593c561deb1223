#include "loglens/search/search_tools.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"

namespace loglens::search {

namespace {

void finish(SearchResult& r) {
    r.total = r.matches.size();
    r.shown = r.matches.size();
    r.truncated = false;
}

}  // namespace

SearchResult keyword_search(std::span<const std::string> raw_lines,
                            std::span<const std::string> keywords) {
    std::vector<std::string> needles;
    for (const auto& k : keywords) {
        if (!k.empty()) needles.push_back(text::to_lower(k));
    }
    if (needles.empty()) throw EmptyKeywordsError("keyword_search: no keywords given");

    SearchResult result;
    for (std::size_t i = 0; i < raw_lines.size(); ++i) {
        const auto lowered = text::to_lower(raw_lines[i]);
        const bool hit = std::any_of(needles.begin(), needles.end(), [&](const std::string& n) {
            return lowered.find(n) != std::string::npos;
        });
        if (hit) result.matches.push_back({i + 1, raw_lines[i]});
    }
    finish(result);
    return result;
}

EventSearchResult event_search(const parsing::StructuredLog& structured,
                               std::span<const parsing::EventTemplate> templates,
                               std::span<const std::string> raw_lines,
                               std::span<const std::string> event_ids) {
    if (event_ids.empty()) throw PreconditionError("event_search: no event ids given");

    std::unordered_map<std::string, const parsing::EventTemplate*> by_id;
    for (const auto& t : templates) by_id.emplace(text::to_lower(t.event_id), &t);

    EventSearchResult out;
    std::unordered_set<std::string> wanted;
    for (const auto& id : event_ids) {
        auto key = text::to_lower(text::strip(id));
        if (!wanted.insert(key).second) continue;
        if (auto it = by_id.find(key); it != by_id.end()) {
            out.relevant_templates.push_back(*it->second);
        } else {
            out.unknown_event_ids.push_back(id);
        }
    }

    for (const auto& row : structured.rows) {
        if (!wanted.contains(text::to_lower(row.event_id))) continue;
        const auto& line = row.line_id - 1 < raw_lines.size() ? raw_lines[row.line_id - 1]
                                                               : row.content;
        out.result.matches.push_back({row.line_id, line});
    }
    finish(out.result);
    return out;
}

SearchResult truncate_context(SearchResult result, std::size_t max_lines) {
    if (max_lines == 0) throw PreconditionError("truncate_context: max_lines must be >= 1");
    if (result.matches.size() > max_lines) result.matches.resize(max_lines);
    result.shown = result.matches.size();
    result.truncated = result.total > result.shown;
    return result;
}

}  // namespace loglens::search
