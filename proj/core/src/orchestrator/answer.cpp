#include "loglens/orchestrator/answer.hpp"

#include "loglens/common/errors.hpp"

namespace loglens::parsing {

void to_json(nlohmann::json& j, const EventTemplate& t) {
    j = {{"event_id", t.event_id}, {"template", t.template_text}, {"occurrences", t.occurrences}};
}

void from_json(const nlohmann::json& j, EventTemplate& t) {
    t.event_id = j.at("event_id").get<std::string>();
    t.template_text = j.at("template").get<std::string>();
    t.occurrences = j.at("occurrences").get<std::size_t>();
}

}  // namespace loglens::parsing

namespace loglens::routing {

void to_json(nlohmann::json& j, const RouteDecision& route) {
    j = {{"tier", to_string(route.tier)}, {"fallback", route.fallback}};
    j["tool"] = route.tool ? nlohmann::json(to_string(*route.tool)) : nlohmann::json();
    j["keywords"] = route.keywords ? nlohmann::json(*route.keywords) : nlohmann::json();
    j["event_ids"] = route.event_ids ? nlohmann::json(*route.event_ids) : nlohmann::json();
}

void from_json(const nlohmann::json& j, RouteDecision& route) {
    auto tier = tier_from_string(j.at("tier").get<std::string>());
    if (!tier) throw ConfigError("unknown tier in route JSON");
    route.tier = *tier;
    route.tool.reset();
    route.keywords.reset();
    route.event_ids.reset();
    if (j.contains("tool") && !j.at("tool").is_null()) {
        route.tool = tool_from_string(j.at("tool").get<std::string>());
        if (!route.tool) throw ConfigError("unknown tool in route JSON");
    }
    if (j.contains("keywords") && !j.at("keywords").is_null()) {
        route.keywords = j.at("keywords").get<std::vector<std::string>>();
    }
    if (j.contains("event_ids") && !j.at("event_ids").is_null()) {
        route.event_ids = j.at("event_ids").get<std::vector<std::string>>();
    }
    route.fallback = j.value("fallback", false);
}

}  // namespace loglens::routing

namespace loglens::search {

void to_json(nlohmann::json& j, const SearchResult& result) {
    auto matches = nlohmann::json::array();
    for (const auto& m : result.matches) {
        matches.push_back({{"line_id", m.line_id}, {"text", m.text}});
    }
    j = {{"matches", std::move(matches)},
         {"total", result.total},
         {"truncated", result.truncated},
         {"shown", result.shown}};
}

void from_json(const nlohmann::json& j, SearchResult& result) {
    result.matches.clear();
    for (const auto& m : j.at("matches")) {
        result.matches.push_back({m.at("line_id").get<std::size_t>(), m.at("text").get<std::string>()});
    }
    result.total = j.at("total").get<std::size_t>();
    result.truncated = j.at("truncated").get<bool>();
    result.shown = j.at("shown").get<std::size_t>();
}

}  // namespace loglens::search

namespace loglens::orchestrator {

using routing::Tier;
using routing::Tool;

std::string_view to_string(PromptKind kind) noexcept {
    switch (kind) {
        case PromptKind::AllEvent: return "all_event";
        case PromptKind::Retrieve: return "retrieve";
        case PromptKind::Search: return "search";
        case PromptKind::Event: return "event";
        case PromptKind::General: return "general";
    }
    return "";
}

namespace {

PromptKind prompt_kind_from_string(const std::string& s) {
    for (auto k : {PromptKind::AllEvent, PromptKind::Retrieve, PromptKind::Search,
                   PromptKind::Event, PromptKind::General}) {
        if (s == to_string(k)) return k;
    }
    throw ConfigError("unknown prompt_kind '" + s + "'");
}

}  // namespace

PromptKind prompt_kind_for(const routing::RouteDecision& route) noexcept {
    switch (route.tier) {
        case Tier::All: return PromptKind::AllEvent;
        case Tier::General: return PromptKind::General;
        case Tier::Partial: break;
    }
    switch (route.tool.value_or(Tool::Semantic)) {
        case Tool::Keyword: return PromptKind::Search;
        case Tool::Event: return PromptKind::Event;
        case Tool::Semantic: return PromptKind::Retrieve;
    }
    return PromptKind::Retrieve;
}

bool Answer::consistent() const {
    if (!route.well_formed()) return false;
    if (prompt_kind != prompt_kind_for(route)) return false;
    const bool has_refs = !std::holds_alternative<std::monostate>(references);
    if (has_refs != (route.tier == Tier::Partial)) return false;
    if (route.tool == Tool::Semantic) {
        return std::holds_alternative<std::vector<RetrievedChunk>>(references);
    }
    if (route.tool) return std::holds_alternative<LineReferences>(references);
    return true;
}

void to_json(nlohmann::json& j, const Answer& answer) {
    j = {{"text", answer.text},
         {"route", answer.route},
         {"prompt_kind", to_string(answer.prompt_kind)}};
    if (const auto* lines = std::get_if<LineReferences>(&answer.references)) {
        j["references"] = {{"kind", "lines"},
                           {"result", lines->result},
                           {"relevant_templates", lines->relevant_templates},
                           {"unknown_event_ids", lines->unknown_event_ids}};
    } else if (const auto* chunks = std::get_if<std::vector<RetrievedChunk>>(&answer.references)) {
        auto arr = nlohmann::json::array();
        for (const auto& c : *chunks) {
            arr.push_back({{"chunk_id", c.chunk_id},
                           {"first_line", c.first_line},
                           {"last_line", c.last_line},
                           {"score", c.score},
                           {"text", c.text}});
        }
        j["references"] = {{"kind", "chunks"}, {"chunks", std::move(arr)}};
    } else {
        j["references"] = nullptr;
    }
}

void from_json(const nlohmann::json& j, Answer& answer) {
    answer.text = j.at("text").get<std::string>();
    answer.route = j.at("route").get<routing::RouteDecision>();
    answer.prompt_kind = prompt_kind_from_string(j.at("prompt_kind").get<std::string>());
    const auto& refs = j.at("references");
    if (refs.is_null()) {
        answer.references = std::monostate{};
    } else if (refs.at("kind") == "lines") {
        LineReferences lines;
        lines.result = refs.at("result").get<search::SearchResult>();
        lines.relevant_templates =
            refs.at("relevant_templates").get<std::vector<parsing::EventTemplate>>();
        lines.unknown_event_ids = refs.at("unknown_event_ids").get<std::vector<std::string>>();
        answer.references = std::move(lines);
    } else {
        std::vector<RetrievedChunk> chunks;
        for (const auto& c : refs.at("chunks")) {
            chunks.push_back({c.at("chunk_id").get<std::size_t>(),
                              c.at("first_line").get<std::size_t>(),
                              c.at("last_line").get<std::size_t>(), c.at("score").get<double>(),
                              c.at("text").get<std::string>()});
        }
        answer.references = std::move(chunks);
    }
}

}  // namespace loglens::orchestrator
