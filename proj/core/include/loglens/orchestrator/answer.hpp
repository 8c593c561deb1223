#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "loglens/parsing/drain.hpp"
#include "loglens/routing/router.hpp"
#include "loglens/search/search_tools.hpp"

namespace loglens::orchestrator {

enum class PromptKind { AllEvent, Retrieve, Search, Event, General };

std::string_view to_string(PromptKind kind) noexcept;

/// Keyword or event search evidence.
struct LineReferences {
    search::SearchResult result;
    std::vector<parsing::EventTemplate> relevant_templates;
    std::vector<std::string> unknown_event_ids;

    friend bool operator==(const LineReferences&, const LineReferences&) = default;
};

/// Semantic search evidence.
struct RetrievedChunk {
    std::size_t chunk_id = 0;
    std::size_t first_line = 0;
    std::size_t last_line = 0;
    double score = 0.0;
    std::string text;

    friend bool operator==(const RetrievedChunk&, const RetrievedChunk&) = default;
};

using References = std::variant<std::monostate, LineReferences, std::vector<RetrievedChunk>>;

/// A generated reply plus the route taken and the evidence shown to the
/// model. References are present iff the tier is Partial.
struct Answer {
    std::string text;
    routing::RouteDecision route;
    References references;
    PromptKind prompt_kind = PromptKind::General;

    /// Whether references and prompt kind agree with the route.
    bool consistent() const;

    friend bool operator==(const Answer&, const Answer&) = default;
};

PromptKind prompt_kind_for(const routing::RouteDecision& route) noexcept;

void to_json(nlohmann::json& j, const Answer& answer);
void from_json(const nlohmann::json& j, Answer& answer);

}  // namespace loglens::orchestrator

namespace loglens::parsing {
void to_json(nlohmann::json& j, const EventTemplate& t);
void from_json(const nlohmann::json& j, EventTemplate& t);
}  // namespace loglens::parsing

namespace loglens::routing {
void to_json(nlohmann::json& j, const RouteDecision& route);
void from_json(const nlohmann::json& j, RouteDecision& route);
}  // namespace loglens::routing

namespace loglens::search {
void to_json(nlohmann::json& j, const SearchResult& result);
void from_json(const nlohmann::json& j, SearchResult& result);
}  // namespace loglens::search
