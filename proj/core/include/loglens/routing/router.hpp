#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loglens/gateway/model_gateway.hpp"

namespace loglens::routing {

enum class Tier { All, Partial, General };
enum class Tool { Keyword, Event, Semantic };

std::string_view to_string(Tier tier) noexcept;
std::string_view to_string(Tool tool) noexcept;
std::optional<Tier> tier_from_string(std::string_view s);
/// Accepts "se" as an alias for semantic.
std::optional<Tool> tool_from_string(std::string_view s);

/// Where a query goes. `tool` is set iff tier is Partial; `keywords` only
/// for Keyword and `event_ids` only for Event, each non-empty when set.
struct RouteDecision {
    Tier tier = Tier::Partial;
    std::optional<Tool> tool = Tool::Semantic;
    std::optional<std::vector<std::string>> keywords;
    std::optional<std::vector<std::string>> event_ids;
    /// True when a routing reply was unusable and the semantic fallback was taken.
    bool fallback = false;

    static RouteDecision all() { return {Tier::All, std::nullopt, {}, {}, false}; }
    static RouteDecision general() { return {Tier::General, std::nullopt, {}, {}, false}; }
    static RouteDecision semantic(bool fallback = false) {
        return {Tier::Partial, Tool::Semantic, {}, {}, fallback};
    }
    static RouteDecision keyword(std::vector<std::string> words) {
        return {Tier::Partial, Tool::Keyword, std::move(words), {}, false};
    }
    static RouteDecision event(std::vector<std::string> ids) {
        return {Tier::Partial, Tool::Event, {}, std::move(ids), false};
    }

    /// Whether the type invariants hold.
    bool well_formed() const;

    friend bool operator==(const RouteDecision&, const RouteDecision&) = default;
};

/// Level-1 routing. Retries once when the reply has no recognizable
/// {"choice": ...}; then throws RouteParseError.
Tier route_level1(std::string_view query, const gateway::ModelGateway& gateway);

struct Level2Route {
    Tool tool = Tool::Semantic;
    std::vector<std::string> keywords;
    std::vector<std::string> event_ids;
};

/// Level-2 routing for Partial queries. Retries once on an unusable reply,
/// then throws RouteParseError. Throws MissingParamsError when keyword or
/// event is chosen without a non-empty list. Lists are deduplicated
/// case-insensitively, keeping first occurrences.
Level2Route route_level2(std::string_view query, const gateway::ModelGateway& gateway);

/// Both levels with the fallback policy applied: any RouteParseError or
/// MissingParamsError yields Partial/Semantic with `fallback` set. Gateway
/// failures still propagate.
RouteDecision route_query(std::string_view query, const gateway::ModelGateway& gateway);

/// Case-insensitive dedup preserving first occurrences; blanks dropped.
std::vector<std::string> dedupe_case_insensitive(const std::vector<std::string>& items);

}  // namespace loglens::routing
