#include "loglens/routing/router.hpp"

#include <unordered_set>

#include "loglens/common/errors.hpp"
#include "loglens/common/json_extract.hpp"
#include "loglens/common/text.hpp"
#include "loglens/prompts/templates.hpp"

namespace loglens::routing {

namespace {

gateway::ChatRequest make_request(std::string prompt, const gateway::ModelGateway& gateway) {
    gateway::ChatRequest request;
    request.system_text = std::string(prompts::kSystemMessage);
    request.user_text = std::move(prompt);
    request.temperature = gateway.default_temperature();
    request.model_name = gateway.chat_model();
    return request;
}

std::optional<std::string> string_field(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) return std::nullopt;
    return it->get<std::string>();
}

// Collects a list field; a bare string counts as a one-element list.
std::vector<std::string> list_field(const nlohmann::json& obj, const char* key) {
    std::vector<std::string> out;
    auto it = obj.find(key);
    if (it == obj.end()) return out;
    auto take = [&out](const nlohmann::json& v) {
        if (v.is_string()) {
            out.push_back(v.get<std::string>());
        } else if (v.is_number()) {
            out.push_back(v.dump());
        }
    };
    if (it->is_array()) {
        for (const auto& v : *it) take(v);
    } else {
        take(*it);
    }
    return out;
}

struct ParsedLevel2 {
    Tool tool;
    nlohmann::json obj;
};

}  // namespace

std::string_view to_string(Tier tier) noexcept {
    switch (tier) {
        case Tier::All: return "all";
        case Tier::Partial: return "partial";
        case Tier::General: return "general";
    }
    return "";
}

std::string_view to_string(Tool tool) noexcept {
    switch (tool) {
        case Tool::Keyword: return "keyword";
        case Tool::Event: return "event";
        case Tool::Semantic: return "semantic";
    }
    return "";
}

std::optional<Tier> tier_from_string(std::string_view s) {
    auto v = text::to_lower(text::strip(s));
    if (v == "all") return Tier::All;
    if (v == "partial") return Tier::Partial;
    if (v == "general") return Tier::General;
    return std::nullopt;
}

std::optional<Tool> tool_from_string(std::string_view s) {
    auto v = text::to_lower(text::strip(s));
    if (v == "keyword") return Tool::Keyword;
    if (v == "event") return Tool::Event;
    if (v == "semantic" || v == "se") return Tool::Semantic;
    return std::nullopt;
}

bool RouteDecision::well_formed() const {
    if ((tier == Tier::Partial) != tool.has_value()) return false;
    const bool want_keywords = tool == Tool::Keyword;
    const bool want_events = tool == Tool::Event;
    if (keywords.has_value() != want_keywords) return false;
    if (event_ids.has_value() != want_events) return false;
    if (keywords && keywords->empty()) return false;
    if (event_ids && event_ids->empty()) return false;
    return true;
}

std::vector<std::string> dedupe_case_insensitive(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& item : items) {
        auto trimmed = std::string(text::strip(item));
        if (trimmed.empty()) continue;
        if (seen.insert(text::to_lower(trimmed)).second) out.push_back(std::move(trimmed));
    }
    return out;
}

Tier route_level1(std::string_view query, const gateway::ModelGateway& gateway) {
    if (text::strip(query).empty()) throw PreconditionError("route_level1: empty query");
    const auto request = make_request(prompts::render_router_level1(query), gateway);
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto obj = extract_json_object(gateway.chat_complete(request));
        if (!obj) continue;
        if (auto choice = string_field(*obj, "choice")) {
            if (auto tier = tier_from_string(*choice)) return *tier;
        }
    }
    throw RouteParseError("level-1 router reply had no valid 'choice' after retry");
}

Level2Route route_level2(std::string_view query, const gateway::ModelGateway& gateway) {
    if (text::strip(query).empty()) throw PreconditionError("route_level2: empty query");
    const auto request = make_request(prompts::render_router_level2(query), gateway);

    std::optional<ParsedLevel2> parsed;
    for (int attempt = 0; attempt < 2 && !parsed; ++attempt) {
        auto obj = extract_json_object(gateway.chat_complete(request));
        if (!obj) continue;
        if (auto choice = string_field(*obj, "choice")) {
            if (auto tool = tool_from_string(*choice)) parsed = ParsedLevel2{*tool, *obj};
        }
    }
    if (!parsed) throw RouteParseError("level-2 router reply had no valid 'choice' after retry");

    Level2Route route{parsed->tool, {}, {}};
    if (route.tool == Tool::Keyword) {
        route.keywords = dedupe_case_insensitive(list_field(parsed->obj, "keywords"));
        if (route.keywords.empty()) throw MissingParamsError("keyword route without keywords");
    } else if (route.tool == Tool::Event) {
        route.event_ids = dedupe_case_insensitive(list_field(parsed->obj, "events"));
        if (route.event_ids.empty()) throw MissingParamsError("event route without events");
    }
    return route;
}

RouteDecision route_query(std::string_view query, const gateway::ModelGateway& gateway) {
    try {
        switch (route_level1(query, gateway)) {
            case Tier::All: return RouteDecision::all();
            case Tier::General: return RouteDecision::general();
            case Tier::Partial: break;
        }
        auto l2 = route_level2(query, gateway);
        switch (l2.tool) {
            case Tool::Keyword: return RouteDecision::keyword(std::move(l2.keywords));
            case Tool::Event: return RouteDecision::event(std::move(l2.event_ids));
            case Tool::Semantic: return RouteDecision::semantic();
        }
    } catch (const RouteParseError&) {
    } catch (const MissingParamsError&) {
    }
    return RouteDecision::semantic(/*fallback=*/true);
}

}  // namespace loglens::routing
