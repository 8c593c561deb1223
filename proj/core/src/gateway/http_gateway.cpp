#include "loglens/gateway/http_gateway.hpp"

#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "loglens/common/errors.hpp"

namespace loglens::gateway {

namespace {

std::string env_or(const char* name, std::string fallback) {
    const char* value = std::getenv(name);
    return value ? std::string(value) : std::move(fallback);
}

GatewayErrorCategory category_for_status(int status) {
    if (status == 401 || status == 403) return GatewayErrorCategory::Auth;
    if (status == 429) return GatewayErrorCategory::RateLimit;
    if (status >= 500) return GatewayErrorCategory::Network;
    return GatewayErrorCategory::MalformedResponse;
}

}  // namespace

GatewayConfig GatewayConfig::from_env() { return from_env(GatewayConfig{}); }

GatewayConfig GatewayConfig::from_env(GatewayConfig base) {
    base.endpoint = env_or("LOGLENS_ENDPOINT", base.endpoint);
    base.api_key = env_or("LOGLENS_API_KEY", base.api_key);
    base.chat_model = env_or("LOGLENS_CHAT_MODEL", base.chat_model);
    base.embed_model = env_or("LOGLENS_EMBED_MODEL", base.embed_model);
    if (const char* t = std::getenv("LOGLENS_TEMPERATURE")) base.temperature = std::atof(t);
    if (const char* o = std::getenv("LOGLENS_OFFLINE_EMBEDDINGS")) {
        base.offline_embeddings = std::string_view(o) == "1" || std::string_view(o) == "true";
    }
    return base;
}

GatewayConfig gateway_config_from_json(const nlohmann::json& j, GatewayConfig base) {
    using ms = std::chrono::milliseconds;
    base.endpoint = j.value("endpoint", base.endpoint);
    base.api_key = j.value("api_key", base.api_key);
    base.chat_model = j.value("chat_model", base.chat_model);
    base.embed_model = j.value("embed_model", base.embed_model);
    base.temperature = j.value("temperature", base.temperature);
    base.chat_timeout = ms(j.value("chat_timeout_ms", base.chat_timeout.count()));
    base.embed_timeout = ms(j.value("embed_timeout_ms", base.embed_timeout.count()));
    base.offline_embeddings = j.value("offline_embeddings", base.offline_embeddings);
    base.max_attempts = j.value("max_attempts", base.max_attempts);
    base.initial_backoff = ms(j.value("initial_backoff_ms", base.initial_backoff.count()));
    return base;
}

HttpGateway::HttpGateway(GatewayConfig config)
    : config_(std::move(config)),
      sleeper_([](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); }) {
    if (config_.endpoint.empty()) throw ConfigError("gateway endpoint is not configured");
    if (config_.max_attempts < 1) throw ConfigError("gateway max_attempts must be >= 1");

    const auto scheme_end = config_.endpoint.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("gateway endpoint must include a scheme: " + config_.endpoint);
    }
    const auto path_start = config_.endpoint.find('/', scheme_end + 3);
    origin_ = config_.endpoint.substr(0, path_start);
    base_path_ = path_start == std::string::npos ? "" : config_.endpoint.substr(path_start);
    while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();
}

std::string HttpGateway::describe() const {
    return scrub("http " + origin_ + base_path_ + " chat=" + config_.chat_model + " embed=" +
                 (config_.offline_embeddings ? std::string("hash") : config_.embed_model));
}

std::string HttpGateway::scrub(std::string message) const {
    if (config_.api_key.empty()) return message;
    for (auto pos = message.find(config_.api_key); pos != std::string::npos;
         pos = message.find(config_.api_key, pos)) {
        message.replace(pos, config_.api_key.size(), "***");
    }
    return message;
}

nlohmann::json HttpGateway::post(const std::string& path, const nlohmann::json& body,
                                 std::chrono::milliseconds timeout) const {
    httplib::Client client(origin_);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);

    httplib::Headers headers;
    if (!config_.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + config_.api_key);
    }
    const auto payload = body.dump();

    auto backoff = config_.initial_backoff;
    for (int attempt = 1;; ++attempt) {
        auto res = client.Post(base_path_ + path, headers, payload, "application/json");
        if (!res) {
            throw GatewayError(GatewayErrorCategory::Network,
                               scrub("request to " + origin_ + base_path_ + path +
                                     " failed: " + httplib::to_string(res.error())));
        }
        if (res->status == 429 && attempt < config_.max_attempts) {
            sleeper_(backoff);
            backoff *= 2;
            continue;
        }
        if (res->status < 200 || res->status >= 300) {
            auto category = category_for_status(res->status);
            std::string message = "backend returned HTTP " + std::to_string(res->status);
            if (category == GatewayErrorCategory::RateLimit) {
                message += " after " + std::to_string(attempt) + " attempts";
            }
            throw GatewayError(category, scrub(message));
        }
        auto parsed = nlohmann::json::parse(res->body, nullptr, false);
        if (parsed.is_discarded()) {
            throw GatewayError(GatewayErrorCategory::MalformedResponse,
                               "backend reply is not valid JSON");
        }
        return parsed;
    }
}

std::string HttpGateway::do_chat(const ChatRequest& request) const {
    nlohmann::json body = {
        {"model", request.model_name.empty() ? config_.chat_model : request.model_name},
        {"temperature", request.temperature},
        {"messages", nlohmann::json::array()},
    };
    if (!request.system_text.empty()) {
        body["messages"].push_back({{"role", "system"}, {"content", request.system_text}});
    }
    body["messages"].push_back({{"role", "user"}, {"content", request.user_text}});
    if (request.max_tokens) body["max_tokens"] = *request.max_tokens;

    auto reply = post("/chat/completions", body, config_.chat_timeout);
    try {
        return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception&) {
        throw GatewayError(GatewayErrorCategory::MalformedResponse,
                           "chat reply lacks choices[0].message.content");
    }
}

std::vector<Embedding> HttpGateway::do_embed(std::span<const std::string> texts) const {
    std::vector<Embedding> out;
    if (config_.offline_embeddings) {
        for (const auto& t : texts) out.push_back(fallback_embedder_(t));
        return out;
    }
    nlohmann::json body = {{"model", config_.embed_model},
                           {"input", std::vector<std::string>(texts.begin(), texts.end())}};
    auto reply = post("/embeddings", body, config_.embed_timeout);
    try {
        const auto& data = reply.at("data");
        out.resize(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto& item = data.at(i);
            auto index = item.value("index", i);
            if (index >= out.size()) throw std::out_of_range("embedding index");
            out[index] = item.at("embedding").get<Embedding>();
        }
    } catch (const std::exception&) {
        throw GatewayError(GatewayErrorCategory::MalformedResponse,
                           "embedding reply lacks data[].embedding");
    }
    return out;
}

}  // namespace loglens::gateway
