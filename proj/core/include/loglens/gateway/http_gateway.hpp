#pragma once

#include <chrono>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "loglens/gateway/hash_embedder.hpp"
#include "loglens/gateway/model_gateway.hpp"

namespace loglens::gateway {

struct GatewayConfig {
    /// Base URL of an OpenAI-compatible API, e.g. "https://api.groq.com/openai/v1".
    std::string endpoint;
    std::string api_key;
    std::string chat_model = "llama-3.1-8b-instant";
    std::string embed_model = "bge-base-en-v1.5";
    double temperature = kDefaultTemperature;
    std::chrono::milliseconds chat_timeout{60'000};
    std::chrono::milliseconds embed_timeout{30'000};
    /// Use the HashEmbedder instead of the embeddings endpoint.
    bool offline_embeddings = false;
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{1'000};

    /// Reads LOGLENS_ENDPOINT, LOGLENS_API_KEY, LOGLENS_CHAT_MODEL,
    /// LOGLENS_EMBED_MODEL, LOGLENS_TEMPERATURE and LOGLENS_OFFLINE_EMBEDDINGS
    /// on top of `base`.
    static GatewayConfig from_env(GatewayConfig base);
    static GatewayConfig from_env();
};

/// Keys: endpoint, api_key, chat_model, embed_model, temperature,
/// chat_timeout_ms, embed_timeout_ms, offline_embeddings, max_attempts,
/// initial_backoff_ms. Missing keys keep their defaults.
GatewayConfig gateway_config_from_json(const nlohmann::json& j, GatewayConfig base = {});

/// OpenAI-style chat-completions and embeddings over HTTP(S). Rate-limit
/// replies (HTTP 429) are retried with exponential backoff; other failures
/// surface immediately as GatewayError. The API key is scrubbed from every
/// error message.
class HttpGateway final : public ModelGateway {
public:
    explicit HttpGateway(GatewayConfig config);

    std::string describe() const override;
    std::string chat_model() const override { return config_.chat_model; }
    double default_temperature() const override { return config_.temperature; }

    /// Replaces the sleep used between retries (tests pass a no-op).
    void set_sleeper(std::function<void(std::chrono::milliseconds)> sleeper) {
        sleeper_ = std::move(sleeper);
    }

protected:
    std::string do_chat(const ChatRequest& request) const override;
    std::vector<Embedding> do_embed(std::span<const std::string> texts) const override;

private:
    nlohmann::json post(const std::string& path, const nlohmann::json& body,
                        std::chrono::milliseconds timeout) const;
    std::string scrub(std::string message) const;

    GatewayConfig config_;
    std::string origin_;     // scheme://host[:port]
    std::string base_path_;  // path prefix without trailing slash
    HashEmbedder fallback_embedder_;
    std::function<void(std::chrono::milliseconds)> sleeper_;
};

}  // namespace loglens::gateway
