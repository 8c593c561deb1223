#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loglens::gateway {

inline constexpr double kDefaultTemperature = 0.7;

struct ChatRequest {
    std::string system_text;
    std::string user_text;
    double temperature = kDefaultTemperature;
    std::optional<int> max_tokens;
    std::string model_name;

    /// Throws PreconditionError on empty user text or temperature outside [0, 2].
    void validate() const;
};

using Embedding = std::vector<float>;

/// Chat-completion and embedding backend. Implementations must be safe to
/// call from several threads at once.
class ModelGateway {
public:
    virtual ~ModelGateway() = default;

    /// Validates `request` before any backend call is made.
    std::string chat_complete(const ChatRequest& request) const;

    /// One vector per text, all of the same dimension.
    std::vector<Embedding> embed(std::span<const std::string> texts) const;

    /// Short backend description for health reporting. Never includes secrets.
    virtual std::string describe() const = 0;

    /// Model name stamped into requests built by the pipeline.
    virtual std::string chat_model() const { return {}; }

    virtual double default_temperature() const { return kDefaultTemperature; }

protected:
    virtual std::string do_chat(const ChatRequest& request) const = 0;
    virtual std::vector<Embedding> do_embed(std::span<const std::string> texts) const = 0;
};

}  // namespace loglens::gateway
