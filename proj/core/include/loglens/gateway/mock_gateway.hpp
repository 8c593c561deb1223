#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "loglens/common/errors.hpp"
#include "loglens/gateway/hash_embedder.hpp"
#include "loglens/gateway/model_gateway.hpp"

namespace loglens::gateway {

struct MockRule {
    enum class Kind { Substring, Regex };

    Kind kind = Kind::Substring;
    std::string pattern;
    /// Served in order on successive matches; the last one repeats.
    std::vector<std::string> replies;
    /// When set the rule raises a GatewayError instead of replying.
    std::optional<GatewayErrorCategory> failure;

    bool matches(const std::string& prompt) const;

    MockRule() = default;
    MockRule(Kind k, std::string p, std::vector<std::string> r)
        : kind(k), pattern(std::move(p)), replies(std::move(r)) {
        compile();
    }
    void compile();

private:
    std::optional<std::regex> regex_;
};

/// Scripted replies keyed on the rendered stage prompt (the user text).
/// First matching rule wins.
///
/// Text format, one directive per line:
///
///     # comment
///     when <substring>          start a rule matching a substring
///     when-regex <pattern>      start a rule matching an ECMAScript regex
///     reply <text>              add a reply to the current rule
///     | <text>                  continue the previous reply on a new line
///     fail <category>           make the rule raise (network, auth, rate_limit,
///                               malformed_response)
///     default <text>            reply used when no rule matches
struct MockScript {
    std::vector<MockRule> rules;
    std::string default_reply;

    static MockScript parse(std::string_view text);
    static MockScript load(const std::filesystem::path& path);
};

/// Deterministic offline backend: chat replies come from a MockScript and
/// embeddings from the HashEmbedder. Every chat request is recorded.
class MockGateway final : public ModelGateway {
public:
    explicit MockGateway(MockScript script, HashEmbedder embedder = HashEmbedder{});

    std::string describe() const override { return "mock"; }
    std::string chat_model() const override { return "mock"; }

    std::vector<ChatRequest> transcript() const;
    std::size_t chat_calls() const;
    std::size_t embed_calls() const;

protected:
    std::string do_chat(const ChatRequest& request) const override;
    std::vector<Embedding> do_embed(std::span<const std::string> texts) const override;

private:
    MockScript script_;
    HashEmbedder embedder_;
    mutable std::mutex mu_;
    mutable std::vector<std::size_t> hits_;
    mutable std::vector<ChatRequest> transcript_;
    mutable std::size_t embed_calls_ = 0;
};

}  // namespace loglens::gateway
