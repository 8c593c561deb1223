#include "loglens/gateway/mock_gateway.hpp"

#include <fstream>
#include <sstream>

#include "loglens/common/text.hpp"

namespace loglens::gateway {

namespace {

std::optional<GatewayErrorCategory> parse_category(std::string_view name) {
    if (name == "network") return GatewayErrorCategory::Network;
    if (name == "auth") return GatewayErrorCategory::Auth;
    if (name == "rate_limit") return GatewayErrorCategory::RateLimit;
    if (name == "malformed_response") return GatewayErrorCategory::MalformedResponse;
    return std::nullopt;
}

// Splits "directive rest-of-line"; a directive with no argument yields "".
std::pair<std::string_view, std::string_view> split_directive(std::string_view line) {
    auto space = line.find(' ');
    if (space == std::string_view::npos) return {line, {}};
    return {line.substr(0, space), line.substr(space + 1)};
}

}  // namespace

void MockRule::compile() {
    if (kind == Kind::Regex) {
        try {
            regex_.emplace(pattern, std::regex::ECMAScript);
        } catch (const std::regex_error& e) {
            throw ConfigError("mock script: invalid regex '" + pattern + "': " + e.what());
        }
    }
}

bool MockRule::matches(const std::string& prompt) const {
    if (kind == Kind::Substring) return prompt.find(pattern) != std::string::npos;
    return regex_ && std::regex_search(prompt, *regex_);
}

MockScript MockScript::parse(std::string_view text) {
    MockScript script;
    std::string* last_reply = nullptr;
    std::size_t line_no = 0;
    for (auto raw : text::split_lines(text)) {
        ++line_no;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '|') {
            if (!last_reply) {
                throw ConfigError("mock script line " + std::to_string(line_no) +
                                  ": continuation without a reply");
            }
            auto rest = line.substr(1);
            if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
            *last_reply += '\n';
            *last_reply += rest;
            continue;
        }

        auto [directive, arg] = split_directive(line);
        if (directive == "when" || directive == "when-regex") {
            MockRule rule;
            rule.kind = directive == "when" ? MockRule::Kind::Substring : MockRule::Kind::Regex;
            rule.pattern = std::string(arg);
            rule.compile();
            script.rules.push_back(std::move(rule));
            last_reply = nullptr;
        } else if (directive == "reply") {
            if (script.rules.empty()) {
                throw ConfigError("mock script line " + std::to_string(line_no) +
                                  ": reply before any rule");
            }
            script.rules.back().replies.emplace_back(arg);
            last_reply = &script.rules.back().replies.back();
        } else if (directive == "fail") {
            auto category = parse_category(arg);
            if (script.rules.empty() || !category) {
                throw ConfigError("mock script line " + std::to_string(line_no) +
                                  ": bad fail directive");
            }
            script.rules.back().failure = category;
            last_reply = nullptr;
        } else if (directive == "default") {
            script.default_reply = std::string(arg);
            last_reply = &script.default_reply;
        } else {
            throw ConfigError("mock script line " + std::to_string(line_no) +
                              ": unknown directive '" + std::string(directive) + "'");
        }
    }
    return script;
}

MockScript MockScript::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read mock script " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

MockGateway::MockGateway(MockScript script, HashEmbedder embedder)
    : script_(std::move(script)), embedder_(embedder), hits_(script_.rules.size(), 0) {}

std::string MockGateway::do_chat(const ChatRequest& request) const {
    std::lock_guard lock(mu_);
    transcript_.push_back(request);
    for (std::size_t i = 0; i < script_.rules.size(); ++i) {
        const auto& rule = script_.rules[i];
        if (!rule.matches(request.user_text)) continue;
        if (rule.failure) {
            throw GatewayError(*rule.failure, "mock backend scripted failure");
        }
        if (rule.replies.empty()) return script_.default_reply;
        auto n = hits_[i]++;
        return rule.replies[std::min(n, rule.replies.size() - 1)];
    }
    return script_.default_reply;
}

std::vector<Embedding> MockGateway::do_embed(std::span<const std::string> texts) const {
    {
        std::lock_guard lock(mu_);
        ++embed_calls_;
    }
    std::vector<Embedding> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(embedder_(t));
    return out;
}

std::vector<ChatRequest> MockGateway::transcript() const {
    std::lock_guard lock(mu_);
    return transcript_;
}

std::size_t MockGateway::chat_calls() const {
    std::lock_guard lock(mu_);
    return transcript_.size();
}

std::size_t MockGateway::embed_calls() const {
    std::lock_guard lock(mu_);
    return embed_calls_;
}

}  // namespace loglens::gateway
