#include "loglens/common/json_extract.hpp"

namespace loglens {

namespace {

// End index (inclusive) of the object opening at `open`, or npos.
std::size_t balanced_end(std::string_view s, std::size_t open) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = open; i < s.size(); ++i) {
        char c = s[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}') {
            if (--depth == 0) return i;
        }
    }
    return std::string_view::npos;
}

}  // namespace

std::optional<nlohmann::json> extract_json_object(std::string_view reply) {
    for (auto open = reply.find('{'); open != std::string_view::npos;
         open = reply.find('{', open + 1)) {
        auto close = balanced_end(reply, open);
        if (close == std::string_view::npos) continue;
        auto parsed = nlohmann::json::parse(reply.substr(open, close - open + 1), nullptr,
                                            /*allow_exceptions=*/false);
        if (!parsed.is_discarded() && parsed.is_object()) return parsed;
    }
    return std::nullopt;
}

}  // namespace loglens
