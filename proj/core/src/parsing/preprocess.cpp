#include "loglens/parsing/preprocess.hpp"

#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"
#include "loglens/parsing/drain_config.hpp"

namespace loglens::parsing {

namespace {

// std::regex recurses per character; very long lines would exhaust the
// stack, so they skip format matching and masking.
constexpr std::size_t kMaxRegexLineLength = 8192;

// Literal text between fields: spaces become \s+, and capturing groups
// become non-capturing so field indices stay aligned with submatches.
std::string literal_fragment(std::string_view splitter) {
    std::string out;
    for (std::size_t i = 0; i < splitter.size(); ++i) {
        char c = splitter[i];
        if (c == '\\' && i + 1 < splitter.size()) {
            out += c;
            out += splitter[++i];
        } else if (c == ' ') {
            while (i + 1 < splitter.size() && splitter[i + 1] == ' ') ++i;
            out += "\\s+";
        } else if (c == '(' && !(i + 1 < splitter.size() && splitter[i + 1] == '?')) {
            out += "(?:";
        } else {
            out += c;
        }
    }
    return out;
}

}  // namespace

LinePreprocessor::LinePreprocessor(const DrainConfig& config) {
    std::string pattern;
    std::string_view fmt = config.log_format;
    std::size_t pos = 0;
    while (pos < fmt.size()) {
        auto open = fmt.find('<', pos);
        auto close = open == std::string_view::npos ? open : fmt.find('>', open);
        if (open == std::string_view::npos || close == std::string_view::npos) {
            pattern += literal_fragment(fmt.substr(pos));
            break;
        }
        auto name = fmt.substr(open + 1, close - open - 1);
        if (name.empty() || name.find('<') != std::string_view::npos) {
            pattern += literal_fragment(fmt.substr(pos, open + 1 - pos));
            pos = open + 1;
            continue;
        }
        pattern += literal_fragment(fmt.substr(pos, open - pos));
        pattern += "(.*?)";
        field_names_.emplace_back(name);
        pos = close + 1;
    }

    bool found_content = false;
    for (std::size_t i = 0; i < field_names_.size(); ++i) {
        if (field_names_[i] == "Content") {
            content_field_ = i;
            found_content = true;
        } else {
            header_names_.push_back(field_names_[i]);
        }
    }
    if (!found_content) throw ConfigError("log_format has no <Content> field");

    try {
        format_ = std::regex(pattern, std::regex::ECMAScript | std::regex::optimize);
    } catch (const std::regex_error& e) {
        throw ConfigError("invalid log_format '" + config.log_format + "': " + e.what());
    }
    for (const auto& mask : config.mask_regexes) {
        try {
            masks_.emplace_back(mask, std::regex::ECMAScript | std::regex::optimize);
        } catch (const std::regex_error& e) {
            throw ConfigError("invalid mask regex '" + mask + "': " + e.what());
        }
    }
}

PreprocessedLine LinePreprocessor::operator()(std::string_view line) const {
    PreprocessedLine out;
    std::string_view body = line;
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);

    std::match_results<std::string_view::const_iterator> match;
    if (body.size() <= kMaxRegexLineLength &&
        std::regex_match(body.begin(), body.end(), match, format_)) {
        out.matched_format = true;
        out.header_fields.reserve(header_names_.size());
        for (std::size_t i = 0; i < field_names_.size(); ++i) {
            std::string value = match[i + 1].str();
            if (i == content_field_) {
                out.content = std::move(value);
            } else {
                out.header_fields.push_back(std::move(value));
            }
        }
    } else {
        out.header_fields.assign(header_names_.size(), std::string{});
        out.content = std::string(body);
    }

    std::string masked = out.content;
    if (masked.size() <= kMaxRegexLineLength) {
        for (const auto& mask : masks_) {
            masked = std::regex_replace(masked, mask, std::string(kWildcard));
        }
    }
    out.tokens = text::split_whitespace(masked);
    return out;
}

PreprocessedLine preprocess_line(std::string_view line, const DrainConfig& config) {
    return LinePreprocessor(config)(line);
}

}  // namespace loglens::parsing
