#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loglens/parsing/category.hpp"

namespace loglens::parsing {

/// Parameters for one log family: the header layout, the masking regexes
/// applied to the message body, and the parse-tree shape.
struct DrainConfig {
    LogCategory category = LogCategory::Linux;
    /// Header pattern such as "<Date> <Time> <Level> <Content>". Literal
    /// text between fields is a regex fragment; runs of spaces match \s+.
    std::string log_format = "<Content>";
    std::vector<std::string> mask_regexes;
    double st = 0.4;
    int depth = 4;
    int max_children = 100;

    /// Throws ConfigError when an invariant does not hold.
    void validate() const;

    friend bool operator==(const DrainConfig&, const DrainConfig&) = default;
};

void to_json(nlohmann::json& j, const DrainConfig& config);
void from_json(const nlohmann::json& j, DrainConfig& config);

/// Built-in benchmark settings for `category`.
DrainConfig default_config(LogCategory category);

/// Per-category Drain settings. Starts from the built-in table; entries can
/// be replaced from a directory holding one `<Category>.json` per family.
class DrainRegistry {
public:
    DrainRegistry();

    static DrainRegistry builtin() { return {}; }

    /// Loads every `*.json` document in `dir`, overriding built-ins.
    static DrainRegistry load_directory(const std::filesystem::path& dir);

    const DrainConfig& get(LogCategory category) const;
    void set(DrainConfig config);

private:
    std::map<LogCategory, DrainConfig> configs_;
};

}  // namespace loglens::parsing
