#include "loglens/parsing/drain_config.hpp"

#include <fstream>
#include <regex>

#include "loglens/common/errors.hpp"
#include "loglens/parsing/preprocess.hpp"

namespace loglens::parsing {

namespace {

struct BuiltinRow {
    LogCategory category;
    const char* format;
    std::vector<std::string> masks;
    double st;
    int depth;
};

// Loghub benchmark settings. Regexes are written for the ECMAScript grammar.
const std::vector<BuiltinRow>& builtin_rows() {
    static const std::vector<BuiltinRow> rows = {
        {LogCategory::HDFS, R"(<Date> <Time> <Pid> <Level> <Component>: <Content>)",
         {R"(blk_-?\d+)", R"((\d+\.){3}\d+(:\d+)?)"}, 0.5, 4},
        {LogCategory::Hadoop, R"(<Date> <Time> <Level> \[<Process>\] <Component>: <Content>)",
         {R"((\d+\.){3}\d+)"}, 0.5, 4},
        {LogCategory::Spark, R"(<Date> <Time> <Level> <Component>: <Content>)",
         {R"((\d+\.){3}\d+)", R"(\b[KGTM]?B\b)", R"(([\w-]+\.){2,}[\w-]+)"}, 0.5, 4},
        {LogCategory::Zookeeper,
         R"(<Date> <Time> - <Level>  \[<Node>:<Component>@<Id>\] - <Content>)",
         {R"((/|)(\d+\.){3}\d+(:\d+)?)"}, 0.5, 4},
        {LogCategory::BGL,
         R"(<Label> <Timestamp> <Date> <Node> <Time> <NodeRepeat> <Type> <Component> <Level> <Content>)",
         {R"(core\.\d+)"}, 0.5, 4},
        {LogCategory::HPC, R"(<LogId> <Node> <Component> <State> <Time> <Flag> <Content>)",
         {R"(=\d+)"}, 0.5, 4},
        {LogCategory::Thunderbird,
         R"(<Label> <Timestamp> <Date> <User> <Month> <Day> <Time> <Location> <Component>(\[<PID>\])?: <Content>)",
         {R"((\d+\.){3}\d+)"}, 0.5, 4},
        {LogCategory::Windows, R"(<Date> <Time>, <Level>                  <Component>    <Content>)",
         {R"(0x.*?\s)"}, 0.7, 5},
        {LogCategory::Linux, R"(<Month> <Date> <Time> <Level> <Component>(\[<PID>\])?: <Content>)",
         {R"((\d+\.){3}\d+)", R"(\d{2}:\d{2}:\d{2})"}, 0.39, 6},
        {LogCategory::Android, R"(<Date> <Time>  <Pid>  <Tid> <Level> <Component>: <Content>)",
         {R"((/[\w-]+)+)", R"(([\w-]+\.){2,}[\w-]+)",
          R"(\b(-?\+?\d+)\b|\b0[Xx][a-fA-F\d]+\b|\b[a-fA-F\d]{4,}\b)"},
         0.2, 6},
        {LogCategory::HealthApp, R"(<Time>\|<Component>\|<Pid>\|<Content>)", {}, 0.2, 4},
        {LogCategory::Apache, R"(\[<Time>\] \[<Level>\] <Content>)", {R"((\d+\.){3}\d+)"}, 0.5, 4},
        {LogCategory::Proxifier, R"(\[<Time>\] <Program> - <Content>)",
         {R"(<\d+\ssec)", R"(([\w-]+\.)+[\w-]+(:\d+)?)", R"(\d{2}:\d{2}(:\d{2})*)", R"([KGTM]B)"},
         0.6, 3},
        {LogCategory::OpenSSH, R"(<Date> <Day> <Time> <Component> sshd\[<Pid>\]: <Content>)",
         {R"((\d+\.){3}\d+)", R"(([\w-]+\.){2,}[\w-]+)"}, 0.6, 5},
        {LogCategory::OpenStack,
         R"(<Logrecord> <Date> <Time> <Pid> <Level> <Component> \[<ADDR>\] <Content>)",
         {R"(((\d+\.){3}\d+,?)+)", R"(/.+?\s)", R"(\d+)"}, 0.5, 5},
        {LogCategory::Mac,
         R"(<Month>  <Date> <Time> <User> <Component>\[<PID>\]( \(<Address>\))?: <Content>)",
         {R"(([\w-]+\.){2,}[\w-]+)"}, 0.7, 6},
    };
    return rows;
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

void DrainConfig::validate() const {
    const std::string name(to_string(category));
    if (!(st >= 0.0 && st <= 1.0)) throw ConfigError(name + ": st must lie in [0, 1]");
    if (depth < 3) throw ConfigError(name + ": depth must be at least 3");
    if (max_children <= 0) throw ConfigError(name + ": max_children must be positive");
    if (count_occurrences(log_format, "<Content>") != 1) {
        throw ConfigError(name + ": log_format must contain exactly one <Content> field");
    }
    // Compiling the preprocessor surfaces bad regexes at load time.
    LinePreprocessor probe(*this);
    (void)probe;
}

void to_json(nlohmann::json& j, const DrainConfig& config) {
    j = nlohmann::json{
        {"category", to_string(config.category)},
        {"log_format", config.log_format},
        {"mask_regexes", config.mask_regexes},
        {"st", config.st},
        {"depth", config.depth},
        {"max_children", config.max_children},
    };
}

void from_json(const nlohmann::json& j, DrainConfig& config) {
    auto name = j.at("category").get<std::string>();
    auto category = category_from_string(name);
    if (!category) throw ConfigError("unknown category in Drain config: " + name);
    DrainConfig out = default_config(*category);
    if (j.contains("log_format")) out.log_format = j.at("log_format").get<std::string>();
    if (j.contains("mask_regexes")) {
        out.mask_regexes = j.at("mask_regexes").get<std::vector<std::string>>();
    }
    if (j.contains("st")) out.st = j.at("st").get<double>();
    if (j.contains("depth")) out.depth = j.at("depth").get<int>();
    if (j.contains("max_children")) out.max_children = j.at("max_children").get<int>();
    config = std::move(out);
}

DrainConfig default_config(LogCategory category) {
    for (const auto& row : builtin_rows()) {
        if (row.category == category) {
            return DrainConfig{category, row.format, row.masks, row.st, row.depth, 100};
        }
    }
    DrainConfig fallback;
    fallback.category = category;
    return fallback;
}

DrainRegistry::DrainRegistry() {
    for (auto c : all_categories()) configs_.emplace(c, default_config(c));
}

DrainRegistry DrainRegistry::load_directory(const std::filesystem::path& dir) {
    DrainRegistry registry;
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw ConfigError("Drain registry directory not found: " + dir.string());
    }
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        if (!in) throw IoError("cannot read " + entry.path().string());
        try {
            auto doc = nlohmann::json::parse(in);
            registry.set(doc.get<DrainConfig>());
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(entry.path().string() + ": " + e.what());
        }
    }
    return registry;
}

const DrainConfig& DrainRegistry::get(LogCategory category) const {
    return configs_.at(category);
}

void DrainRegistry::set(DrainConfig config) {
    config.validate();
    configs_[config.category] = std::move(config);
}

}  // namespace loglens::parsing
