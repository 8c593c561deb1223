#include "loglens/parsing/category.hpp"

#include <array>

#include "loglens/common/text.hpp"

namespace loglens::parsing {

namespace {

constexpr std::array<LogCategory, kCategoryCount> kAll = {
    LogCategory::Android,   LogCategory::Apache,    LogCategory::BGL,
    LogCategory::HDFS,      LogCategory::HPC,       LogCategory::Hadoop,
    LogCategory::HealthApp, LogCategory::Linux,     LogCategory::Mac,
    LogCategory::OpenSSH,   LogCategory::OpenStack, LogCategory::Proxifier,
    LogCategory::Spark,     LogCategory::Thunderbird, LogCategory::Windows,
    LogCategory::Zookeeper,
};

}  // namespace

std::span<const LogCategory> all_categories() noexcept { return kAll; }

std::string_view to_string(LogCategory category) noexcept {
    switch (category) {
        case LogCategory::Android: return "Android";
        case LogCategory::Apache: return "Apache";
        case LogCategory::BGL: return "BGL";
        case LogCategory::HDFS: return "HDFS";
        case LogCategory::HPC: return "HPC";
        case LogCategory::Hadoop: return "Hadoop";
        case LogCategory::HealthApp: return "HealthApp";
        case LogCategory::Linux: return "Linux";
        case LogCategory::Mac: return "Mac";
        case LogCategory::OpenSSH: return "OpenSSH";
        case LogCategory::OpenStack: return "OpenStack";
        case LogCategory::Proxifier: return "Proxifier";
        case LogCategory::Spark: return "Spark";
        case LogCategory::Thunderbird: return "Thunderbird";
        case LogCategory::Windows: return "Windows";
        case LogCategory::Zookeeper: return "Zookeeper";
    }
    return "";
}

std::optional<LogCategory> category_from_string(std::string_view name) {
    name = text::strip(name);
    for (auto c : kAll) {
        if (text::iequals(name, to_string(c))) return c;
    }
    return std::nullopt;
}

}  // namespace loglens::parsing
