#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace loglens::parsing {

/// The sixteen log families the recognizer may answer with.
enum class LogCategory : std::uint8_t {
    Android,
    Apache,
    BGL,
    HDFS,
    HPC,
    Hadoop,
    HealthApp,
    Linux,
    Mac,
    OpenSSH,
    OpenStack,
    Proxifier,
    Spark,
    Thunderbird,
    Windows,
    Zookeeper,
};

inline constexpr std::size_t kCategoryCount = 16;

std::span<const LogCategory> all_categories() noexcept;

std::string_view to_string(LogCategory category) noexcept;

/// Case-insensitive lookup; surrounding whitespace is ignored.
std::optional<LogCategory> category_from_string(std::string_view name);

}  // namespace loglens::parsing
