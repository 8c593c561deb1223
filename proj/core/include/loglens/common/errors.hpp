#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loglens {

enum class ErrorCode {
    EmptyInput,
    Precondition,
    UnknownCategory,
    Gateway,
    DimensionMismatch,
    LengthMismatch,
    RouteParse,
    MissingParams,
    EmptyKeywords,
    EmptyText,
    Manifest,
    Config,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base for every error raised by the library. `code()` lets the service
/// layer map failures to HTTP statuses without RTTI chains.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& what) : Error(ErrorCode::EmptyInput, what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(ErrorCode::Precondition, what) {}
};

struct UnknownCategoryError : Error {
    explicit UnknownCategoryError(const std::string& what)
        : Error(ErrorCode::UnknownCategory, what) {}
};

enum class GatewayErrorCategory { Network, Auth, RateLimit, MalformedResponse };

std::string_view to_string(GatewayErrorCategory category) noexcept;

class GatewayError : public Error {
public:
    GatewayError(GatewayErrorCategory category, const std::string& what)
        : Error(ErrorCode::Gateway, what), category_(category) {}

    GatewayErrorCategory category() const noexcept { return category_; }

private:
    GatewayErrorCategory category_;
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what)
        : Error(ErrorCode::DimensionMismatch, what) {}
};

struct LengthMismatchError : Error {
    explicit LengthMismatchError(const std::string& what)
        : Error(ErrorCode::LengthMismatch, what) {}
};

struct RouteParseError : Error {
    explicit RouteParseError(const std::string& what) : Error(ErrorCode::RouteParse, what) {}
};

struct MissingParamsError : Error {
    explicit MissingParamsError(const std::string& what) : Error(ErrorCode::MissingParams, what) {}
};

struct EmptyKeywordsError : Error {
    explicit EmptyKeywordsError(const std::string& what) : Error(ErrorCode::EmptyKeywords, what) {}
};

struct EmptyTextError : Error {
    explicit EmptyTextError(const std::string& what) : Error(ErrorCode::EmptyText, what) {}
};

struct ManifestError : Error {
    explicit ManifestError(const std::string& what) : Error(ErrorCode::Manifest, what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(ErrorCode::Config, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace loglens
