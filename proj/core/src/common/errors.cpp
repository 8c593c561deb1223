#include "loglens/common/errors.hpp"

namespace loglens {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyInput: return "empty_input";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::UnknownCategory: return "unknown_category";
        case ErrorCode::Gateway: return "gateway_error";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::LengthMismatch: return "length_mismatch";
        case ErrorCode::RouteParse: return "route_parse";
        case ErrorCode::MissingParams: return "missing_params";
        case ErrorCode::EmptyKeywords: return "empty_keywords";
        case ErrorCode::EmptyText: return "empty_text";
        case ErrorCode::Manifest: return "manifest_error";
        case ErrorCode::Config: return "config_error";
        case ErrorCode::Io: return "io_error";
    }
    return "unknown";
}

std::string_view to_string(GatewayErrorCategory category) noexcept {
    switch (category) {
        case GatewayErrorCategory::Network: return "network";
        case GatewayErrorCategory::Auth: return "auth";
        case GatewayErrorCategory::RateLimit: return "rate_limit";
        case GatewayErrorCategory::MalformedResponse: return "malformed_response";
    }
    return "unknown";
}

}  // namespace loglens
