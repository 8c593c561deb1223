#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "loglens/gateway/http_gateway.hpp"
#include "loglens/gateway/model_gateway.hpp"
#include "loglens/orchestrator/session.hpp"
#include "loglens/service/api_server.hpp"

namespace loglens::tools {

/// Settings shared by every subcommand. Resolution order, lowest first:
/// built-in defaults, the JSON config file, environment, command-line flags.
struct AppConfig {
    gateway::GatewayConfig gateway;
    std::optional<std::filesystem::path> mock_script;
    std::optional<std::filesystem::path> drain_registry;
    std::optional<std::filesystem::path> cache_dir;
    std::size_t max_lines = search::kDefaultMaxLines;
    std::size_t chunk_budget = index::kDefaultChunkBudget;
    std::size_t top_k = index::kDefaultTopK;
    int port = 8080;
    std::string host = "127.0.0.1";
    std::size_t max_sessions = 8;
    std::size_t max_upload_mb = 50;
    std::optional<std::filesystem::path> static_dir;
};

/// Applies a JSON config document. Relative paths resolve against `base_dir`.
void apply_config_json(AppConfig& config, const nlohmann::json& doc,
                       const std::filesystem::path& base_dir);
AppConfig load_config_file(const std::filesystem::path& path);

std::shared_ptr<gateway::ModelGateway> make_gateway(const AppConfig& config);
orchestrator::SessionOptions session_options(const AppConfig& config);
service::ServiceOptions service_options(const AppConfig& config);

}  // namespace loglens::tools
