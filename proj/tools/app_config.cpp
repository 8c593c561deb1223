#include "app_config.hpp"

#include <fstream>

#include "loglens/common/errors.hpp"
#include "loglens/gateway/mock_gateway.hpp"

namespace loglens::tools {

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    std::filesystem::path p = value;
    return p.is_absolute() || base.empty() ? p : base / p;
}

template <typename T>
void read_if(const nlohmann::json& doc, const char* key, T& out) {
    if (auto it = doc.find(key); it != doc.end() && !it->is_null()) out = it->get<T>();
}

}  // namespace

void apply_config_json(AppConfig& config, const nlohmann::json& doc,
                       const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    try {
        if (auto it = doc.find("gateway"); it != doc.end()) {
            config.gateway = gateway::gateway_config_from_json(*it, config.gateway);
        }
        for (auto [key, slot] : {std::pair{"mock_script", &config.mock_script},
                                 std::pair{"drain_registry", &config.drain_registry},
                                 std::pair{"cache_dir", &config.cache_dir},
                                 std::pair{"static_dir", &config.static_dir}}) {
            if (auto it = doc.find(key); it != doc.end() && it->is_string()) {
                *slot = resolve(base_dir, it->get<std::string>());
            }
        }
        read_if(doc, "max_lines", config.max_lines);
        read_if(doc, "chunk_budget", config.chunk_budget);
        read_if(doc, "top_k", config.top_k);
        read_if(doc, "port", config.port);
        read_if(doc, "host", config.host);
        read_if(doc, "max_sessions", config.max_sessions);
        read_if(doc, "max_upload_mb", config.max_upload_mb);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

AppConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw ConfigError("config " + path.string() + " is not valid JSON");
    AppConfig config;
    apply_config_json(config, doc, path.parent_path());
    return config;
}

std::shared_ptr<gateway::ModelGateway> make_gateway(const AppConfig& config) {
    if (config.mock_script) {
        return std::make_shared<gateway::MockGateway>(gateway::MockScript::load(*config.mock_script));
    }
    auto gw = gateway::GatewayConfig::from_env(config.gateway);
    if (gw.endpoint.empty()) {
        throw ConfigError(
            "no model endpoint configured; set LOGLENS_ENDPOINT, the config file's "
            "gateway.endpoint, or pass --mock-script");
    }
    return std::make_shared<gateway::HttpGateway>(std::move(gw));
}

orchestrator::SessionOptions session_options(const AppConfig& config) {
    orchestrator::SessionOptions options;
    if (config.drain_registry) {
        options.registry = parsing::DrainRegistry::load_directory(*config.drain_registry);
    }
    options.chunk_budget = config.chunk_budget;
    options.max_lines = config.max_lines;
    options.top_k = config.top_k;
    options.cache_dir = config.cache_dir;
    return options;
}

service::ServiceOptions service_options(const AppConfig& config) {
    service::ServiceOptions options;
    options.session = session_options(config);
    options.max_sessions = config.max_sessions;
    options.max_upload_bytes = config.max_upload_mb * 1024u * 1024u;
    options.static_dir = config.static_dir;
    return options;
}

}  // namespace loglens::tools
