#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loglens/gateway/model_gateway.hpp"
#include "loglens/orchestrator/session.hpp"

namespace loglens::service {

inline constexpr std::string_view kVersion = "0.1.0";

struct ApiSessionRef {
    std::string session_id;
    std::string file_name;
    std::string category;
    std::size_t line_count = 0;
    std::size_t template_count = 0;
    std::string created_at;  // ISO-8601, UTC
};

void to_json(nlohmann::json& j, const ApiSessionRef& ref);

struct ServiceOptions {
    orchestrator::SessionOptions session;
    std::size_t max_sessions = 8;
    std::size_t max_upload_bytes = 50u * 1024u * 1024u;
    /// Served at "/" when set (the browser client's built assets).
    std::optional<std::filesystem::path> static_dir;
};

/// Uniform error body: {"code": ..., "message": ..., "detail": {...}}.
nlohmann::json error_envelope(std::string_view code, std::string_view message,
                              nlohmann::json detail = nlohmann::json::object());

/// In-memory session store with LRU eviction. Thread-safe.
class SessionStore {
public:
    struct Entry {
        ApiSessionRef ref;
        std::shared_ptr<const orchestrator::Session> session;
        std::shared_ptr<std::mutex> chat_mutex;
    };

    explicit SessionStore(std::size_t capacity);

    ApiSessionRef add(std::shared_ptr<const orchestrator::Session> session);
    /// Marks the entry as most recently used.
    std::optional<Entry> get(const std::string& id);
    std::size_t size() const;
    std::size_t capacity() const noexcept { return capacity_; }

private:
    struct Impl;
    std::size_t capacity_;
    std::shared_ptr<Impl> impl_;
};

/// HTTP+JSON facade over sessions and chat.
///
///     POST /api/sessions                      multipart "file", optional "category"
///     POST /api/sessions/{id}/chat            {"question": "..."}
///     GET  /api/sessions/{id}/events          templates CSV
///     GET  /api/sessions/{id}/structured      ?event=EventN filters rows
///     GET  /api/health
class ApiServer {
public:
    ApiServer(std::shared_ptr<const gateway::ModelGateway> gateway, ServiceOptions options = {});
    ~ApiServer();
    ApiServer(const ApiServer&) = delete;
    ApiServer& operator=(const ApiServer&) = delete;

    /// Binds to an ephemeral port on `host` and returns it.
    int bind_to_any_port(const std::string& host = "127.0.0.1");
    bool bind(const std::string& host, int port);
    /// Blocks until stop() is called.
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

    SessionStore& sessions() noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace loglens::service
