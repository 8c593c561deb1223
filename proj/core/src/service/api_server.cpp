#include "loglens/service/api_server.hpp"

#include <atomic>
#include <ctime>
#include <list>
#include <random>
#include <unordered_map>

#include <httplib.h>

#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"
#include "loglens/orchestrator/answer.hpp"
#include "loglens/orchestrator/pipeline.hpp"
#include "loglens/parsing/export.hpp"

namespace loglens::service {

namespace {

constexpr const char* kJson = "application/json";

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
    res.status = status;
    res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, std::string_view code, std::string_view message,
                nlohmann::json detail = nlohmann::json::object()) {
    send_json(res, status, error_envelope(code, message, std::move(detail)));
}

void send_gateway_error(httplib::Response& res, const GatewayError& e) {
    send_error(res, 502, to_string(e.code()), e.what(),
               {{"category", to_string(e.category())}});
}

nlohmann::json structured_row_json(const parsing::StructuredLog& log,
                                   const parsing::StructuredRow& row) {
    nlohmann::json j = {{"LineId", row.line_id}};
    for (std::size_t i = 0; i < log.header_names.size() && i < row.header_fields.size(); ++i) {
        j[log.header_names[i]] = row.header_fields[i];
    }
    j["Content"] = row.content;
    j["EventId"] = row.event_id;
    return j;
}

}  // namespace

void to_json(nlohmann::json& j, const ApiSessionRef& ref) {
    j = {{"session_id", ref.session_id},   {"file_name", ref.file_name},
         {"category", ref.category},       {"line_count", ref.line_count},
         {"template_count", ref.template_count}, {"created_at", ref.created_at}};
}

nlohmann::json error_envelope(std::string_view code, std::string_view message,
                              nlohmann::json detail) {
    return {{"code", code}, {"message", message}, {"detail", std::move(detail)}};
}

// ---------------------------------------------------------------------------
// SessionStore

struct SessionStore::Impl {
    mutable std::mutex mutex;
    std::list<std::string> lru;  // front = most recent
    struct Slot {
        Entry entry;
        std::list<std::string>::iterator position;
    };
    std::unordered_map<std::string, Slot> slots;
    std::atomic<std::uint64_t> counter{0};
    std::string process_tag;
};

SessionStore::SessionStore(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity), impl_(std::make_shared<Impl>()) {
    std::random_device rd;
    impl_->process_tag = text::hex64((static_cast<std::uint64_t>(rd()) << 32) ^ rd()).substr(0, 8);
}

ApiSessionRef SessionStore::add(std::shared_ptr<const orchestrator::Session> session) {
    ApiSessionRef ref;
    ref.session_id = impl_->process_tag + "-" + std::to_string(++impl_->counter);
    ref.file_name = session->log_file_name;
    ref.category = std::string(parsing::to_string(session->category));
    ref.line_count = session->raw_lines.size();
    ref.template_count = session->templates.size();
    ref.created_at = utc_timestamp();

    std::lock_guard lock(impl_->mutex);
    impl_->lru.push_front(ref.session_id);
    impl_->slots[ref.session_id] = {{ref, std::move(session), std::make_shared<std::mutex>()},
                                    impl_->lru.begin()};
    while (impl_->slots.size() > capacity_) {
        impl_->slots.erase(impl_->lru.back());
        impl_->lru.pop_back();
    }
    return ref;
}

std::optional<SessionStore::Entry> SessionStore::get(const std::string& id) {
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->slots.find(id);
    if (it == impl_->slots.end()) return std::nullopt;
    impl_->lru.splice(impl_->lru.begin(), impl_->lru, it->second.position);
    return it->second.entry;
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(impl_->mutex);
    return impl_->slots.size();
}

// ---------------------------------------------------------------------------
// ApiServer

struct ApiServer::Impl {
    std::shared_ptr<const gateway::ModelGateway> gateway;
    ServiceOptions options;
    SessionStore store;
    httplib::Server server;

    Impl(std::shared_ptr<const gateway::ModelGateway> gw, ServiceOptions opts)
        : gateway(std::move(gw)), options(std::move(opts)), store(options.max_sessions) {}

    void install_routes();
    void handle_upload(const httplib::Request& req, httplib::Response& res);
    void handle_chat(const httplib::Request& req, httplib::Response& res);
    void handle_events(const httplib::Request& req, httplib::Response& res);
    void handle_structured(const httplib::Request& req, httplib::Response& res);
    void handle_health(const httplib::Request& req, httplib::Response& res);

    std::optional<SessionStore::Entry> lookup(const httplib::Request& req,
                                              httplib::Response& res) {
        const auto id = req.matches[1].str();
        auto entry = store.get(id);
        if (!entry) send_error(res, 404, "not_found", "unknown session", {{"session_id", id}});
        return entry;
    }
};

void ApiServer::Impl::install_routes() {
    // Leave room for multipart framing around the file part.
    server.set_payload_max_length(options.max_upload_bytes + 64 * 1024);
    server.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                    std::exception_ptr ep) {
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            send_error(res, 500, "internal_error", e.what());
        } catch (...) {
            send_error(res, 500, "internal_error", "unknown error");
        }
    });

    server.Post("/api/sessions",
                [this](const auto& req, auto& res) { handle_upload(req, res); });
    server.Post(R"(/api/sessions/([^/]+)/chat)",
                [this](const auto& req, auto& res) { handle_chat(req, res); });
    server.Get(R"(/api/sessions/([^/]+)/events)",
               [this](const auto& req, auto& res) { handle_events(req, res); });
    server.Get(R"(/api/sessions/([^/]+)/structured)",
               [this](const auto& req, auto& res) { handle_structured(req, res); });
    server.Get("/api/health", [this](const auto& req, auto& res) { handle_health(req, res); });

    if (options.static_dir) server.set_mount_point("/", options.static_dir->string());
}

void ApiServer::Impl::handle_upload(const httplib::Request& req, httplib::Response& res) {
    if (!req.is_multipart_form_data() || !req.has_file("file")) {
        send_error(res, 400, "bad_upload", "expected multipart form data with a 'file' part");
        return;
    }
    const auto file = req.get_file_value("file");
    if (file.content.size() > options.max_upload_bytes) {
        send_error(res, 400, "bad_upload", "upload exceeds size cap",
                   {{"max_upload_bytes", options.max_upload_bytes}});
        return;
    }

    auto session_options = options.session;
    if (req.has_file("category")) {
        auto name = text::strip(req.get_file_value("category").content);
        if (!name.empty()) {
            auto category = parsing::category_from_string(name);
            if (!category) {
                send_error(res, 400, "unknown_category", "unknown log category",
                           {{"category", name}});
                return;
            }
            session_options.category_override = category;
        }
    }

    try {
        auto name = file.filename.empty() ? std::string("upload.log") : file.filename;
        auto session = orchestrator::open_session(name, file.content, *gateway, session_options);
        send_json(res, 200, store.add(std::move(session)));
    } catch (const GatewayError& e) {
        send_gateway_error(res, e);
    } catch (const UnknownCategoryError& e) {
        send_error(res, 400, to_string(e.code()), e.what(),
                   {{"hint", "retry with an explicit 'category' field"}});
    } catch (const Error& e) {
        send_error(res, 400, to_string(e.code()), e.what());
    }
}

void ApiServer::Impl::handle_chat(const httplib::Request& req, httplib::Response& res) {
    auto entry = lookup(req, res);
    if (!entry) return;

    auto body = nlohmann::json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("question") ||
        !body["question"].is_string()) {
        send_error(res, 400, "bad_request", "expected JSON body {\"question\": string}");
        return;
    }
    const auto question = body["question"].get<std::string>();
    if (text::strip(question).empty()) {
        send_error(res, 400, "bad_request", "question is empty");
        return;
    }

    std::lock_guard chat_lock(*entry->chat_mutex);
    try {
        send_json(res, 200, orchestrator::answer_query(*entry->session, question, *gateway));
    } catch (const orchestrator::GenerationError& e) {
        send_error(res, 502, to_string(e.code()), e.what(),
                   {{"category", to_string(e.category())}, {"partial", e.partial()}});
    } catch (const GatewayError& e) {
        send_gateway_error(res, e);
    } catch (const Error& e) {
        send_error(res, 400, to_string(e.code()), e.what());
    }
}

void ApiServer::Impl::handle_events(const httplib::Request& req, httplib::Response& res) {
    auto entry = lookup(req, res);
    if (!entry) return;
    res.status = 200;
    res.set_content(parsing::export_templates_csv(entry->session->templates), "text/csv");
}

void ApiServer::Impl::handle_structured(const httplib::Request& req, httplib::Response& res) {
    auto entry = lookup(req, res);
    if (!entry) return;
    const auto& log = entry->session->structured;
    const auto filter = req.get_param_value("event");

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : log.rows) {
        if (!filter.empty() && !text::iequals(row.event_id, filter)) continue;
        rows.push_back(structured_row_json(log, row));
    }
    send_json(res, 200, {{"event", filter.empty() ? nlohmann::json() : nlohmann::json(filter)},
                         {"count", rows.size()},
                         {"rows", std::move(rows)}});
}

void ApiServer::Impl::handle_health(const httplib::Request&, httplib::Response& res) {
    send_json(res, 200,
              {{"status", "ok"},
               {"version", kVersion},
               {"build", __DATE__ " " __TIME__},
               {"backend", gateway->describe()},
               {"sessions", store.size()},
               {"max_sessions", store.capacity()}});
}

ApiServer::ApiServer(std::shared_ptr<const gateway::ModelGateway> gateway, ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(gateway), std::move(options))) {
    if (!impl_->gateway) throw PreconditionError("ApiServer: gateway is null");
    impl_->install_routes();
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind_to_any_port(const std::string& host) {
    return impl_->server.bind_to_any_port(host);
}

bool ApiServer::bind(const std::string& host, int port) {
    return impl_->server.bind_to_port(host, port);
}

bool ApiServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void ApiServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

SessionStore& ApiServer::sessions() noexcept { return impl_->store; }

}  // namespace loglens::service
