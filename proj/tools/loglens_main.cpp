// loglens: command-line front end mirroring the HTTP API.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "app_config.hpp"
#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"
#include "loglens/eval/benchmark.hpp"
#include "loglens/orchestrator/pipeline.hpp"
#include "loglens/parsing/drain.hpp"
#include "loglens/parsing/export.hpp"
#include "loglens/parsing/recognizer.hpp"

namespace fs = std::filesystem;
using namespace loglens;

namespace {

service::ApiServer* g_server = nullptr;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, std::string_view content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
}

parsing::LogCategory parse_category(const std::string& name) {
    auto category = parsing::category_from_string(name);
    if (!category) throw ConfigError("unknown log category '" + name + "'");
    return *category;
}

// State persisted by `analyze open` so later invocations reopen the same file.
struct AnalyzeState {
    fs::path log_file;
    std::string category;
};

AnalyzeState load_state(const fs::path& path) {
    if (!fs::exists(path)) {
        throw ConfigError("no open log; run `loglens analyze open <file>` first");
    }
    auto doc = nlohmann::json::parse(read_file(path));
    return {doc.at("log_file").get<std::string>(), doc.at("category").get<std::string>()};
}

std::shared_ptr<const orchestrator::Session> reopen(const tools::AppConfig& config,
                                                    const fs::path& state_path,
                                                    const gateway::ModelGateway& gateway) {
    auto state = load_state(state_path);
    auto options = tools::session_options(config);
    options.category_override = parse_category(state.category);
    if (!options.cache_dir) options.cache_dir = state_path.parent_path() / "cache";
    return orchestrator::open_session(state.log_file.filename().string(),
                                      read_file(state.log_file), gateway, options);
}

void print_answer(const orchestrator::Answer& answer, bool as_json) {
    if (as_json) {
        std::cout << nlohmann::json(answer).dump(2) << '\n';
        return;
    }
    std::cout << answer.text << "\n\n";
    std::cout << "route: " << routing::to_string(answer.route.tier);
    if (answer.route.tool) std::cout << " / " << routing::to_string(*answer.route.tool);
    if (answer.route.fallback) std::cout << " (fallback)";
    std::cout << '\n';
    if (const auto* lines = std::get_if<orchestrator::LineReferences>(&answer.references)) {
        std::cout << "references: " << lines->result.shown << " of " << lines->result.total
                  << " matching lines\n";
        for (const auto& m : lines->result.matches) {
            std::cout << "  " << m.line_id << ": " << m.text << '\n';
        }
    } else if (const auto* chunks =
                   std::get_if<std::vector<orchestrator::RetrievedChunk>>(&answer.references)) {
        for (const auto& c : *chunks) {
            std::cout << "  chunk " << c.chunk_id << " (lines " << c.first_line << "-"
                      << c.last_line << ", score " << c.score << ")\n";
        }
    }
}

void print_session(const orchestrator::Session& s) {
    std::cout << "file: " << s.log_file_name << '\n'
              << "category: " << parsing::to_string(s.category) << '\n'
              << "lines: " << s.raw_lines.size() << '\n'
              << "templates: " << s.templates.size() << '\n'
              << "chunks: " << s.index.chunks.size() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loglens: log parsing, routing and question answering over log files"};
    app.require_subcommand(1);

    std::string config_path, mock_script, drain_registry, cache_dir;
    std::size_t max_lines = 0, chunk_budget = 0;
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--mock-script", mock_script, "Use a scripted offline backend")
        ->check(CLI::ExistingFile);
    app.add_option("--drain-registry", drain_registry, "Directory of per-category Drain JSON")
        ->check(CLI::ExistingDirectory);
    app.add_option("--max-lines", max_lines, "Lines shown to the model per search")
        ->check(CLI::PositiveNumber);
    app.add_option("--chunk-budget", chunk_budget, "Whitespace tokens per index chunk")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cache_dir, "Embedding cache directory");

    auto resolve_config = [&] {
        tools::AppConfig config =
            config_path.empty() ? tools::AppConfig{} : tools::load_config_file(config_path);
        if (!mock_script.empty()) config.mock_script = mock_script;
        if (!drain_registry.empty()) config.drain_registry = drain_registry;
        if (!cache_dir.empty()) config.cache_dir = cache_dir;
        if (max_lines) config.max_lines = max_lines;
        if (chunk_budget) config.chunk_budget = chunk_budget;
        return config;
    };

    // analyze ----------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "Open a log and ask questions about it");
    analyze->require_subcommand(1);
    std::string state_path = ".loglens/state.json";
    analyze->add_option("--state", state_path, "Where the open log is remembered");

    std::string open_file, open_category;
    auto* open = analyze->add_subcommand("open", "Parse and index a log file");
    open->add_option("file", open_file, "Log file")->required()->check(CLI::ExistingFile);
    open->add_option("--category", open_category, "Skip type recognition");

    std::string question;
    bool ask_json = false;
    auto* ask = analyze->add_subcommand("ask", "Ask one question about the open log");
    ask->add_option("question", question, "Question text")->required();
    ask->add_flag("--json", ask_json, "Print the full Answer as JSON");

    auto* events = analyze->add_subcommand("events", "Print the template table as CSV");
    auto* chat = analyze->add_subcommand("chat", "Interactive question loop (empty line exits)");

    // parse ------------------------------------------------------------------
    std::string parse_file, parse_category_name, parse_out;
    auto* parse = app.add_subcommand("parse", "Parse a log into templates.csv and structured.csv");
    parse->add_option("file", parse_file, "Log file")->required()->check(CLI::ExistingFile);
    parse->add_option("--category", parse_category_name, "Log family")->required();
    parse->add_option("--out", parse_out, "Output directory")->required();

    // serve ------------------------------------------------------------------
    int port = 0;
    std::string host, static_dir;
    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    auto* port_opt = serve->add_option("--port", port, "Listen port (0 picks a free one)");
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--static-dir", static_dir, "Browser client assets")
        ->check(CLI::ExistingDirectory);

    // eval -------------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "Score answers against reference answers");
    eval->require_subcommand(1);
    std::string manifest_path, eval_out = "eval-out";
    bool live = false;
    auto* run = eval->add_subcommand("run", "Score a manifest");
    run->add_option("--manifest", manifest_path, "Manifest JSON")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_flag("--live", live, "Generate missing answers through the pipeline");
    run->add_option("--out", eval_out, "Directory for scores.csv and report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        auto config = resolve_config();

        if (*open) {
            auto gateway = tools::make_gateway(config);
            auto options = tools::session_options(config);
            if (!open_category.empty()) options.category_override = parse_category(open_category);
            fs::path state = state_path;
            if (!options.cache_dir) options.cache_dir = state.parent_path() / "cache";
            auto session = orchestrator::open_session(fs::path(open_file).filename().string(),
                                                      read_file(open_file), *gateway, options);
            nlohmann::json doc = {{"log_file", fs::absolute(open_file).string()},
                                  {"category", parsing::to_string(session->category)}};
            write_file(state, doc.dump(2) + "\n");
            print_session(*session);
        } else if (*ask) {
            auto gateway = tools::make_gateway(config);
            auto session = reopen(config, state_path, *gateway);
            print_answer(orchestrator::answer_query(*session, question, *gateway), ask_json);
        } else if (*events) {
            auto state = load_state(state_path);
            auto options = tools::session_options(config);
            auto lines = text::split_lines(read_file(state.log_file));
            auto parsed =
                parsing::parse_lines(lines, options.registry.get(parse_category(state.category)));
            std::cout << parsing::export_templates_csv(parsed.templates);
        } else if (*chat) {
            auto gateway = tools::make_gateway(config);
            auto session = reopen(config, state_path, *gateway);
            print_session(*session);
            std::string line;
            while (std::cout << "\n> " << std::flush, std::getline(std::cin, line)) {
                if (text::strip(line).empty()) break;
                try {
                    print_answer(orchestrator::answer_query(*session, line, *gateway), false);
                } catch (const GatewayError& e) {
                    std::cerr << "error (" << to_string(e.category()) << "): " << e.what() << '\n';
                }
            }
        } else if (*parse) {
            auto options = tools::session_options(config);
            auto lines = text::split_lines(read_file(parse_file));
            auto parsed =
                parsing::parse_lines(lines, options.registry.get(parse_category(parse_category_name)));
            write_file(fs::path(parse_out) / "templates.csv",
                       parsing::export_templates_csv(parsed.templates));
            write_file(fs::path(parse_out) / "structured.csv",
                       parsing::export_structured_csv(parsed.structured));
            std::cout << lines.size() << " lines, " << parsed.templates.size() << " templates\n";
        } else if (*serve) {
            if (port_opt->count()) config.port = port;
            if (!host.empty()) config.host = host;
            if (!static_dir.empty()) config.static_dir = static_dir;
            service::ApiServer server(tools::make_gateway(config), tools::service_options(config));
            int bound = config.port;
            if (bound == 0) {
                bound = server.bind_to_any_port(config.host);
            } else if (!server.bind(config.host, bound)) {
                throw IoError("cannot bind " + config.host + ":" + std::to_string(bound));
            }
            g_server = &server;
            std::signal(SIGINT, [](int) { if (g_server) g_server->stop(); });
            std::signal(SIGTERM, [](int) { if (g_server) g_server->stop(); });
            std::cout << "listening on http://" << config.host << ":" << bound << std::endl;
            server.listen_after_bind();
            g_server = nullptr;
        } else if (*run) {
            auto manifest = eval::load_manifest(manifest_path);
            std::shared_ptr<gateway::ModelGateway> gateway;
            std::shared_ptr<const orchestrator::Session> session;
            if (live) {
                if (!manifest.log_file) throw ManifestError("--live needs the manifest's log_file");
                gateway = tools::make_gateway(config);
                auto options = tools::session_options(config);
                if (manifest.category) options.category_override = parse_category(*manifest.category);
                session = orchestrator::open_session(manifest.log_file->filename().string(),
                                                     read_file(*manifest.log_file), *gateway,
                                                     options);
            }
            auto report = eval::run_benchmark(manifest, session.get(), gateway.get());
            eval::write_report(report, eval_out);
            for (const auto& t : report.tasks) {
                std::cout << eval::to_string(t.task) << ": n=" << t.cases
                          << " cosine=" << t.cosine << " rouge1_f1=" << t.rouge1_f1 << '\n';
            }
        }
    } catch (const GatewayError& e) {
        std::cerr << "error: gateway (" << to_string(e.category()) << "): " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
