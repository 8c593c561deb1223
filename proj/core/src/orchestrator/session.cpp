#include "loglens/orchestrator/session.hpp"

#include <cstring>

#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"
#include "loglens/parsing/recognizer.hpp"

namespace loglens::orchestrator {

namespace {

index::ChunkIndex load_or_build_index(std::string_view raw_text,
                                      const gateway::ModelGateway& gateway,
                                      const SessionOptions& options) {
    auto chunks = index::chunk_log(raw_text, options.chunk_budget);
    if (!options.cache_dir) return index::build_index(std::move(chunks), gateway);

    const auto path = index::cache_path_for(*options.cache_dir, raw_text, gateway.describe(),
                                            options.chunk_budget);
    if (auto cached = index::load_index(path); cached && cached->chunks == chunks) {
        return std::move(*cached);
    }
    auto built = index::build_index(std::move(chunks), gateway);
    try {
        index::save_index(built, path);
    } catch (const std::exception&) {
        // Cache write failures are non-fatal.
    }
    return built;
}

}  // namespace

std::shared_ptr<const Session> open_session(std::string file_name, std::string_view raw_text,
                                            const gateway::ModelGateway& gateway,
                                            const SessionOptions& options) {
    if (raw_text.empty()) throw EmptyInputError("open_session: uploaded file is empty");

    auto session = std::make_shared<Session>();
    session->log_file_name = std::move(file_name);
    session->content_hash = text::hex64(text::fnv1a64(raw_text));
    session->raw_lines = text::split_lines(raw_text);
    session->max_lines = options.max_lines;
    session->top_k = options.top_k;

    session->index = load_or_build_index(raw_text, gateway, options);

    session->category = options.category_override
                             ? *options.category_override
                             : parsing::identify_log_type(session->raw_lines, gateway);

    auto parsed = parsing::parse_lines(session->raw_lines, options.registry.get(session->category));
    session->structured = std::move(parsed.structured);
    session->templates = std::move(parsed.templates);
    return session;
}

std::string session_fingerprint(const Session& s) {
    std::uint64_t h = text::fnv1a64(s.log_file_name);
    auto mix = [&h](std::string_view part) {
        h = text::fnv1a64(part, h);
        h = text::fnv1a64("\x1f", h);
    };
    mix(s.content_hash);
    for (const auto& l : s.raw_lines) mix(l);
    mix(parsing::to_string(s.category));
    for (const auto& name : s.structured.header_names) mix(name);
    for (const auto& row : s.structured.rows) {
        mix(std::to_string(row.line_id));
        for (const auto& f : row.header_fields) mix(f);
        mix(row.content);
        mix(row.event_id);
    }
    for (const auto& t : s.templates) {
        mix(t.event_id);
        mix(t.template_text);
        mix(std::to_string(t.occurrences));
    }
    for (const auto& c : s.index.chunks) {
        mix(std::to_string(c.chunk_id) + ":" + std::to_string(c.first_line) + ":" +
            std::to_string(c.last_line) + ":" + std::to_string(c.token_count));
        mix(c.text);
    }
    for (const auto& v : s.index.vectors) {
        mix(std::string_view(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(float)));
    }
    mix(std::to_string(s.max_lines) + "/" + std::to_string(s.top_k));
    return text::hex64(h);
}

}  // namespace loglens::orchestrator
