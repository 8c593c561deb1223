#include "loglens/orchestrator/pipeline.hpp"

#include "loglens/common/text.hpp"
#include "loglens/parsing/export.hpp"
#include "loglens/prompts/templates.hpp"
#include "loglens/routing/router.hpp"

namespace loglens::orchestrator {

using routing::Tier;
using routing::Tool;

namespace {

std::string joined_lines(const search::SearchResult& result) {
    std::string out;
    for (std::size_t i = 0; i < result.matches.size(); ++i) {
        if (i) out += '\n';
        out += result.matches[i].text;
    }
    return out;
}

// Python repr of [[event_id, template, occurrences], ...].
std::string template_rows_repr(std::span<const parsing::EventTemplate> templates) {
    std::string out = "[";
    for (std::size_t i = 0; i < templates.size(); ++i) {
        if (i) out += ", ";
        out += '[';
        out += text::py_repr(templates[i].event_id);
        out += ", ";
        out += text::py_repr(templates[i].template_text);
        out += ", ";
        out += std::to_string(templates[i].occurrences);
        out += ']';
    }
    out += ']';
    return out;
}

std::string_view without_terminator(std::string_view s) {
    if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

gateway::ChatRequest make_request(std::string prompt, const gateway::ModelGateway& gateway) {
    gateway::ChatRequest request;
    request.system_text = std::string(prompts::kSystemMessage);
    request.user_text = std::move(prompt);
    request.temperature = gateway.default_temperature();
    request.model_name = gateway.chat_model();
    return request;
}

}  // namespace

std::string build_all_event_prompt(const Session& session, std::string_view query) {
    prompts::AllEventContext ctx;
    ctx.log_file_name = session.log_file_name;
    ctx.template_rows = parsing::template_csv_rows(session.templates);
    if (!session.raw_lines.empty()) {
        ctx.first_line = session.raw_lines.front();
        ctx.last_line = session.raw_lines.back();
    }
    ctx.line_count = session.raw_lines.size();
    ctx.template_count = session.templates.size();
    ctx.question = std::string(query);
    return prompts::render_all_event(ctx);
}

std::string build_search_prompt(const search::SearchResult& result,
                                 std::span<const std::string> keywords, std::string_view query,
                                 std::size_t max_lines) {
    prompts::MatchedLinesContext ctx;
    ctx.total = result.total;
    ctx.selector = text::py_repr(std::vector<std::string>(keywords.begin(), keywords.end()));
    ctx.truncated = result.truncated;
    ctx.max_lines = max_lines;
    ctx.context = joined_lines(result);
    ctx.question = std::string(query);
    return prompts::render_search(ctx);
}

std::string build_event_prompt(const search::SearchResult& result,
                               std::span<const std::string> event_ids,
                               std::span<const parsing::EventTemplate> relevant_templates,
                               std::string_view query, std::size_t max_lines) {
    prompts::MatchedLinesContext ctx;
    ctx.total = result.total;
    ctx.selector = text::py_repr(std::vector<std::string>(event_ids.begin(), event_ids.end()));
    ctx.truncated = result.truncated;
    ctx.max_lines = max_lines;
    ctx.context = joined_lines(result);
    ctx.question = std::string(query);
    return prompts::render_event(ctx, template_rows_repr(relevant_templates));
}

std::string build_retrieve_prompt(std::span<const RetrievedChunk> chunks, std::string_view query) {
    std::string context;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        if (i) context += "\n\n";
        context += without_terminator(chunks[i].text);
    }
    return prompts::render_retrieve(context, query);
}

Answer answer_query(const Session& session, std::string_view query,
                    const gateway::ModelGateway& gateway) {
    if (text::strip(query).empty()) throw PreconditionError("answer_query: empty query");

    Answer answer;
    answer.route = routing::route_query(query, gateway);
    answer.prompt_kind = prompt_kind_for(answer.route);

    std::string prompt;
    switch (answer.prompt_kind) {
        case PromptKind::General:
            prompt = std::string(query);
            break;
        case PromptKind::AllEvent:
            prompt = build_all_event_prompt(session, query);
            break;
        case PromptKind::Search: {
            const auto& keywords = *answer.route.keywords;
            auto result = search::truncate_context(
                search::keyword_search(session.raw_lines, keywords), session.max_lines);
            prompt = build_search_prompt(result, keywords, query, session.max_lines);
            answer.references = LineReferences{std::move(result), {}, {}};
            break;
        }
        case PromptKind::Event: {
            const auto& ids = *answer.route.event_ids;
            auto found = search::event_search(session.structured, session.templates,
                                              session.raw_lines, ids);
            auto result = search::truncate_context(std::move(found.result), session.max_lines);
            prompt = build_event_prompt(result, ids, found.relevant_templates, query,
                                        session.max_lines);
            answer.references = LineReferences{std::move(result),
                                               std::move(found.relevant_templates),
                                               std::move(found.unknown_event_ids)};
            break;
        }
        case PromptKind::Retrieve: {
            std::vector<RetrievedChunk> chunks;
            for (const auto& hit :
                 index::semantic_search(session.index, query, gateway, session.top_k)) {
                chunks.push_back({hit.chunk->chunk_id, hit.chunk->first_line,
                                  hit.chunk->last_line, hit.score, hit.chunk->text});
            }
            prompt = build_retrieve_prompt(chunks, query);
            answer.references = std::move(chunks);
            break;
        }
    }

    try {
        answer.text = gateway.chat_complete(make_request(prompt, gateway));
    } catch (const GenerationError&) {
        throw;
    } catch (const GatewayError& e) {
        throw GenerationError(e, std::move(answer), std::move(prompt));
    }
    return answer;
}

Answer retry_generation(const GenerationError& failed, const gateway::ModelGateway& gateway) {
    Answer answer = failed.partial();
    answer.text = gateway.chat_complete(make_request(failed.prompt(), gateway));
    return answer;
}

}  // namespace loglens::orchestrator
