#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loglens/common/errors.hpp"
#include "loglens/gateway/model_gateway.hpp"
#include "loglens/index/chunk_index.hpp"
#include "loglens/orchestrator/answer.hpp"
#include "loglens/orchestrator/session.hpp"

namespace loglens::orchestrator {

std::string build_all_event_prompt(const Session& session, std::string_view query);

/// `result` is the (possibly truncated) result shown to the model; its
/// total is reported regardless.
std::string build_search_prompt(const search::SearchResult& result,
                                 std::span<const std::string> keywords, std::string_view query,
                                 std::size_t max_lines = search::kDefaultMaxLines);

std::string build_event_prompt(const search::SearchResult& result,
                               std::span<const std::string> event_ids,
                               std::span<const parsing::EventTemplate> relevant_templates,
                               std::string_view query,
                               std::size_t max_lines = search::kDefaultMaxLines);

std::string build_retrieve_prompt(std::span<const RetrievedChunk> chunks, std::string_view query);

/// Raised when the final generation call fails. Routing and search already
/// ran; `partial` holds their outcome (empty text) and `prompt` the stage
/// prompt, so the caller can retry with `retry_generation`.
class GenerationError : public GatewayError {
public:
    GenerationError(const GatewayError& cause, Answer partial, std::string prompt)
        : GatewayError(cause.category(), cause.what()),
          partial_(std::move(partial)),
          prompt_(std::move(prompt)) {}

    const Answer& partial() const noexcept { return partial_; }
    const std::string& prompt() const noexcept { return prompt_; }

private:
    Answer partial_;
    std::string prompt_;
};

/// Routes the query, runs the selected search and generates the reply.
/// Queries are independent; no conversation history is carried.
Answer answer_query(const Session& session, std::string_view query,
                    const gateway::ModelGateway& gateway);

Answer retry_generation(const GenerationError& failed, const gateway::ModelGateway& gateway);

}  // namespace loglens::orchestrator
