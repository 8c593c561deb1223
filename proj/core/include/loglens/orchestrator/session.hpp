#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loglens/gateway/model_gateway.hpp"
#include "loglens/index/chunk_index.hpp"
#include "loglens/parsing/category.hpp"
#include "loglens/parsing/drain.hpp"
#include "loglens/parsing/drain_config.hpp"
#include "loglens/search/search_tools.hpp"

namespace loglens::orchestrator {

struct SessionOptions {
    /// Skips the recognizer when set.
    std::optional<parsing::LogCategory> category_override;
    parsing::DrainRegistry registry = parsing::DrainRegistry::builtin();
    std::size_t chunk_budget = index::kDefaultChunkBudget;
    std::size_t max_lines = search::kDefaultMaxLines;
    std::size_t top_k = index::kDefaultTopK;
    /// When set, chunk embeddings are cached here keyed by content hash.
    std::optional<std::filesystem::path> cache_dir;
};

/// Everything derived from one uploaded file. Immutable once built; share
/// it through `std::shared_ptr<const Session>`.
struct Session {
    std::string log_file_name;
    std::string content_hash;
    std::vector<std::string> raw_lines;
    parsing::LogCategory category = parsing::LogCategory::Linux;
    parsing::StructuredLog structured;
    std::vector<parsing::EventTemplate> templates;
    index::ChunkIndex index;
    std::size_t max_lines = search::kDefaultMaxLines;
    std::size_t top_k = index::kDefaultTopK;
};

/// Chunks and embeds the file, identifies its family and parses it. Any
/// failure leaves nothing behind. Throws EmptyInputError, UnknownCategoryError
/// (retry with `category_override`), GatewayError.
std::shared_ptr<const Session> open_session(std::string file_name, std::string_view raw_text,
                                            const gateway::ModelGateway& gateway,
                                            const SessionOptions& options = {});

/// Hash over every field of the session, for immutability checks.
std::string session_fingerprint(const Session& session);

}  // namespace loglens::orchestrator
