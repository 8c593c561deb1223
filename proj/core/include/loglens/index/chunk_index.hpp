#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loglens/gateway/model_gateway.hpp"

namespace loglens::index {

inline constexpr std::size_t kDefaultChunkBudget = 1024;
inline constexpr std::size_t kDefaultTopK = 2;

struct Chunk {
    std::size_t chunk_id = 0;
    std::size_t first_line = 0;  // 1-based, inclusive
    std::size_t last_line = 0;   // 1-based, inclusive
    /// Raw bytes of the covered lines, terminators included.
    std::string text;
    /// Whitespace-delimited words.
    std::size_t token_count = 0;

    friend bool operator==(const Chunk&, const Chunk&) = default;
};

/// Greedy line packing: whole lines are appended until the next one would
/// push the chunk past `budget` words. A line larger than the budget gets a
/// chunk of its own. Concatenating the chunk texts reproduces `raw_text`.
/// Throws EmptyInputError on empty input.
std::vector<Chunk> chunk_log(std::string_view raw_text, std::size_t budget = kDefaultChunkBudget);

struct ChunkIndex {
    std::vector<Chunk> chunks;
    /// One L2-normalized vector per chunk, row-aligned with `chunks`.
    std::vector<gateway::Embedding> vectors;
    std::size_t dim = 0;

    friend bool operator==(const ChunkIndex&, const ChunkIndex&) = default;
};

/// Embeds every chunk and normalizes the vectors. Throws
/// DimensionMismatchError when the backend disagrees with itself.
ChunkIndex build_index(std::vector<Chunk> chunks, const gateway::ModelGateway& gateway);

struct ScoredChunk {
    const Chunk* chunk = nullptr;
    double score = 0.0;
};

/// Exact cosine top-k; ties go to the lower chunk id. Returns
/// min(k, chunk count) results in descending score order.
std::vector<ScoredChunk> semantic_search(const ChunkIndex& index, std::string_view query,
                                         const gateway::ModelGateway& gateway,
                                         std::size_t k = kDefaultTopK);

/// Same ranking against a precomputed query vector.
std::vector<ScoredChunk> rank_chunks(const ChunkIndex& index, const gateway::Embedding& query,
                                     std::size_t k);

/// Flat binary cache of an index: a header (magic, version, dim, count),
/// the vectors as float32, then the chunk table.
void save_index(const ChunkIndex& index, const std::filesystem::path& path);
std::optional<ChunkIndex> load_index(const std::filesystem::path& path);

/// Cache file for a given log content and embedding backend.
std::filesystem::path cache_path_for(const std::filesystem::path& cache_dir,
                                     std::string_view raw_text, std::string_view backend_tag,
                                     std::size_t chunk_budget);

}  // namespace loglens::index
