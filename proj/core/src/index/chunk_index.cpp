#include "loglens/index/chunk_index.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"

namespace loglens::index {

static_assert(std::endian::native == std::endian::little,
              "index cache format assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'L', 'L', 'I', 'X'};
constexpr std::uint32_t kFormatVersion = 1;

void normalize(gateway::Embedding& v) {
    double norm = 0.0;
    for (float x : v) norm += static_cast<double>(x) * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    for (float& x : v) x = static_cast<float>(x / norm);
}

double dot(const gateway::Embedding& a, const gateway::Embedding& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * b[i];
    return s;
}

template <typename T>
void write_pod(std::ostream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
bool read_pod(std::istream& in, T& value) {
    return static_cast<bool>(in.read(reinterpret_cast<char*>(&value), sizeof value));
}

}  // namespace

std::vector<Chunk> chunk_log(std::string_view raw_text, std::size_t budget) {
    if (raw_text.empty()) throw EmptyInputError("chunk_log: empty log text");
    if (budget == 0) throw PreconditionError("chunk_log: budget must be positive");

    std::vector<Chunk> chunks;
    Chunk current;
    bool open = false;
    std::size_t line_no = 0;

    for (auto line : text::split_lines_keep_newline(raw_text)) {
        ++line_no;
        const auto tokens = text::count_whitespace_tokens(line);
        if (open && current.token_count + tokens > budget) {
            chunks.push_back(std::move(current));
            current = Chunk{};
            open = false;
        }
        if (!open) {
            current.chunk_id = chunks.size();
            current.first_line = line_no;
            open = true;
        }
        current.last_line = line_no;
        current.text += line;
        current.token_count += tokens;
    }
    if (open) chunks.push_back(std::move(current));
    return chunks;
}

ChunkIndex build_index(std::vector<Chunk> chunks, const gateway::ModelGateway& gateway) {
    if (chunks.empty()) throw EmptyInputError("build_index: no chunks");
    std::vector<std::string> texts;
    texts.reserve(chunks.size());
    for (const auto& c : chunks) texts.push_back(c.text);

    auto vectors = gateway.embed(texts);
    const auto dim = vectors.front().size();
    if (dim == 0) throw DimensionMismatchError("embedding backend returned empty vectors");
    for (auto& v : vectors) {
        if (v.size() != dim) throw DimensionMismatchError("inconsistent embedding dimensions");
        normalize(v);
    }
    return ChunkIndex{std::move(chunks), std::move(vectors), dim};
}

std::vector<ScoredChunk> rank_chunks(const ChunkIndex& index, const gateway::Embedding& query,
                                     std::size_t k) {
    if (k == 0) throw PreconditionError("semantic_search: k must be >= 1");
    if (index.chunks.empty()) throw EmptyInputError("semantic_search: empty index");
    if (query.size() != index.dim) {
        throw DimensionMismatchError("query vector dimension differs from index");
    }

    auto q = query;
    normalize(q);
    std::vector<ScoredChunk> scored;
    scored.reserve(index.chunks.size());
    for (std::size_t i = 0; i < index.chunks.size(); ++i) {
        scored.push_back({&index.chunks[i], std::clamp(dot(q, index.vectors[i]), -1.0, 1.0)});
    }
    const auto keep = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep),
                      scored.end(), [](const ScoredChunk& a, const ScoredChunk& b) {
                          if (a.score != b.score) return a.score > b.score;
                          return a.chunk->chunk_id < b.chunk->chunk_id;
                      });
    scored.resize(keep);
    return scored;
}

std::vector<ScoredChunk> semantic_search(const ChunkIndex& index, std::string_view query,
                                         const gateway::ModelGateway& gateway, std::size_t k) {
    const std::string q(query);
    auto vectors = gateway.embed(std::span<const std::string>(&q, 1));
    return rank_chunks(index, vectors.front(), k);
}

void save_index(const ChunkIndex& index, const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write index cache " + tmp.string());
        out.write(kMagic, sizeof kMagic);
        write_pod(out, kFormatVersion);
        write_pod(out, static_cast<std::uint64_t>(index.dim));
        write_pod(out, static_cast<std::uint64_t>(index.chunks.size()));
        for (const auto& v : index.vectors) {
            out.write(reinterpret_cast<const char*>(v.data()),
                      static_cast<std::streamsize>(v.size() * sizeof(float)));
        }
        for (const auto& c : index.chunks) {
            write_pod(out, static_cast<std::uint64_t>(c.chunk_id));
            write_pod(out, static_cast<std::uint64_t>(c.first_line));
            write_pod(out, static_cast<std::uint64_t>(c.last_line));
            write_pod(out, static_cast<std::uint64_t>(c.token_count));
            write_pod(out, static_cast<std::uint64_t>(c.text.size()));
            out.write(c.text.data(), static_cast<std::streamsize>(c.text.size()));
        }
        if (!out) throw IoError("failed writing index cache " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<ChunkIndex> load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;

    char magic[4];
    std::uint32_t version = 0;
    std::uint64_t dim = 0, count = 0;
    if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
        return std::nullopt;
    }
    if (!read_pod(in, version) || version != kFormatVersion) return std::nullopt;
    if (!read_pod(in, dim) || !read_pod(in, count) || dim == 0) return std::nullopt;

    ChunkIndex index;
    index.dim = dim;
    index.vectors.assign(count, gateway::Embedding(dim));
    for (auto& v : index.vectors) {
        if (!in.read(reinterpret_cast<char*>(v.data()),
                     static_cast<std::streamsize>(dim * sizeof(float)))) {
            return std::nullopt;
        }
    }
    index.chunks.resize(count);
    for (auto& c : index.chunks) {
        std::uint64_t id, first, last, tokens, len;
        if (!read_pod(in, id) || !read_pod(in, first) || !read_pod(in, last) ||
            !read_pod(in, tokens) || !read_pod(in, len)) {
            return std::nullopt;
        }
        c.chunk_id = id;
        c.first_line = first;
        c.last_line = last;
        c.token_count = tokens;
        c.text.resize(len);
        if (len && !in.read(c.text.data(), static_cast<std::streamsize>(len))) return std::nullopt;
    }
    return index;
}

std::filesystem::path cache_path_for(const std::filesystem::path& cache_dir,
                                     std::string_view raw_text, std::string_view backend_tag,
                                     std::size_t chunk_budget) {
    auto h = text::fnv1a64(raw_text);
    auto tag = text::fnv1a64(std::string(backend_tag) + "/" + std::to_string(chunk_budget));
    return cache_dir / (text::hex64(h) + "-" + text::hex64(tag) + ".idx");
}

}  // namespace loglens::index
