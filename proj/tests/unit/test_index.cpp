#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "loglens/common/errors.hpp"
#include "loglens/gateway/mock_gateway.hpp"
#include "loglens/index/chunk_index.hpp"
#include "oracles.hpp"

using namespace loglens;
using namespace loglens::index;
using gateway::HashEmbedder;
using gateway::MockGateway;
using gateway::MockScript;

namespace {

std::string words_line(std::size_t n, const std::string& w = "tok") {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + w;
    return s + "\n";
}

MockGateway offline(std::size_t dim = HashEmbedder::kDefaultDim) {
    return MockGateway(MockScript::parse("default x\n"), HashEmbedder(dim));
}

double dot_cosine(const gateway::Embedding& a, const gateway::Embedding& b) {
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += double(a[i]) * b[i];
        aa += double(a[i]) * a[i];
        bb += double(b[i]) * b[i];
    }
    return (aa == 0 || bb == 0) ? 0.0 : ab / std::sqrt(aa * bb);
}

}  // namespace

TEST(Chunking, TenLinesOfTwoHundredWordsMakeTwoChunks) {
    std::string raw;
    for (int i = 0; i < 10; ++i) raw += words_line(200);
    const auto chunks = chunk_log(raw, 1024);
    ASSERT_EQ(chunks.size(), 2u);
    EXPECT_EQ(chunks[0].first_line, 1u);
    EXPECT_EQ(chunks[0].last_line, 5u);
    EXPECT_EQ(chunks[0].token_count, 1000u);
    EXPECT_EQ(chunks[1].first_line, 6u);
    EXPECT_EQ(chunks[1].last_line, 10u);
}

TEST(Chunking, OversizedLineStandsAlone) {
    const auto raw = words_line(3) + words_line(50) + words_line(3);
    const auto chunks = chunk_log(raw, 10);
    ASSERT_EQ(chunks.size(), 3u);
    EXPECT_EQ(chunks[1].token_count, 50u);
    EXPECT_EQ(chunks[1].first_line, 2u);
    EXPECT_EQ(chunks[1].last_line, 2u);
}

TEST(Chunking, EmptyInputAndZeroBudget) {
    EXPECT_THROW(chunk_log(""), EmptyInputError);
    EXPECT_THROW(chunk_log("a\n", 0), PreconditionError);
}

TEST(Chunking, TilesTheInputExactly) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        std::string raw;
        const auto n = 1 + rng() % 60;
        for (std::size_t i = 0; i < n; ++i) {
            raw += words_line(rng() % 40, loglens::testing::random_word(rng));
            if (rng() % 7 == 0) raw.insert(raw.size() - 1, "\r");
        }
        if (rng() % 2) raw.pop_back();  // sometimes no trailing newline
        const std::size_t budget = 1 + rng() % 100;
        const auto chunks = chunk_log(raw, budget);
        std::string joined;
        std::size_t next_line = 1;
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            EXPECT_EQ(chunks[c].chunk_id, c);
            EXPECT_EQ(chunks[c].first_line, next_line);
            EXPECT_GE(chunks[c].last_line, chunks[c].first_line);
            if (chunks[c].first_line != chunks[c].last_line) EXPECT_LE(chunks[c].token_count, budget);
            next_line = chunks[c].last_line + 1;
            joined += chunks[c].text;
        }
        EXPECT_EQ(joined, raw) << "trial " << trial;
    }
}

TEST(SemanticSearch, RankingMatchesBruteForceCosine) {
    std::mt19937_64 rng(22);
    const auto gw = offline(64);
    HashEmbedder embed(64);
    for (int trial = 0; trial < 50; ++trial) {
        std::string raw;
        for (int i = 0; i < 40; ++i) raw += loglens::testing::random_phrase(rng, 1, 6) + "\n";
        const auto idx = build_index(chunk_log(raw, 8), gw);
        const auto query = loglens::testing::random_phrase(rng, 1, 4);
        const std::size_t k = 1 + rng() % 5;

        std::vector<std::pair<double, std::size_t>> expected;
        const auto qv = embed(query);
        for (const auto& c : idx.chunks) expected.push_back({dot_cosine(embed(c.text), qv), c.chunk_id});
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });

        const auto got = semantic_search(idx, query, gw, k);
        ASSERT_EQ(got.size(), std::min(k, idx.chunks.size()));
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_NEAR(got[i].score, expected[i].first, 1e-6);
            if (i > 0) {
                EXPECT_GE(got[i - 1].score, got[i].score);
                if (got[i - 1].score == got[i].score) {
                    EXPECT_LT(got[i - 1].chunk->chunk_id, got[i].chunk->chunk_id);
                }
            }
        }
    }
}

TEST(SemanticSearch, ChunkTextFindsItself) {
    const auto gw = offline();
    std::string raw;
    for (int i = 0; i < 6; ++i) raw += "line " + std::to_string(i) + " word" + std::to_string(i) + "\n";
    const auto idx = build_index(chunk_log(raw, 3), gw);
    for (const auto& c : idx.chunks) {
        const auto top = semantic_search(idx, c.text, gw, 1);
        EXPECT_NEAR(top[0].score, 1.0, 1e-6);
        EXPECT_EQ(top[0].chunk->chunk_id, c.chunk_id);
    }
}

TEST(SemanticSearch, KIsClampedAndValidated) {
    const auto gw = offline();
    const auto idx = build_index(chunk_log("a\nb\n", 1), gw);
    EXPECT_EQ(semantic_search(idx, "a", gw, 10).size(), 2u);
    EXPECT_THROW(semantic_search(idx, "a", gw, 0), PreconditionError);
}

TEST(SemanticSearch, DimensionMismatchIsReported) {
    const auto idx = build_index(chunk_log("a\nb\n", 1), offline(64));
    EXPECT_THROW(semantic_search(idx, "a", offline(32), 1), DimensionMismatchError);
}

TEST(IndexCache, RoundTripAndRejectsGarbage) {
    const auto dir = std::filesystem::temp_directory_path() / "loglens_index_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string raw = "alpha beta\r\ngamma\ndelta epsilon zeta\n";
    const auto idx = build_index(chunk_log(raw, 2), offline());
    const auto path = cache_path_for(dir, raw, "mock", 2);
    EXPECT_NE(path, cache_path_for(dir, raw, "mock", 3));
    EXPECT_NE(path, cache_path_for(dir, raw + "x", "mock", 2));
    save_index(idx, path);
    const auto back = load_index(path);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, idx);

    std::ofstream(dir / "junk.bin") << "nonsense";
    EXPECT_FALSE(load_index(dir / "junk.bin").has_value());
    EXPECT_FALSE(load_index(dir / "missing.bin").has_value());
    std::filesystem::remove_all(dir);
}
