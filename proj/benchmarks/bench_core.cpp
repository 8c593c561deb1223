#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "loglens/eval/metrics.hpp"
#include "loglens/gateway/mock_gateway.hpp"
#include "loglens/index/chunk_index.hpp"
#include "loglens/parsing/drain.hpp"
#include "loglens/parsing/drain_config.hpp"
#include "loglens/search/search_tools.hpp"

using namespace loglens;

namespace {

// HDFS-shaped lines with a handful of recurring shapes.
std::vector<std::string> hdfs_like_lines(std::size_t n) {
    std::mt19937_64 rng(7);
    auto block = [&] { return "blk_" + std::to_string(rng() % 10'000'000'000ULL); };
    auto ip = [&] {
        return "10.25" + std::to_string(rng() % 10) + "." + std::to_string(rng() % 256) + "." +
               std::to_string(rng() % 256) + ":50010";
    };
    std::vector<std::string> lines;
    lines.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string head = "081109 2035" + std::to_string(10 + rng() % 50) + " " +
                           std::to_string(rng() % 30000) + " INFO ";
        switch (rng() % 4) {
            case 0:
                lines.push_back(head + "dfs.DataNode$PacketResponder: PacketResponder " +
                                std::to_string(rng() % 3) + " for block " + block() + " terminating");
                break;
            case 1:
                lines.push_back(head + "dfs.DataNode$DataXceiver: Receiving block " + block() +
                                " src: /" + ip() + " dest: /" + ip());
                break;
            case 2:
                lines.push_back(head + "dfs.FSNamesystem: BLOCK* NameSystem.addStoredBlock: blockMap updated: " +
                                ip() + " is added to " + block() + " size 67108864");
                break;
            default:
                lines.push_back(head + "dfs.DataNode$PacketResponder: Received block " + block() +
                                " of size 67108864 from /" + ip());
        }
    }
    return lines;
}

void BM_ParseLines(benchmark::State& state) {
    const auto lines = hdfs_like_lines(static_cast<std::size_t>(state.range(0)));
    const auto config = parsing::DrainRegistry::builtin().get(parsing::LogCategory::HDFS);
    for (auto _ : state) benchmark::DoNotOptimize(parsing::parse_lines(lines, config));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParseLines)->Arg(2'000)->Arg(20'000);

void BM_KeywordSearch(benchmark::State& state) {
    const auto lines = hdfs_like_lines(static_cast<std::size_t>(state.range(0)));
    const std::vector<std::string> keywords = {"terminating", "exception"};
    for (auto _ : state) benchmark::DoNotOptimize(search::keyword_search(lines, keywords));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KeywordSearch)->Arg(20'000);

void BM_SemanticSearch(benchmark::State& state) {
    std::string raw;
    for (const auto& l : hdfs_like_lines(20'000)) raw += l + "\n";
    const gateway::MockGateway gw(gateway::MockScript::parse("default x\n"));
    const auto index = index::build_index(index::chunk_log(raw), gw);
    for (auto _ : state) {
        benchmark::DoNotOptimize(index::semantic_search(index, "packet responder terminating", gw, 2));
    }
    state.counters["chunks"] = static_cast<double>(index.chunks.size());
}
BENCHMARK(BM_SemanticSearch);

void BM_Metrics(benchmark::State& state) {
    const std::string a =
        "The log records HDFS block allocation, replication and deletion across data nodes.";
    const std::string b = "Data nodes receive, replicate and delete HDFS blocks allocated by the name node.";
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval::cosine_similarity(a, b));
        benchmark::DoNotOptimize(eval::rouge1(a, b));
    }
}
BENCHMARK(BM_Metrics);

}  // namespace

BENCHMARK_MAIN();
