#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "loglens/common/errors.hpp"
#include "loglens/eval/benchmark.hpp"
#include "loglens/eval/metrics.hpp"
#include "oracles.hpp"
#include "prompt_oracle.hpp"
#include "scenarios.hpp"

using namespace loglens;
using namespace loglens::eval;

TEST(Metrics, CosineExamples) {
    EXPECT_DOUBLE_EQ(cosine_similarity("a b", "a b"), 1.0);
    EXPECT_DOUBLE_EQ(cosine_similarity("a", "b"), 0.0);
    EXPECT_DOUBLE_EQ(cosine_similarity("a a b", "a b b"), 0.8);
    EXPECT_DOUBLE_EQ(cosine_similarity("The CAT!", "the cat"), 1.0);
    EXPECT_THROW(cosine_similarity("...", "a"), EmptyTextError);
}

TEST(Metrics, RougeExamples) {
    const auto same = rouge1("x y z", "x y z");
    EXPECT_DOUBLE_EQ(same.precision, 1.0);
    EXPECT_DOUBLE_EQ(same.recall, 1.0);
    EXPECT_DOUBLE_EQ(same.f1, 1.0);
    const auto r = rouge1("the cat sat", "the cat sat on the mat");
    EXPECT_DOUBLE_EQ(r.precision, 1.0);
    EXPECT_DOUBLE_EQ(r.recall, 0.5);
    EXPECT_DOUBLE_EQ(r.f1, 2.0 / 3.0);
    const auto none = rouge1("a b", "c d");
    EXPECT_EQ(none.precision, 0.0);
    EXPECT_EQ(none.recall, 0.0);
    EXPECT_EQ(none.f1, 0.0);
    EXPECT_THROW(rouge1("", "a"), EmptyTextError);
}

TEST(Metrics, F1AndTokenizer) {
    EXPECT_EQ(f1_score(0, 0), 0.0);
    EXPECT_DOUBLE_EQ(f1_score(1, 0.5), 2.0 / 3.0);
    EXPECT_EQ(tokenize("Hello, WORLD_42 x-y"), (std::vector<std::string>{"hello", "world", "42", "x", "y"}));
}

TEST(Metrics, MatchBruteForceOracle) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const auto a = loglens::testing::random_phrase(rng, 1, 12);
        const auto b = loglens::testing::random_phrase(rng, 1, 12);
        EXPECT_NEAR(cosine_similarity(a, b), loglens::testing::oracle_cosine(a, b), 1e-9) << a << " | " << b;
        const auto got = rouge1(a, b);
        const auto want = loglens::testing::oracle_rouge1(a, b);
        EXPECT_NEAR(got.precision, want.precision, 1e-9);
        EXPECT_NEAR(got.recall, want.recall, 1e-9);
        EXPECT_NEAR(got.f1, want.f1, 1e-9);
    }
}

TEST(Metrics, SymmetryAndBounds) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 500; ++i) {
        const auto a = loglens::testing::random_phrase(rng, 1, 10);
        const auto b = loglens::testing::random_phrase(rng, 1, 10);
        const double c = cosine_similarity(a, b);
        EXPECT_NEAR(c, cosine_similarity(b, a), 1e-15);
        EXPECT_GE(c, 0.0);
        EXPECT_LE(c, 1.0 + 1e-12);
        const auto ab = rouge1(a, b);
        const auto ba = rouge1(b, a);
        EXPECT_DOUBLE_EQ(ab.precision, ba.recall);
        EXPECT_DOUBLE_EQ(ab.recall, ba.precision);
        for (double v : {ab.precision, ab.recall, ab.f1}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST(GroupingAccuracy, PartitionComparison) {
    const std::vector<std::string> truth = {"A", "A", "B", "C", "C"};
    EXPECT_DOUBLE_EQ(grouping_accuracy(std::vector<std::string>{"x", "x", "y", "z", "z"}, truth), 1.0);
    // Merging B into A's cluster breaks lines 1-3; C stays intact.
    EXPECT_DOUBLE_EQ(grouping_accuracy(std::vector<std::string>{"x", "x", "x", "z", "z"}, truth), 0.4);
    EXPECT_THROW(grouping_accuracy(std::vector<std::string>{"x"}, truth), LengthMismatchError);
}

TEST(Manifest, ParsesAndValidates) {
    const auto m = load_manifest(loglens::testing::fixture_path("manifest_offline.json"));
    EXPECT_EQ(m.name, "offline-sample");
    ASSERT_EQ(m.cases.size(), 4u);
    EXPECT_EQ(m.cases[2].task, Task::PatternExtraction);
    EXPECT_EQ(task_from_string("root cause analysis"), Task::RootCauseAnalysis);
    EXPECT_EQ(task_from_string("log-filtering-and-searching"), Task::LogFilteringAndSearching);

    try {
        parse_manifest(R"({"name":"m","cases":[{"id":"c7","task":"summarization","question":"q"}]})");
        FAIL();
    } catch (const ManifestError& e) {
        EXPECT_NE(std::string(e.what()).find("c7"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("reference_answer"), std::string::npos);
    }
    EXPECT_THROW(parse_manifest("{\"name\": \n oops"), ManifestError);
    EXPECT_THROW(parse_manifest(
                     R"({"name":"m","cases":[{"id":"c","task":"dancing","question":"q","reference_answer":"r"}]})"),
                 ManifestError);
}

TEST(Benchmark, IdenticalAnswersScoreOne) {
    const auto m = parse_manifest(R"({"name":"m","cases":[
        {"id":"a","task":"summarization","question":"q","reference_answer":"one two","generated_answer":"one two"},
        {"id":"b","task":"summarization","question":"q","reference_answer":"three","generated_answer":"three"}]})");
    const auto r = run_benchmark(m);
    ASSERT_EQ(r.tasks.size(), 1u);
    EXPECT_EQ(r.tasks[0].cases, 2u);
    EXPECT_DOUBLE_EQ(r.tasks[0].cosine, 1.0);
    EXPECT_DOUBLE_EQ(r.tasks[0].rouge1_f1, 1.0);
}

TEST(Benchmark, MeansAreAveragesOfRows) {
    const auto r = run_benchmark(load_manifest(loglens::testing::fixture_path("manifest_offline.json")));
    ASSERT_EQ(r.rows.size(), 4u);
    EXPECT_EQ(r.rows[0].case_id, "s1");
    EXPECT_EQ(r.tasks[0].task, Task::Summarization);
    EXPECT_NEAR(r.tasks[0].cosine, (r.rows[0].cosine + r.rows[1].cosine) / 2, 1e-12);
    EXPECT_NEAR(r.tasks[0].rouge1_f1, (r.rows[0].rouge1_f1 + r.rows[1].rouge1_f1) / 2, 1e-12);
    const auto csv = scores_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "case_id,task,cosine,rouge1_precision,rouge1_recall,rouge1_f1");
    EXPECT_EQ(report_json(r)["cases"].size(), 4u);
}

TEST(Benchmark, LiveRunNeedsABackend) {
    const auto m = load_manifest(loglens::testing::fixture_path("manifest_live.json"));
    EXPECT_THROW(run_benchmark(m), std::exception);
}

TEST(Benchmark, LiveMockRunIsRepeatable) {
    const auto m = load_manifest(loglens::testing::fixture_path("manifest_live.json"));
    ASSERT_EQ(m.cases.size(), 3u);
    std::string first;
    for (int run = 0; run < 3; ++run) {
        auto gw = loglens::testing::fixture_gateway();
        auto s = loglens::testing::fixture_session(gw);
        const auto csv = scores_csv(run_benchmark(m, s.get(), &gw));
        if (run == 0) first = csv;
        EXPECT_EQ(csv, first);
    }
}

TEST(Benchmark, WriteReportCreatesBothFiles) {
    const auto dir = std::filesystem::temp_directory_path() / "loglens_eval_report_test";
    std::filesystem::remove_all(dir);
    write_report(run_benchmark(load_manifest(loglens::testing::fixture_path("manifest_offline.json"))), dir);
    EXPECT_TRUE(std::filesystem::exists(dir / "scores.csv"));
    EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
    std::filesystem::remove_all(dir);
}
