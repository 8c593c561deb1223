#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "loglens/gateway/model_gateway.hpp"
#include "loglens/orchestrator/session.hpp"

namespace loglens::eval {

enum class Task {
    Summarization,
    PatternExtraction,
    AnomalyDetection,
    RootCauseAnalysis,
    PredictiveFailureAnalysis,
    LogUnderstanding,
    LogFilteringAndSearching,
};

std::string_view to_string(Task task) noexcept;
/// Case-insensitive; spaces and hyphens are treated as underscores.
std::optional<Task> task_from_string(std::string_view name);

struct EvalCase {
    std::string id;
    Task task = Task::Summarization;
    std::string question;
    std::string reference_answer;
    /// Absent when the answer is to be generated live.
    std::optional<std::string> generated_answer;
};

/// One JSON document:
///
///     {"name": "...", "log_file": "optional/path.log", "category": "Linux",
///      "cases": [{"id": "...", "task": "summarization", "question": "...",
///                 "reference_answer": "...", "generated_answer": "..."}]}
///
/// `log_file` is resolved against the manifest's directory.
struct Manifest {
    std::string name;
    std::optional<std::filesystem::path> log_file;
    std::optional<std::string> category;
    std::vector<EvalCase> cases;
};

/// Throws ManifestError naming the offending line or case/field.
Manifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir = {});
Manifest load_manifest(const std::filesystem::path& path);

struct ScoreRow {
    std::string case_id;
    Task task = Task::Summarization;
    std::string question;
    std::string generated_answer;
    double cosine = 0.0;
    double rouge1_precision = 0.0;
    double rouge1_recall = 0.0;
    double rouge1_f1 = 0.0;
};

struct TaskMean {
    Task task = Task::Summarization;
    std::size_t cases = 0;
    double cosine = 0.0;
    double rouge1_precision = 0.0;
    double rouge1_recall = 0.0;
    double rouge1_f1 = 0.0;
};

struct BenchmarkReport {
    std::string manifest_name;
    std::vector<ScoreRow> rows;   // manifest order
    std::vector<TaskMean> tasks;  // Task enum order, tasks with cases only
};

/// Scores every case. Cases without a generated answer are answered through
/// `session` and `gateway`; without those, such cases raise ManifestError.
BenchmarkReport run_benchmark(const Manifest& manifest,
                              const orchestrator::Session* session = nullptr,
                              const gateway::ModelGateway* gateway = nullptr);

std::string scores_csv(const BenchmarkReport& report);
nlohmann::json report_json(const BenchmarkReport& report);

/// Writes scores.csv and report.json into `out_dir`.
void write_report(const BenchmarkReport& report, const std::filesystem::path& out_dir);

}  // namespace loglens::eval
