#include "loglens/eval/benchmark.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <thread>

#include "loglens/common/csv.hpp"
#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"
#include "loglens/eval/metrics.hpp"
#include "loglens/orchestrator/pipeline.hpp"

namespace loglens::eval {

namespace {

constexpr std::array<Task, 7> kTasks = {
    Task::Summarization,     Task::PatternExtraction,         Task::AnomalyDetection,
    Task::RootCauseAnalysis, Task::PredictiveFailureAnalysis, Task::LogUnderstanding,
    Task::LogFilteringAndSearching,
};

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::string required_string(const nlohmann::json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        throw ManifestError(where + ": missing string field '" + key + "'");
    }
    auto value = it->get<std::string>();
    if (text::strip(value).empty()) throw ManifestError(where + ": field '" + key + "' is empty");
    return value;
}

std::string format_score(double x) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << x;
    return out.str();
}

ScoreRow score_case(const EvalCase& c, std::string generated) {
    ScoreRow row;
    row.case_id = c.id;
    row.task = c.task;
    row.question = c.question;
    row.generated_answer = std::move(generated);
    row.cosine = cosine_similarity(row.generated_answer, c.reference_answer);
    auto r = rouge1(row.generated_answer, c.reference_answer);
    row.rouge1_precision = r.precision;
    row.rouge1_recall = r.recall;
    row.rouge1_f1 = r.f1;
    return row;
}

}  // namespace

std::string_view to_string(Task task) noexcept {
    switch (task) {
        case Task::Summarization: return "summarization";
        case Task::PatternExtraction: return "pattern_extraction";
        case Task::AnomalyDetection: return "anomaly_detection";
        case Task::RootCauseAnalysis: return "root_cause_analysis";
        case Task::PredictiveFailureAnalysis: return "predictive_failure_analysis";
        case Task::LogUnderstanding: return "log_understanding";
        case Task::LogFilteringAndSearching: return "log_filtering_and_searching";
    }
    return "";
}

std::optional<Task> task_from_string(std::string_view name) {
    auto key = text::to_lower(text::strip(name));
    std::replace(key.begin(), key.end(), ' ', '_');
    std::replace(key.begin(), key.end(), '-', '_');
    for (auto t : kTasks) {
        if (key == to_string(t)) return t;
    }
    return std::nullopt;
}

Manifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ManifestError("manifest line " + std::to_string(line_of_offset(json_text, e.byte)) +
                            ": invalid JSON");
    }
    if (!doc.is_object()) throw ManifestError("manifest: top level must be an object");

    Manifest m;
    m.name = doc.value("name", std::string("manifest"));
    if (doc.contains("log_file")) {
        std::filesystem::path p = doc.at("log_file").get<std::string>();
        m.log_file = p.is_absolute() ? p : base_dir / p;
    }
    if (doc.contains("category")) m.category = doc.at("category").get<std::string>();

    auto cases = doc.find("cases");
    if (cases == doc.end() || !cases->is_array() || cases->empty()) {
        throw ManifestError("manifest: 'cases' must be a non-empty array");
    }
    for (std::size_t i = 0; i < cases->size(); ++i) {
        const auto& item = (*cases)[i];
        std::string where = "case " + std::to_string(i + 1);
        if (!item.is_object()) throw ManifestError(where + ": must be an object");
        EvalCase c;
        c.id = item.value("id", std::to_string(i + 1));
        where += " (" + c.id + ")";
        auto task_name = required_string(item, "task", where);
        auto task = task_from_string(task_name);
        if (!task) throw ManifestError(where + ": unknown task '" + task_name + "'");
        c.task = *task;
        c.question = required_string(item, "question", where);
        c.reference_answer = required_string(item, "reference_answer", where);
        if (item.contains("generated_answer") && !item.at("generated_answer").is_null()) {
            c.generated_answer = required_string(item, "generated_answer", where);
        }
        m.cases.push_back(std::move(c));
    }
    return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifestError("cannot read manifest " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str(), path.parent_path());
}

BenchmarkReport run_benchmark(const Manifest& manifest, const orchestrator::Session* session,
                              const gateway::ModelGateway* gateway) {
    // Generation is sequential (queries on a session are serialized);
    // scoring is pure and runs in parallel.
    std::vector<std::string> generated(manifest.cases.size());
    for (std::size_t i = 0; i < manifest.cases.size(); ++i) {
        const auto& c = manifest.cases[i];
        if (c.generated_answer) {
            generated[i] = *c.generated_answer;
            continue;
        }
        if (!session || !gateway) {
            throw ManifestError("case " + std::to_string(i + 1) + " (" + c.id +
                                "): no generated_answer and no live session");
        }
        generated[i] = orchestrator::answer_query(*session, c.question, *gateway).text;
    }

    BenchmarkReport report;
    report.manifest_name = manifest.name;
    report.rows.resize(manifest.cases.size());
    std::vector<std::exception_ptr> errors(manifest.cases.size());
    {
        const auto workers = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < manifest.cases.size(); i += workers) {
                    try {
                        report.rows[i] = score_case(manifest.cases[i], generated[i]);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!errors[i]) continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const EmptyTextError& e) {
            throw ManifestError("case " + std::to_string(i + 1) + " (" + manifest.cases[i].id +
                                "): " + e.what());
        }
    }

    for (auto task : kTasks) {
        TaskMean mean{task};
        for (const auto& row : report.rows) {
            if (row.task != task) continue;
            ++mean.cases;
            mean.cosine += row.cosine;
            mean.rouge1_precision += row.rouge1_precision;
            mean.rouge1_recall += row.rouge1_recall;
            mean.rouge1_f1 += row.rouge1_f1;
        }
        if (mean.cases == 0) continue;
        const auto n = static_cast<double>(mean.cases);
        mean.cosine /= n;
        mean.rouge1_precision /= n;
        mean.rouge1_recall /= n;
        mean.rouge1_f1 /= n;
        report.tasks.push_back(mean);
    }
    return report;
}

std::string scores_csv(const BenchmarkReport& report) {
    std::string out = csv::format_row(
        {"case_id", "task", "cosine", "rouge1_precision", "rouge1_recall", "rouge1_f1"});
    for (const auto& row : report.rows) {
        out += csv::format_row({row.case_id, std::string(to_string(row.task)),
                                format_score(row.cosine), format_score(row.rouge1_precision),
                                format_score(row.rouge1_recall), format_score(row.rouge1_f1)});
    }
    return out;
}

nlohmann::json report_json(const BenchmarkReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& row : report.rows) {
        cases.push_back({{"id", row.case_id},
                         {"task", to_string(row.task)},
                         {"question", row.question},
                         {"generated_answer", row.generated_answer},
                         {"cosine", row.cosine},
                         {"rouge1_precision", row.rouge1_precision},
                         {"rouge1_recall", row.rouge1_recall},
                         {"rouge1_f1", row.rouge1_f1}});
    }
    nlohmann::json tasks = nlohmann::json::array();
    for (const auto& t : report.tasks) {
        tasks.push_back({{"task", to_string(t.task)},
                         {"cases", t.cases},
                         {"cosine", t.cosine},
                         {"rouge1_precision", t.rouge1_precision},
                         {"rouge1_recall", t.rouge1_recall},
                         {"rouge1_f1", t.rouge1_f1}});
    }
    return {{"manifest", report.manifest_name}, {"cases", cases}, {"task_means", tasks}};
}

void write_report(const BenchmarkReport& report, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::ofstream csv_out(out_dir / "scores.csv", std::ios::binary);
    std::ofstream json_out(out_dir / "report.json", std::ios::binary);
    if (!csv_out || !json_out) throw IoError("cannot write report into " + out_dir.string());
    csv_out << scores_csv(report);
    json_out << report_json(report).dump(2) << '\n';
}

}  // namespace loglens::eval
