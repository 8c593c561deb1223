// Runs every primary acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hdfs_corpus.hpp"
#include "loglens/eval/metrics.hpp"
#include "loglens/orchestrator/answer.hpp"
#include "loglens/parsing/drain.hpp"
#include "loglens/parsing/drain_config.hpp"
#include "loglens/search/search_tools.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

using namespace loglens;
namespace lt = loglens::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int precision = 4) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << v;
    return out.str();
}

Outcome hdfs_accuracy() {
    std::optional<lt::LabeledLog> log;
    if (const char* dir = std::getenv("LOGLENS_HDFS_2K_DIR")) log = lt::load_loghub_hdfs_2k(dir);
    if (!log) log = lt::load_loghub_hdfs_2k(std::filesystem::path(LOGLENS_DATA_DIR) / "loghub");
    if (!log) log = lt::hdfs_reconstruction(2024, 2000);

    const auto config = parsing::DrainRegistry::builtin().get(parsing::LogCategory::HDFS);
    const auto start = std::chrono::steady_clock::now();
    const auto parsed = parsing::parse_lines(log->lines, config);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<std::string> predicted;
    for (const auto& row : parsed.structured.rows) predicted.push_back(row.event_id);
    const double accuracy = eval::grouping_accuracy(predicted, log->labels);

    // Name the ground-truth events whose lines do not form exactly one cluster.
    std::map<std::string, std::set<std::string>> clusters_of_event, events_of_cluster;
    std::map<std::string, std::size_t> lines_of_event;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        clusters_of_event[log->labels[i]].insert(predicted[i]);
        events_of_cluster[predicted[i]].insert(log->labels[i]);
        ++lines_of_event[log->labels[i]];
    }
    std::string misgrouped;
    for (const auto& [event, clusters] : clusters_of_event) {
        std::string why;
        if (clusters.size() > 1) why = "split into " + std::to_string(clusters.size()) + " clusters";
        for (const auto& c : clusters) {
            if (events_of_cluster[c].size() > 1 && why.empty()) why = "shares a cluster";
        }
        if (!why.empty()) {
            misgrouped += (misgrouped.empty() ? "" : "; ") + event + " (" +
                          std::to_string(lines_of_event[event]) + " lines, " + why + ")";
        }
    }

    return {accuracy >= 0.99 && seconds < 10.0,
            "accuracy=" + fmt(accuracy) + " (>= 0.99) runtime=" + fmt(seconds, 3) +
                "s (< 10s) lines=" + std::to_string(log->lines.size()) + " templates=" +
                std::to_string(parsed.templates.size()) + " source=" + log->source +
                (misgrouped.empty() ? "" : " misgrouped: " + misgrouped)};
}

parsing::DrainConfig random_config(std::mt19937_64& rng) {
    static const double kSt[] = {0.0, 0.3, 0.4, 0.5, 0.7, 1.0};
    parsing::DrainConfig c;
    c.log_format = "<Content>";
    c.st = kSt[rng() % 6];
    c.depth = 3 + static_cast<int>(rng() % 4);
    c.max_children = static_cast<int>(1 + rng() % 100);
    return c;
}

Outcome conservation() {
    std::mt19937_64 rng(101);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto log = lt::random_log(rng, 1 + rng() % 400);
        const auto parsed = parsing::parse_lines(log.lines, random_config(rng));
        std::size_t total = 0;
        for (const auto& t : parsed.templates) total += t.occurrences;
        if (total != log.lines.size() || parsed.structured.rows.size() != log.lines.size()) ++failures;
    }
    return {failures == 0, "1000 synthetic logs, failures=" + std::to_string(failures)};
}

bool same_matches(const search::SearchResult& got, const std::vector<lt::OracleMatch>& want) {
    if (got.total != want.size() || got.matches.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (got.matches[i].line_id != want[i].line_id || got.matches[i].text != want[i].text) return false;
    }
    return true;
}

Outcome search_oracle() {
    std::mt19937_64 rng(102);
    int keyword_cases = 0, event_cases = 0, failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto log = lt::random_log(rng, 1 + rng() % 120);
        std::vector<std::string> keywords;
        for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) keywords.push_back(lt::random_word(rng));
        if (!same_matches(search::keyword_search(log.lines, keywords), lt::keyword_scan(log.lines, keywords))) {
            ++failures;
        }
        ++keyword_cases;

        parsing::DrainConfig config;
        config.log_format = "<Content>";
        const auto parsed = parsing::parse_lines(log.lines, config);
        std::vector<std::string> line_events;
        for (const auto& row : parsed.structured.rows) line_events.push_back(row.event_id);
        std::vector<std::string> ids;
        for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
            ids.push_back("Event" + std::to_string(1 + rng() % (parsed.templates.size() + 1)));
        }
        const auto found = search::event_search(parsed.structured, parsed.templates, log.lines, ids);
        if (!same_matches(found.result, lt::event_scan(log.lines, line_events, ids))) ++failures;
        ++event_cases;
    }
    return {failures == 0, std::to_string(keyword_cases) + " keyword + " + std::to_string(event_cases) +
                               " event cases, mismatches=" + std::to_string(failures)};
}

Outcome metric_oracle() {
    std::mt19937_64 rng(103);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto a = lt::random_phrase(rng, 1, 14);
        const auto b = lt::random_phrase(rng, 1, 14);
        const auto r = eval::rouge1(a, b);
        const auto o = lt::oracle_rouge1(a, b);
        for (double d : {eval::cosine_similarity(a, b) - lt::oracle_cosine(a, b), r.precision - o.precision,
                         r.recall - o.recall, r.f1 - o.f1}) {
            worst = std::max(worst, std::abs(d));
        }
    }
    const auto cat = eval::rouge1("the cat sat", "the cat sat on the mat");
    const auto same = eval::rouge1("log line", "log line");
    const auto disjoint = eval::rouge1("a b", "c d");
    const bool examples = eval::cosine_similarity("a b", "a b") == 1.0 &&
                          eval::cosine_similarity("a", "b") == 0.0 &&
                          eval::cosine_similarity("a a b", "a b b") == 0.8 && cat.precision == 1.0 &&
                          cat.recall == 0.5 && cat.f1 == 2.0 / 3.0 && same.precision == 1.0 &&
                          same.recall == 1.0 && same.f1 == 1.0 && disjoint.precision == 0.0 &&
                          disjoint.recall == 0.0 && disjoint.f1 == 0.0;
    std::ostringstream worst_text;
    worst_text << std::scientific << std::setprecision(2) << worst;
    return {worst <= 1e-9 && examples, "100 pairs, max |diff|=" + worst_text.str() +
                                           " (<= 1e-9), hand examples " + (examples ? "exact" : "WRONG")};
}

Outcome prompt_fidelity() {
    const auto cases = lt::prompt_fidelity_cases();
    std::set<std::string> templates;
    std::string failed;
    for (const auto& c : cases) {
        templates.insert(c.template_name);
        if (c.actual != c.expected) failed += (failed.empty() ? "" : ", ") + c.name;
    }
    return {failed.empty() && templates.size() == 8,
            std::to_string(templates.size()) + " templates, " + std::to_string(cases.size()) +
                " renderings" + (failed.empty() ? "" : ", differing: " + failed)};
}

Outcome routing_matrix() {
    const auto cases = lt::routing_matrix();
    std::size_t correct = 0;
    std::string failed;
    for (const auto& c : cases) {
        gateway::MockGateway gw(gateway::MockScript::parse(c.script));
        if (routing::route_query(c.query, gw) == c.expected) {
            ++correct;
        } else {
            failed += (failed.empty() ? "" : ", ") + c.name;
        }
    }
    return {correct == cases.size() && cases.size() == 30,
            std::to_string(correct) + "/" + std::to_string(cases.size()) + " routed as contracted" +
                (failed.empty() ? "" : ", wrong: " + failed)};
}

Outcome end_to_end_determinism() {
    std::string first;
    int identical = 0;
    for (int run = 0; run < 5; ++run) {
        nlohmann::json answers = lt::run_end_to_end();
        const auto dump = answers.dump();
        if (run == 0) first = dump;
        if (dump == first) ++identical;
    }
    return {identical == 5, std::to_string(identical) + "/5 runs bit-identical over " +
                                std::to_string(lt::end_to_end_queries().size()) + " queries"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"drain-hdfs-2k-accuracy", hdfs_accuracy},
        {"parser-conservation", conservation},
        {"search-oracle-equivalence", search_oracle},
        {"metric-oracles", metric_oracle},
        {"prompt-fidelity", prompt_fidelity},
        {"routing-dispatch", routing_matrix},
        {"end-to-end-determinism", end_to_end_determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
