#include "loglens/eval/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <unordered_map>

#include "loglens/common/errors.hpp"

namespace loglens::eval {

namespace {

std::map<std::string, std::size_t> term_counts(const std::vector<std::string>& tokens) {
    std::map<std::string, std::size_t> counts;
    for (const auto& t : tokens) ++counts[t];
    return counts;
}

std::vector<std::string> require_tokens(std::string_view text, const char* which) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw EmptyTextError(std::string(which) + " text has no tokens");
    return tokens;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x80 && std::isalnum(u)) {
            current += static_cast<char>(std::tolower(u));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

double cosine_similarity(std::string_view text_a, std::string_view text_b) {
    const auto a = term_counts(require_tokens(text_a, "first"));
    const auto b = term_counts(require_tokens(text_b, "second"));

    double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (const auto& [term, count] : a) {
        norm_a += static_cast<double>(count) * count;
        if (auto it = b.find(term); it != b.end()) dot += static_cast<double>(count) * it->second;
    }
    for (const auto& [term, count] : b) norm_b += static_cast<double>(count) * count;
    if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
    return std::clamp(dot / std::sqrt(norm_a * norm_b), 0.0, 1.0);
}

double f1_score(double precision, double recall) {
    const double sum = precision + recall;
    return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

RougeScore rouge1(std::string_view candidate, std::string_view reference) {
    const auto cand = require_tokens(candidate, "candidate");
    const auto ref = require_tokens(reference, "reference");
    const auto cand_counts = term_counts(cand);
    const auto ref_counts = term_counts(ref);

    std::size_t overlap = 0;
    for (const auto& [term, count] : cand_counts) {
        if (auto it = ref_counts.find(term); it != ref_counts.end()) {
            overlap += std::min(count, it->second);
        }
    }
    RougeScore s;
    s.precision = static_cast<double>(overlap) / static_cast<double>(cand.size());
    s.recall = static_cast<double>(overlap) / static_cast<double>(ref.size());
    s.f1 = f1_score(s.precision, s.recall);
    return s;
}

double grouping_accuracy(std::span<const std::string> predicted,
                         std::span<const std::string> truth) {
    if (predicted.size() != truth.size()) {
        throw LengthMismatchError("grouping_accuracy: label vectors differ in length");
    }
    if (truth.empty()) return 0.0;

    std::unordered_map<std::string, std::size_t> predicted_size;
    for (const auto& p : predicted) ++predicted_size[p];

    // For each truth group: its size and whether all members share one
    // predicted label.
    struct Group {
        std::size_t size = 0;
        const std::string* predicted = nullptr;
        bool uniform = true;
    };
    std::unordered_map<std::string, Group> groups;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        auto& g = groups[truth[i]];
        if (g.size == 0) {
            g.predicted = &predicted[i];
        } else if (*g.predicted != predicted[i]) {
            g.uniform = false;
        }
        ++g.size;
    }

    std::size_t correct = 0;
    for (const auto& [label, g] : groups) {
        if (g.uniform && predicted_size.at(*g.predicted) == g.size) correct += g.size;
    }
    return static_cast<double>(correct) / static_cast<double>(truth.size());
}

}  // namespace loglens::eval
