#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loglens::eval {

/// Shared tokenizer for both metrics: ASCII-lowercase, split on runs of
/// non-alphanumeric characters.
std::vector<std::string> tokenize(std::string_view text);

/// Term-frequency cosine similarity. Throws EmptyTextError when either text
/// has no tokens.
double cosine_similarity(std::string_view text_a, std::string_view text_b);

struct RougeScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Clipped unigram overlap of `candidate` against `reference`.
RougeScore rouge1(std::string_view candidate, std::string_view reference);

/// Harmonic mean, 0 when both inputs are 0.
double f1_score(double precision, double recall);

/// Fraction of lines whose predicted cluster holds exactly the same lines
/// as their ground-truth group. Both spans are per-line labels.
double grouping_accuracy(std::span<const std::string> predicted,
                         std::span<const std::string> truth);

}  // namespace loglens::eval
