#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loglens/parsing/drain_config.hpp"

namespace loglens::parsing {

struct SeqDistance {
    /// Matching non-wildcard positions divided by sequence length.
    double similarity = 0.0;
    std::size_t wildcard_count = 0;
};

/// Token similarity between a cluster template and a line of equal length.
/// Template "<*>" positions never count as matches. Empty sequences are
/// identical (similarity 1). Throws LengthMismatchError on unequal lengths.
SeqDistance seq_dist(std::span<const std::string> template_tokens,
                     std::span<const std::string> line_tokens);

/// Template of a cluster after merging: positions that differ become "<*>".
std::vector<std::string> merge_template(std::span<const std::string> template_tokens,
                                        std::span<const std::string> line_tokens);

struct EventTemplate {
    std::string event_id;  // "Event<N>", N >= 1 in discovery order
    std::string template_text;
    std::size_t occurrences = 0;

    friend bool operator==(const EventTemplate&, const EventTemplate&) = default;
};

std::string event_id_for(std::size_t cluster_index);

/// Fixed-depth Drain tree. Layer 1 keys on content token count; the next
/// `depth - 2` layers key on the leading tokens; clusters hang off the
/// last layer. Single-writer; reads are safe once construction is done.
class ParseTree {
public:
    enum class NodeKind { Root, Length, Token, Leaf };

    struct Node {
        NodeKind kind = NodeKind::Root;
        std::string key;
        std::map<std::string, std::unique_ptr<Node>> children;
        std::vector<std::size_t> clusters;  // populated on leaves only
    };

    struct Cluster {
        std::vector<std::string> tokens;
        std::size_t occurrences = 0;
        std::size_t first_line = 0;  // 0-based index of the line that created it
    };

    explicit ParseTree(const DrainConfig& config);

    /// Assigns `tokens` to a cluster, creating one if no candidate reaches
    /// the similarity threshold. Returns the 0-based cluster index.
    std::size_t add(const std::vector<std::string>& tokens, std::size_t line_index);

    /// Read-only lookup: the cluster `tokens` would join, if any.
    std::optional<std::size_t> match(std::span<const std::string> tokens) const;

    const std::vector<Cluster>& clusters() const noexcept { return clusters_; }
    const Node& root() const noexcept { return root_; }

    std::vector<EventTemplate> templates() const;

private:
    const Node* search_leaf(std::span<const std::string> tokens) const;
    Node& insert_leaf(std::span<const std::string> tokens);
    std::optional<std::size_t> best_cluster(const Node& leaf,
                                            std::span<const std::string> tokens) const;

    double st_;
    std::size_t token_layers_;
    std::size_t max_children_;
    Node root_;
    std::vector<Cluster> clusters_;
};

struct StructuredRow {
    std::size_t line_id = 0;  // 1-based
    std::vector<std::string> header_fields;
    std::string content;
    std::string event_id;

    friend bool operator==(const StructuredRow&, const StructuredRow&) = default;
};

struct StructuredLog {
    std::vector<std::string> header_names;
    std::vector<StructuredRow> rows;

    friend bool operator==(const StructuredLog&, const StructuredLog&) = default;
};

struct ParseResult {
    StructuredLog structured;
    std::vector<EventTemplate> templates;
};

/// Parses every line with a fresh tree. Throws EmptyInputError on no lines.
ParseResult parse_lines(std::span<const std::string> lines, const DrainConfig& config);

}  // namespace loglens::parsing
