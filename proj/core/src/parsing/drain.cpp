#include "loglens/parsing/drain.hpp"

#include <algorithm>

#include "loglens/common/errors.hpp"
#include "loglens/common/text.hpp"
#include "loglens/parsing/preprocess.hpp"

namespace loglens::parsing {

namespace {

const std::string kWild(kWildcard);

std::size_t non_wildcard_children(const ParseTree::Node& node) {
    return node.children.size() - (node.children.contains(kWild) ? 1 : 0);
}

}  // namespace

SeqDistance seq_dist(std::span<const std::string> template_tokens,
                     std::span<const std::string> line_tokens) {
    if (template_tokens.size() != line_tokens.size()) {
        throw LengthMismatchError("seq_dist: template has " +
                                  std::to_string(template_tokens.size()) + " tokens, line has " +
                                  std::to_string(line_tokens.size()));
    }
    if (template_tokens.empty()) return {1.0, 0};
    std::size_t same = 0;
    std::size_t wildcards = 0;
    for (std::size_t i = 0; i < template_tokens.size(); ++i) {
        if (template_tokens[i] == kWild) {
            ++wildcards;
        } else if (template_tokens[i] == line_tokens[i]) {
            ++same;
        }
    }
    return {static_cast<double>(same) / static_cast<double>(template_tokens.size()), wildcards};
}

std::vector<std::string> merge_template(std::span<const std::string> template_tokens,
                                        std::span<const std::string> line_tokens) {
    if (template_tokens.size() != line_tokens.size()) {
        throw LengthMismatchError("merge_template: length mismatch");
    }
    std::vector<std::string> merged(template_tokens.begin(), template_tokens.end());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        if (merged[i] != line_tokens[i]) merged[i] = kWild;
    }
    return merged;
}

std::string event_id_for(std::size_t cluster_index) {
    return "Event" + std::to_string(cluster_index + 1);
}

ParseTree::ParseTree(const DrainConfig& config)
    : st_(config.st),
      token_layers_(static_cast<std::size_t>(std::max(config.depth, 3) - 2)),
      max_children_(static_cast<std::size_t>(std::max(config.max_children, 1))) {
    root_.kind = NodeKind::Root;
}

const ParseTree::Node* ParseTree::search_leaf(std::span<const std::string> tokens) const {
    auto it = root_.children.find(std::to_string(tokens.size()));
    if (it == root_.children.end()) return nullptr;
    const Node* node = it->second.get();
    const auto layers = std::min(token_layers_, tokens.size());
    for (std::size_t i = 0; i < layers; ++i) {
        auto exact = node->children.find(tokens[i]);
        if (exact != node->children.end()) {
            node = exact->second.get();
            continue;
        }
        auto wild = node->children.find(kWild);
        if (wild == node->children.end()) return nullptr;
        node = wild->second.get();
    }
    return node;
}

ParseTree::Node& ParseTree::insert_leaf(std::span<const std::string> tokens) {
    const auto layers = std::min(token_layers_, tokens.size());
    auto descend = [](Node& parent, const std::string& key, NodeKind kind) -> Node& {
        auto& slot = parent.children[key];
        if (!slot) {
            slot = std::make_unique<Node>();
            slot->kind = kind;
            slot->key = key;
        }
        return *slot;
    };

    Node* node = &descend(root_, std::to_string(tokens.size()),
                          layers == 0 ? NodeKind::Leaf : NodeKind::Length);
    for (std::size_t i = 0; i < layers; ++i) {
        const auto kind = (i + 1 == layers) ? NodeKind::Leaf : NodeKind::Token;
        const std::string& token = tokens[i];
        if (text::contains_digit(token)) {
            node = &descend(*node, kWild, kind);
        } else if (node->children.contains(token)) {
            node = node->children.at(token).get();
        } else if (token == kWild || non_wildcard_children(*node) < max_children_) {
            node = &descend(*node, token, kind);
        } else {
            node = &descend(*node, kWild, kind);
        }
    }
    return *node;
}

std::optional<std::size_t> ParseTree::best_cluster(const Node& leaf,
                                                   std::span<const std::string> tokens) const {
    std::optional<std::size_t> best;
    double best_sim = -1.0;
    std::size_t best_wild = 0;
    // Clusters are stored in creation order, so strict comparisons keep the
    // lowest event id on a full tie.
    for (auto index : leaf.clusters) {
        auto d = seq_dist(clusters_[index].tokens, tokens);
        if (d.similarity > best_sim || (d.similarity == best_sim && d.wildcard_count > best_wild)) {
            best = index;
            best_sim = d.similarity;
            best_wild = d.wildcard_count;
        }
    }
    if (best && best_sim >= st_) return best;
    return std::nullopt;
}

std::optional<std::size_t> ParseTree::match(std::span<const std::string> tokens) const {
    const Node* leaf = search_leaf(tokens);
    if (!leaf) return std::nullopt;
    return best_cluster(*leaf, tokens);
}

std::size_t ParseTree::add(const std::vector<std::string>& tokens, std::size_t line_index) {
    if (auto found = match(tokens)) {
        auto& cluster = clusters_[*found];
        cluster.tokens = merge_template(cluster.tokens, tokens);
        ++cluster.occurrences;
        return *found;
    }
    const auto index = clusters_.size();
    clusters_.push_back(Cluster{tokens, 1, line_index});
    insert_leaf(tokens).clusters.push_back(index);
    return index;
}

std::vector<EventTemplate> ParseTree::templates() const {
    std::vector<EventTemplate> out;
    out.reserve(clusters_.size());
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
        out.push_back({event_id_for(i), text::join(clusters_[i].tokens, " "),
                       clusters_[i].occurrences});
    }
    return out;
}

ParseResult parse_lines(std::span<const std::string> lines, const DrainConfig& config) {
    if (lines.empty()) throw EmptyInputError("parse_lines: no lines to parse");

    LinePreprocessor preprocess(config);
    ParseTree tree(config);
    ParseResult result;
    result.structured.header_names = preprocess.header_names();
    result.structured.rows.reserve(lines.size());

    std::vector<std::size_t> assignment;
    assignment.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto pre = preprocess(lines[i]);
        assignment.push_back(tree.add(pre.tokens, i));
        result.structured.rows.push_back(
            {i + 1, std::move(pre.header_fields), std::move(pre.content), {}});
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        result.structured.rows[i].event_id = event_id_for(assignment[i]);
    }
    result.templates = tree.templates();
    return result;
}

}  // namespace loglens::parsing
