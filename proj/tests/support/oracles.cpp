#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <regex>

namespace loglens::testing {

namespace {

const std::string kStar = "<*>";

bool has_digit(const std::string& s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::string lower(std::string s) {
    for (auto& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return s;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ' ';
        out += parts[i];
    }
    return out;
}

constexpr std::array<const char*, 40> kVocabulary = {
    "error",   "Error",    "ERROR",   "warn",     "info",    "disk",    "net",     "timeout",
    "user",    "session",  "opened",  "closed",   "for",     "to",      "from",    "block",
    "packet",  "received", "sent",    "failed",   "retry",   "connect", "socket",  "kernel",
    "daemon",  "root",     "mount",   "unmount",  "cache",   "flush",   "the",     "a",
    "on",      "of",       "node",    "service",  "start",   "stop",    "state",   "ok",
};

}  // namespace

// ------------------------------------------------------------------ Drain --

DrainOracle::DrainOracle(double st, int depth, int max_children)
    : st_(st),
      layers_(static_cast<std::size_t>(std::max(depth, 3) - 2)),
      max_children_(static_cast<std::size_t>(std::max(max_children, 1))) {}

std::size_t DrainOracle::add(const std::vector<std::string>& tokens) {
    const std::string length_key = std::to_string(tokens.size());
    const std::size_t layers = std::min(layers_, tokens.size());

    // Search.
    std::vector<std::string> path;
    bool reachable = children_[{}].count(length_key) > 0;
    if (reachable) {
        path.push_back(length_key);
        for (std::size_t i = 0; i < layers; ++i) {
            const auto& kids = children_[path];
            if (kids.count(tokens[i])) {
                path.push_back(tokens[i]);
            } else if (kids.count(kStar)) {
                path.push_back(kStar);
            } else {
                reachable = false;
                break;
            }
        }
    }
    if (reachable) {
        long best = -1;
        double best_sim = -1.0;
        std::size_t best_wild = 0;
        for (std::size_t c = 0; c < clusters_.size(); ++c) {
            if (clusters_[c].path != path) continue;
            const auto& tmpl = clusters_[c].tokens;
            std::size_t same = 0, wild = 0;
            for (std::size_t i = 0; i < tmpl.size(); ++i) {
                if (tmpl[i] == kStar) {
                    ++wild;
                } else if (tmpl[i] == tokens[i]) {
                    ++same;
                }
            }
            const double sim = tmpl.empty() ? 1.0 : double(same) / double(tmpl.size());
            if (sim > best_sim || (sim == best_sim && wild > best_wild)) {
                best = static_cast<long>(c);
                best_sim = sim;
                best_wild = wild;
            }
        }
        if (best >= 0 && best_sim >= st_) {
            auto& cluster = clusters_[static_cast<std::size_t>(best)];
            for (std::size_t i = 0; i < tokens.size(); ++i) {
                if (cluster.tokens[i] != tokens[i]) cluster.tokens[i] = kStar;
            }
            ++cluster.occurrences;
            return static_cast<std::size_t>(best);
        }
    }

    // Insert.
    path.clear();
    children_[{}].insert(length_key);
    path.push_back(length_key);
    for (std::size_t i = 0; i < layers; ++i) {
        auto& kids = children_[path];
        const std::size_t keyed = kids.size() - kids.count(kStar);
        std::string key;
        if (has_digit(tokens[i])) {
            key = kStar;
        } else if (kids.count(tokens[i])) {
            key = tokens[i];
        } else if (tokens[i] == kStar || keyed < max_children_) {
            key = tokens[i];
        } else {
            key = kStar;
        }
        kids.insert(key);
        path.push_back(key);
    }
    clusters_.push_back({path, tokens, 1});
    return clusters_.size() - 1;
}

std::vector<std::string> DrainOracle::templates() const {
    std::vector<std::string> out;
    for (const auto& c : clusters_) out.push_back(join(c.tokens));
    return out;
}

std::vector<std::size_t> DrainOracle::occurrences() const {
    std::vector<std::size_t> out;
    for (const auto& c : clusters_) out.push_back(c.occurrences);
    return out;
}

// ----------------------------------------------------------------- Search --

std::vector<OracleMatch> keyword_scan(const std::vector<std::string>& lines,
                                      const std::vector<std::string>& keywords) {
    std::vector<OracleMatch> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto haystack = lower(lines[i]);
        for (const auto& k : keywords) {
            if (haystack.find(lower(k)) != std::string::npos) {
                out.push_back({i + 1, lines[i]});
                break;
            }
        }
    }
    return out;
}

std::vector<OracleMatch> event_scan(const std::vector<std::string>& lines,
                                    const std::vector<std::string>& line_events,
                                    const std::vector<std::string>& wanted_ids) {
    std::vector<OracleMatch> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (const auto& id : wanted_ids) {
            if (lower(id) == lower(line_events[i])) {
                out.push_back({i + 1, lines[i]});
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- Metrics --

std::vector<std::string> oracle_tokens(const std::string& text) {
    static const std::regex word("[A-Za-z0-9]+");
    std::vector<std::string> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), word);
         it != std::sregex_iterator(); ++it) {
        out.push_back(lower(it->str()));
    }
    return out;
}

double oracle_cosine(const std::string& a, const std::string& b) {
    const auto ta = oracle_tokens(a);
    const auto tb = oracle_tokens(b);
    std::vector<std::string> vocab;
    for (const auto* list : {&ta, &tb}) {
        for (const auto& t : *list) {
            bool seen = false;
            for (const auto& v : vocab) seen = seen || v == t;
            if (!seen) vocab.push_back(t);
        }
    }
    double dot = 0, na = 0, nb = 0;
    for (const auto& v : vocab) {
        double ca = 0, cb = 0;
        for (const auto& t : ta) ca += (t == v);
        for (const auto& t : tb) cb += (t == v);
        dot += ca * cb;
        na += ca * ca;
        nb += cb * cb;
    }
    if (na == 0 || nb == 0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

OracleRouge oracle_rouge1(const std::string& candidate, const std::string& reference) {
    const auto cand = oracle_tokens(candidate);
    const auto ref = oracle_tokens(reference);
    // Greedy one-to-one pairing of equal tokens gives the clipped overlap.
    std::vector<bool> used(ref.size(), false);
    double overlap = 0;
    for (const auto& c : cand) {
        for (std::size_t j = 0; j < ref.size(); ++j) {
            if (!used[j] && ref[j] == c) {
                used[j] = true;
                overlap += 1;
                break;
            }
        }
    }
    OracleRouge r{};
    r.precision = cand.empty() ? 0.0 : overlap / double(cand.size());
    r.recall = ref.empty() ? 0.0 : overlap / double(ref.size());
    r.f1 = (r.precision + r.recall) > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall)
                                        : 0.0;
    return r;
}

// -------------------------------------------------------------- Synthetic --

std::string random_word(std::mt19937_64& rng) {
    return kVocabulary[std::uniform_int_distribution<std::size_t>(0, kVocabulary.size() - 1)(rng)];
}

std::string random_phrase(std::mt19937_64& rng, std::size_t min_words, std::size_t max_words) {
    const auto n = std::uniform_int_distribution<std::size_t>(min_words, max_words)(rng);
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += (rng() % 5 == 0) ? ", " : " ";
        out += random_word(rng);
    }
    return out;
}

SyntheticLog random_log(std::mt19937_64& rng, std::size_t line_count) {
    // Each template slot is either a fixed word or a variable of some kind.
    enum class Slot { Fixed, Number, Word, Hex };
    struct Shape {
        std::vector<std::pair<Slot, std::string>> slots;
    };
    const auto shape_count = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<Shape> shapes;
    for (int s = 0; s < shape_count; ++s) {
        Shape shape;
        const auto len = std::uniform_int_distribution<int>(0, 9)(rng);
        for (int i = 0; i < len; ++i) {
            const auto roll = rng() % 10;
            if (roll < 6) {
                shape.slots.push_back({Slot::Fixed, random_word(rng)});
            } else if (roll < 8) {
                shape.slots.push_back({Slot::Number, {}});
            } else if (roll < 9) {
                shape.slots.push_back({Slot::Word, {}});
            } else {
                shape.slots.push_back({Slot::Hex, {}});
            }
        }
        shapes.push_back(std::move(shape));
    }

    SyntheticLog log;
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    for (std::size_t n = 0; n < line_count; ++n) {
        const auto& shape = shapes[pick(rng)];
        std::string line;
        for (std::size_t i = 0; i < shape.slots.size(); ++i) {
            if (i) line += (rng() % 17 == 0) ? "  " : " ";
            switch (shape.slots[i].first) {
                case Slot::Fixed: line += shape.slots[i].second; break;
                case Slot::Number: line += std::to_string(rng() % 100000); break;
                case Slot::Word: line += random_word(rng); break;
                case Slot::Hex: {
                    static const char* digits = "0123456789abcdef";
                    line += "0x";
                    for (int k = 0; k < 6; ++k) line += digits[rng() % 16];
                    break;
                }
            }
        }
        log.lines.push_back(std::move(line));
    }
    return log;
}

}  // namespace loglens::testing
