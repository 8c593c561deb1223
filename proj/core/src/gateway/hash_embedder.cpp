#include "loglens/gateway/hash_embedder.hpp"

#include <cmath>

#include "loglens/common/text.hpp"

namespace loglens::gateway {

Embedding HashEmbedder::operator()(std::string_view text) const {
    std::vector<double> acc(dim_, 0.0);
    for (const auto& word : text::split_whitespace(text)) {
        acc[text::fnv1a64(text::to_lower(word)) % dim_] += 1.0;
    }
    double norm = 0.0;
    for (double x : acc) norm += x * x;
    norm = std::sqrt(norm);

    Embedding out(dim_, 0.0f);
    if (norm > 0.0) {
        for (std::size_t i = 0; i < dim_; ++i) out[i] = static_cast<float>(acc[i] / norm);
    }
    return out;
}

}  // namespace loglens::gateway
