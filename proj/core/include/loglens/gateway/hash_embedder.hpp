#pragma once

#include <cstddef>
#include <string_view>

#include "loglens/gateway/model_gateway.hpp"

namespace loglens::gateway {

/// Offline embedder: lowercased whitespace words hashed (FNV-1a) into a
/// fixed number of buckets, then L2-normalized. Text with no words maps to
/// the zero vector.
class HashEmbedder {
public:
    static constexpr std::size_t kDefaultDim = 256;

    explicit HashEmbedder(std::size_t dim = kDefaultDim) : dim_(dim) {}

    Embedding operator()(std::string_view text) const;
    std::size_t dim() const noexcept { return dim_; }

private:
    std::size_t dim_;
};

}  // namespace loglens::gateway
