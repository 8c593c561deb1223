#include "loglens/gateway/model_gateway.hpp"

#include <cmath>

#include "loglens/common/errors.hpp"

namespace loglens::gateway {

void ChatRequest::validate() const {
    if (user_text.empty()) throw PreconditionError("chat request has empty user text");
    if (!(temperature >= 0.0 && temperature <= 2.0)) {
        throw PreconditionError("chat temperature must lie in [0, 2]");
    }
}

std::string ModelGateway::chat_complete(const ChatRequest& request) const {
    request.validate();
    return do_chat(request);
}

std::vector<Embedding> ModelGateway::embed(std::span<const std::string> texts) const {
    if (texts.empty()) throw PreconditionError("embed called with no texts");
    auto vectors = do_embed(texts);
    if (vectors.size() != texts.size()) {
        throw GatewayError(GatewayErrorCategory::MalformedResponse,
                           "embedding backend returned " + std::to_string(vectors.size()) +
                               " vectors for " + std::to_string(texts.size()) + " texts");
    }
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size()) {
            throw DimensionMismatchError("embedding backend returned inconsistent dimensions");
        }
        for (float x : v) {
            if (!std::isfinite(x)) {
                throw GatewayError(GatewayErrorCategory::MalformedResponse,
                                   "embedding backend returned a non-finite component");
            }
        }
    }
    return vectors;
}

}  // namespace loglens::gateway
