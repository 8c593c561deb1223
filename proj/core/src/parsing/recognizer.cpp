#include "loglens/parsing/recognizer.hpp"

#include <algorithm>

#include "loglens/common/errors.hpp"
#include "loglens/common/json_extract.hpp"
#include "loglens/prompts/templates.hpp"

namespace loglens::parsing {

namespace {

std::optional<std::string> category_field(const std::string& reply) {
    auto obj = extract_json_object(reply);
    if (!obj) return std::nullopt;
    auto it = obj->find("category");
    if (it == obj->end() || !it->is_string()) return std::nullopt;
    return it->get<std::string>();
}

}  // namespace

LogCategory identify_log_type(std::span<const std::string> sample_lines,
                              const gateway::ModelGateway& gateway) {
    if (sample_lines.empty()) throw EmptyInputError("identify_log_type: no sample lines");

    std::vector<std::string> names;
    for (auto c : all_categories()) names.emplace_back(to_string(c));
    const auto take = std::min(sample_lines.size(), kRecognizerSampleLines);
    std::vector<std::string> sample(sample_lines.begin(), sample_lines.begin() + take);

    gateway::ChatRequest request;
    request.system_text = std::string(prompts::kSystemMessage);
    request.user_text = prompts::render_recognizer(names, sample);
    request.temperature = gateway.default_temperature();
    request.model_name = gateway.chat_model();

    std::string last_answer;
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto named = category_field(gateway.chat_complete(request));
        if (!named) continue;
        if (auto category = category_from_string(*named)) return *category;
        last_answer = *named;
    }
    if (last_answer.empty()) {
        throw UnknownCategoryError(
            "log recognizer reply had no usable category; pass a category override");
    }
    throw UnknownCategoryError("log recognizer answered unsupported category '" + last_answer +
                               "'; pass a category override");
}

}  // namespace loglens::parsing
