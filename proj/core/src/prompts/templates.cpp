#include "loglens/prompts/templates.hpp"

#include "loglens/common/text.hpp"

namespace loglens::prompts {

const std::string_view kSystemMessage =
    "You are a Log Analyst. Your goal is to answer questions as accurately as possible "
    "based on the instructions and context provided.";

std::string render_llama_frame(std::string_view query_str) {
    std::string out =
        "<|begin_of_text|><|start_header_id|>system<|end_header_id|> ";
    out += kSystemMessage;
    out += "<|eot_id|><|start_header_id|>user<|end_header_id|> ";
    out += query_str;
    out += "<|eot_id|><|start_header_id|>assistant<|end_header_id|>";
    return out;
}

std::string render_recognizer(const std::vector<std::string>& categories,
                              const std::vector<std::string>& log_lines) {
    const auto cats = text::py_repr(categories);
    std::string out =
        "You are a log expert tasked with categorizing a provided log line. The categories are: ";
    out += cats;
    out += ".\nCategorize the provided log lines into one of the categories:";
    out += cats;
    out += ", assuming those logs share a single category.\n"
           "Return a JSON object with a single key \"category\" without any preamble, special "
           "characters, or explanation.\n"
           "Log:\n";
    out += text::join(log_lines, "\n");
    return out;
}

std::string render_router_level1(std::string_view question) {
    std::string out =
        "You are an expert at routing user questions to the 'all', 'partial', or 'general' "
        "stage.\n"
        "To answer the user's question, you must analyze how the question relates to the log "
        "content \n"
        "and decide whether to retrieve all, partial, or no logs from the log file.\n"
        "- Use 'all' for questions requiring the entire log file to answer. \n"
        "- Use 'partial' for questions requiring only a specific part or chunk of the log file "
        "to answer. \n"
        "- Use 'general' for questions that can be answered without needing to retrieve any "
        "logs. \n"
        "Return a JSON as plaintext with a single key 'choice' based on the question without "
        "any preamble, special characters, or explanation.\n"
        "Question to route: ";
    out += question;
    return out;
}

std::string render_router_level2(std::string_view question) {
    std::string out =
        "You are an expert at routing user questions to the 'keyword', 'event', or 'se' stage.\n"
        "Use 'keyword' if the question requires using a search tool to find relevant "
        "information. If the question does not have clear keywords, try using 'semantic' "
        "instead.\n"
        "- Use 'event' if the question is related to a specific event or log template in the "
        "log file.\n"
        "- Use 'semantic' if the question asks for specific information that can be retrieved "
        "from a vector database.\n"
        "Return a JSON as plaintext with a single key 'choice' based on the question without "
        "any preamble, special characters, or explanation. If 'keyword' is chosen, also return "
        "'keywords' as a list.  If 'event' is chosen, also return 'events' as a list. \n"
        "Question to route: ";
    out += question;
    return out;
}

std::string render_all_event(const AllEventContext& ctx) {
    std::string out = "Context information is below.\nLog file name ";
    out += ctx.log_file_name;
    out += "\nAll the events in this log file, which is a CSV file, contain three columns: "
           "EventId,EventTemplate,Occurrences\n";
    out += text::join(ctx.template_rows, "\n");
    out += "\nThe first line of the log file: ";
    out += text::strip(ctx.first_line);
    out += "\nThe Last line of the log file: ";
    out += text::strip(ctx.last_line);
    out += "\nThe log file contains ";
    out += std::to_string(ctx.line_count);
    out += " lines\nThere are ";
    out += std::to_string(ctx.template_count);
    out += " log events in the log file.\n"
           "The log period can be indicated in the first and last lines of the log file.\n"
           "Given the context information, answer the query.\n"
           "Query: ";
    out += ctx.question;
    out += "\nAnswer:";
    return out;
}

std::string render_retrieve(std::string_view context_str, std::string_view query_str) {
    std::string out = " Context information is below.\n---------------------\n";
    out += context_str;
    out += "\n---------------------\n"
           "Given the context information and not prior knowledge, answer the query.\n"
           "Query: ";
    out += query_str;
    out += "\nAnswer:";
    return out;
}

namespace {

std::string matched_header(const MatchedLinesContext& ctx, std::string_view matched_by) {
    std::string out = "There are ";
    out += std::to_string(ctx.total);
    out += " lines were matched by ";
    out += matched_by;
    out += ": ";
    out += ctx.selector;
    out += ".\n";
    if (ctx.truncated) {
        out += "The context is too long, and it has been trimmed to ";
        out += std::to_string(ctx.max_lines);
        out += " lines.\n";
    }
    return out;
}

std::string matched_footer(const MatchedLinesContext& ctx) {
    std::string out =
        "Focus on the total number if the user asks a question about how many.\nContext: ";
    out += ctx.context;
    out += "\nQuestion: ";
    out += ctx.question;
    out += '.';
    return out;
}

}  // namespace

std::string render_search(const MatchedLinesContext& ctx) {
    return matched_header(ctx, "keywords") + matched_footer(ctx);
}

std::string render_event(const MatchedLinesContext& ctx, std::string_view relevant_events) {
    std::string out = matched_header(ctx, "events");
    out += "All relevant events are: ";
    out += relevant_events;
    out += '\n';
    return out + matched_footer(ctx);
}

}  // namespace loglens::prompts
