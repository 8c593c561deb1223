#include "loglens/parsing/export.hpp"

#include "loglens/common/csv.hpp"

namespace loglens::parsing {

std::vector<std::string> template_csv_rows(std::span<const EventTemplate> templates) {
    std::vector<std::string> rows;
    rows.reserve(templates.size());
    for (const auto& t : templates) {
        auto row = csv::format_row({t.event_id, t.template_text, std::to_string(t.occurrences)});
        row.pop_back();  // trailing newline
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string export_templates_csv(std::span<const EventTemplate> templates) {
    std::string out(kTemplatesCsvHeader);
    out += '\n';
    for (const auto& row : template_csv_rows(templates)) {
        out += row;
        out += '\n';
    }
    return out;
}

std::string export_structured_csv(const StructuredLog& structured) {
    std::vector<std::string> header{"LineId"};
    header.insert(header.end(), structured.header_names.begin(), structured.header_names.end());
    header.emplace_back("Content");
    header.emplace_back("EventId");

    std::string out = csv::format_row(header);
    for (const auto& row : structured.rows) {
        std::vector<std::string> fields{std::to_string(row.line_id)};
        fields.insert(fields.end(), row.header_fields.begin(), row.header_fields.end());
        fields.push_back(row.content);
        fields.push_back(row.event_id);
        out += csv::format_row(fields);
    }
    return out;
}

}  // namespace loglens::parsing
