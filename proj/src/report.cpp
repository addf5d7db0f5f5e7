#include "hcent/report.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

namespace hcent {

namespace {

ReportDocument from_centrality(const CentralityReport &centrality, const LabeledGraph *labeled) {
    ReportDocument doc{centrality.order, std::nullopt, {}, centrality.ranking};
    if (labeled != nullptr)
        doc.family = to_string(labeled->spec);
    doc.rows.reserve(centrality.values.size());
    for (const auto &value : centrality.values) {
        ReportRow row{value.vertex,
                      labeled ? labeled->labels[value.vertex] : std::to_string(value.vertex),
                      labeled ? to_string(labeled->roles[value.vertex]) : std::string{},
                      value.raw, value.normalized};
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

void write_text(const ReportDocument &doc, bool include_raw, std::ostream &out) {
    out << "order: " << doc.order << "\n";
    if (doc.family)
        out << "family: " << *doc.family << "\n";

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head = {"id", "label", "role", "normalized", "decimal"};
    if (include_raw)
        head.push_back("raw");
    cells.push_back(std::move(head));
    for (const auto &row : doc.rows) {
        std::vector<std::string> line = {std::to_string(row.id), row.label,
                                         row.role.empty() ? "-" : row.role,
                                         row.normalized.to_string(), row.normalized.to_decimal()};
        if (include_raw)
            line.push_back(row.raw.to_string());
        cells.push_back(std::move(line));
    }

    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto &line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    for (const auto &line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0)
                out << "  ";
            out << line[c];
            if (c + 1 < line.size())
                out << std::string(width[c] - line[c].size(), ' ');
        }
        out << "\n";
    }

    out << "ranking:";
    for (VertexId v : doc.ranking)
        out << " " << v;
    out << "\n";
}

void write_json(const ReportDocument &doc, bool include_raw, std::ostream &out) {
    nlohmann::ordered_json j;
    j["order"] = doc.order;
    if (doc.family)
        j["family"] = *doc.family;
    j["values"] = nlohmann::ordered_json::array();
    for (const auto &row : doc.rows) {
        nlohmann::ordered_json entry;
        entry["id"] = row.id;
        entry["label"] = row.label;
        if (!row.role.empty())
            entry["role"] = row.role;
        if (include_raw)
            entry["raw"] = row.raw.to_string();
        entry["normalized"] = row.normalized.to_string();
        entry["decimal"] = row.normalized.to_decimal();
        j["values"].push_back(std::move(entry));
    }
    j["ranking"] = doc.ranking;
    out << j.dump(2) << "\n";
}

void write_csv(const ReportDocument &doc, bool include_raw, std::ostream &out) {
    // Fixed column order id,label,role,raw,normalized,decimal; the raw
    // column is present only when requested.
    out << (include_raw ? "id,label,role,raw,normalized,decimal"
                        : "id,label,role,normalized,decimal")
        << "\n";
    for (const auto &row : doc.rows) {
        out << row.id << "," << row.label << "," << row.role << ",";
        if (include_raw)
            out << row.raw.to_string() << ",";
        out << row.normalized.to_string() << "," << row.normalized.to_decimal() << "\n";
    }
}

} // namespace

ReportDocument build_report(const Graph &g) {
    return from_centrality(centrality_report(g), nullptr);
}

ReportDocument build_report(const LabeledGraph &labeled) {
    return from_centrality(centrality_report(labeled.graph), &labeled);
}

void write_report(const ReportDocument &doc, ReportFormat format, bool include_raw,
                  std::ostream &out) {
    switch (format) {
    case ReportFormat::text:
        write_text(doc, include_raw, out);
        return;
    case ReportFormat::json:
        write_json(doc, include_raw, out);
        return;
    case ReportFormat::csv:
        write_csv(doc, include_raw, out);
        return;
    }
}

} // namespace hcent
