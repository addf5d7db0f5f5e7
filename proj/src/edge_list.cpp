#include "hcent/edge_list.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hcent/errors.hpp"

namespace hcent {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
            ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
            ++pos;
        if (pos > start)
            fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

std::uint32_t parse_id(std::string_view field, std::size_t line_no) {
    std::uint32_t value = 0;
    const char *end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                             std::string(field) + "'",
                         line_no);
    return value;
}

struct RawDocument {
    std::optional<std::uint32_t> declared_order;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::optional<std::string> family_comment;
    std::uint32_t max_id = 0;
    bool saw_edge = false;
};

RawDocument scan(std::istream &in) {
    RawDocument doc;
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view trimmed = trim(line);
        if (trimmed.empty())
            continue;
        if (trimmed.front() == '#') {
            constexpr std::string_view kFamilyTag = "# family:";
            if (trimmed.substr(0, kFamilyTag.size()) == kFamilyTag)
                doc.family_comment = std::string(trim(trimmed.substr(kFamilyTag.size())));
            continue;
        }

        const auto fields = split_fields(trimmed);
        if (header_allowed && fields.size() == 2 && fields[0] == "order") {
            doc.declared_order = parse_id(fields[1], line_no);
            header_allowed = false;
            continue;
        }
        header_allowed = false;

        if (fields.size() != 2)
            throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'u v', got '" + std::string(trimmed) + "'",
                             line_no);
        const VertexId u = parse_id(fields[0], line_no);
        const VertexId v = parse_id(fields[1], line_no);
        if (u == v)
            throw SelfLoop("line " + std::to_string(line_no) + ": self loop at vertex " +
                           std::to_string(u));
        if (doc.declared_order && (u >= *doc.declared_order || v >= *doc.declared_order))
            throw InvalidVertex("line " + std::to_string(line_no) + ": vertex " +
                                std::to_string(u >= *doc.declared_order ? u : v) +
                                " outside declared order " + std::to_string(*doc.declared_order));
        doc.edges.emplace_back(u, v);
        doc.max_id = std::max({doc.max_id, u, v});
        doc.saw_edge = true;
    }
    return doc;
}

Graph build(const RawDocument &doc) {
    if (!doc.declared_order && !doc.saw_edge)
        throw ParseError("empty edge list: no edges and no 'order N' header");
    const std::uint32_t order = doc.declared_order ? *doc.declared_order : doc.max_id + 1;
    return Graph::from_edge_list(order, doc.edges);
}

} // namespace

Graph parse_edge_list(std::istream &in) {
    return build(scan(in));
}

Graph parse_edge_list(const std::string &text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

ParsedDocument parse_edge_list_document(std::istream &in) {
    const RawDocument raw = scan(in);
    ParsedDocument doc{build(raw), std::nullopt};
    if (raw.family_comment) {
        try {
            const FamilySpec spec = parse_family_spec(*raw.family_comment);
            if (generate(spec).graph == doc.graph)
                doc.family = spec;
        } catch (const Error &) {
            // stale or edited header; keep the plain graph
        }
    }
    return doc;
}

void write_edge_list(const LabeledGraph &labeled, std::ostream &out) {
    out << "# family: " << to_string(labeled.spec) << "\n";
    for (VertexId v = 0; v < labeled.graph.order(); ++v)
        out << "# label: " << v << " " << labeled.labels[v] << "\n";
    out << "order " << labeled.graph.order() << "\n";
    for (const auto &[u, v] : labeled.graph.edges())
        out << u << " " << v << "\n";
}

void write_dot(const LabeledGraph &labeled, std::ostream &out) {
    out << "graph \"" << to_string(labeled.spec) << "\" {\n";
    for (VertexId v = 0; v < labeled.graph.order(); ++v)
        out << "  " << v << " [label=\"" << labeled.labels[v] << "\"];\n";
    for (const auto &[u, v] : labeled.graph.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

} // namespace hcent
